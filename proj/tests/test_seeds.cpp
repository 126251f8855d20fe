#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "genmat/genmat.hpp"

using namespace genmat;

namespace {

const RankQueryConfig kConfig{};

std::vector<SemisimpleGraph> all_simple_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<SemisimpleGraph> graphs;
  for (int mask = 0; mask < (1 << slots.size()); ++mask) {
    EdgeList edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask & (1 << i)) edges.push_back(slots[i]);
    graphs.emplace_back(n, edges);
  }
  return graphs;
}

std::vector<int> bits_to_set(int mask, int n) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (mask & (1 << v)) out.push_back(v);
  return out;
}

// Direct quantifier form: from every proper superset of K some vertex is
// still addable.
bool always_extendable(const SemisimpleGraph& g, int d, int k_mask) {
  int n = g.vertex_count();
  auto adj = g.adjacency();
  for (int mask = 0; mask < (1 << n); ++mask) {
    if ((mask & k_mask) != k_mask || mask == (1 << n) - 1) continue;
    bool found = false;
    for (int x = 0; x < n && !found; ++x) {
      if (mask & (1 << x)) continue;
      int have = 0;
      for (int w : adj[x]) {
        if (w == x || (mask & (1 << w))) ++have;
      }
      found = have >= d;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("greedy closure on hand-checked instances") {
  SemisimpleGraph path(4, {{0, 1}, {1, 2}, {2, 3}});
  REQUIRE(greedy_closure(path, 1, {0}) == std::vector<int>{0, 1, 2, 3});
  BipartiteGraph k22 = complete_bipartite(2, 2);
  REQUIRE(greedy_closure(k22, 2, {0, 1}) == std::vector<int>{0, 1, 2, 3});
  REQUIRE(greedy_closure(complete_graph(4), 3, {0}) == std::vector<int>{0});
  REQUIRE(greedy_closure(path, 1, {}) == std::vector<int>{});
  REQUIRE_THROWS_AS(greedy_closure(path, 0, {0}), std::invalid_argument);
  REQUIRE_THROWS_AS(greedy_closure(path, 1, {7}), std::invalid_argument);
  // A loop lets the vertex count itself.
  SemisimpleGraph looped(2, {{0, 1}, {1, 1}});
  REQUIRE(greedy_closure(looped, 2, {0}) == std::vector<int>{0, 1});
}

TEST_CASE("greedy closure is monotone and idempotent") {
  for (const SemisimpleGraph& g : all_simple_graphs(4)) {
    for (int d = 1; d <= 3; ++d) {
      for (int k_mask = 0; k_mask < 16; ++k_mask) {
        auto k_set = bits_to_set(k_mask, 4);
        auto closed = greedy_closure(g, d, k_set);
        REQUIRE(greedy_closure(g, d, closed) == closed);
        for (int bigger = k_mask; bigger < 16; ++bigger) {
          if ((bigger & k_mask) != k_mask) continue;
          auto closed_bigger = greedy_closure(g, d, bits_to_set(bigger, 4));
          REQUIRE(std::includes(closed_bigger.begin(), closed_bigger.end(), closed.begin(),
                                closed.end()));
        }
      }
    }
  }
}

TEST_CASE("greedy closure matches the quantifier definition of spanning") {
  for (const SemisimpleGraph& g : all_simple_graphs(4)) {
    for (int d = 1; d <= 2; ++d) {
      for (int k_mask = 0; k_mask < 16; ++k_mask) {
        auto closed = greedy_closure(g, d, bits_to_set(k_mask, 4));
        bool reaches_all = static_cast<int>(closed.size()) == 4;
        CAPTURE(d, k_mask);
        REQUIRE(reaches_all == always_extendable(g, d, k_mask));
      }
    }
  }
}

TEST_CASE("seed verification on known instances") {
  MatroidKind hyper2 = MatroidKind::hyperconnectivity(2);
  SemisimpleGraph k5 = complete_graph(5);
  std::vector<int> everything{0, 1, 2, 3, 4};
  auto full = is_seed(k5, hyper2, everything, kConfig);
  REQUIRE(full.has_value());
  REQUIRE(full->seed_vertices == everything);
  REQUIRE(full->elimination_order.empty());

  auto pair_seed = is_seed(k5, hyper2, {0, 1}, kConfig);
  REQUIRE(pair_seed.has_value());
  REQUIRE(pair_seed->elimination_order.size() == 3);
  REQUIRE(pair_seed->basis_edges == EdgeList{{0, 1}});
  for (const auto& witness_list : pair_seed->witnesses) {
    REQUIRE(witness_list.size() >= 2);
  }

  // Witnesses must lie among vertices present at insertion time.
  std::set<int> present{0, 1};
  for (std::size_t i = 0; i < pair_seed->elimination_order.size(); ++i) {
    int v = pair_seed->elimination_order[i];
    for (int w : pair_seed->witnesses[i]) {
      REQUIRE((present.count(w) == 1 || w == v));
    }
    present.insert(v);
  }

  // The closure cannot cross components.
  SemisimpleGraph doubled(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                              {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}});
  REQUIRE_FALSE(is_seed(doubled, hyper2, {0, 1, 2, 3}, kConfig).has_value());

  // Rank split can fail even when the closure reaches everything.
  SemisimpleGraph k33 = complete_bipartite(3, 3).to_semisimple();
  REQUIRE_FALSE(is_seed(k33, hyper2, {0, 3}, kConfig).has_value());
}

TEST_CASE("certificates replay into a basis") {
  struct Instance {
    SemisimpleGraph graph;
    MatroidKind kind;
    std::vector<int> seed;
  };
  std::vector<Instance> instances = {
      {complete_graph(5), MatroidKind::hyperconnectivity(2), {0, 1}},
      {complete_graph(6), MatroidKind::hyperconnectivity(3), {0, 1, 2}},
      {complete_semisimple(5), MatroidKind::sym_completion(2), {0}},
  };
  for (const auto& [graph, kind, seed] : instances) {
    auto certificate = is_seed(graph, kind, seed, kConfig);
    REQUIRE(certificate.has_value());
    int d = kind.dim();
    EdgeList replay = certificate->basis_edges;
    for (std::size_t i = 0; i < certificate->elimination_order.size(); ++i) {
      int v = certificate->elimination_order[i];
      for (int t = 0; t < d; ++t) {
        int w = certificate->witnesses[i][t];
        replay.emplace_back(std::min(v, w), std::max(v, w));
      }
    }
    SemisimpleGraph basis_graph(graph.vertex_count(), replay);
    REQUIRE(basis_graph.edge_count() == static_cast<int>(replay.size()));  // no collisions
    REQUIRE(generic_rank(basis_graph, kind, kConfig) == basis_graph.edge_count());
    REQUIRE(generic_rank(basis_graph, kind, kConfig) == generic_rank(graph, kind, kConfig));
  }
}

TEST_CASE("adding an eligible vertex keeps a seed a seed") {
  MatroidKind kind = MatroidKind::hyperconnectivity(2);
  SemisimpleGraph g = complete_graph(6);
  std::vector<int> seed{0, 1};
  REQUIRE(is_seed(g, kind, seed, kConfig).has_value());
  for (int v = 2; v < 6; ++v) {
    seed.push_back(v);
    REQUIRE(is_seed(g, kind, seed, kConfig).has_value());
  }
}

TEST_CASE("seed construction from a chain on complete hosts") {
  MatroidKind hyper2 = MatroidKind::hyperconnectivity(2);
  SemisimpleGraph k6 = complete_graph(6);
  std::vector<int> everything{0, 1, 2, 3, 4, 5};

  SeedChain trivial{{everything}};
  auto whole = find_seed(k6, hyper2, trivial, kConfig);
  REQUIRE(whole.seed_vertices == everything);

  SeedChain chain{{{0, 1}, everything}};
  auto seed = find_seed(k6, hyper2, chain, kConfig);
  REQUIRE(seed.seed_vertices == std::vector<int>{0, 1});

  BipartiteGraph k44 = complete_bipartite(4, 4);
  SeedChain bip_chain{{{0, 1, 4, 5}, {0, 1, 2, 3, 4, 5, 6, 7}}};
  auto bip_seed = find_seed(k44, MatroidKind::birigidity(2), bip_chain, kConfig);
  REQUIRE(bip_seed.seed_vertices.size() <= 8);

  SemisimpleGraph k5o = complete_semisimple(5);
  SeedChain loop_chain{{{0}, {0, 1, 2, 3, 4}}};
  auto loop_seed = find_seed(k5o, MatroidKind::sym_completion(1), loop_chain, kConfig);
  REQUIRE_FALSE(loop_seed.seed_vertices.empty());
}

TEST_CASE("seed construction rejects invalid chains") {
  MatroidKind kind = MatroidKind::hyperconnectivity(2);
  SemisimpleGraph k5 = complete_graph(5);
  REQUIRE_THROWS_AS(find_seed(k5, kind, SeedChain{}, kConfig), std::invalid_argument);
  REQUIRE_THROWS_AS(find_seed(k5, kind, SeedChain{{{0, 1}, {0, 2, 3}}}, kConfig),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(find_seed(k5, kind, SeedChain{{{0, 1}, {0, 1, 2}}}, kConfig),
                    std::invalid_argument);
  // Chain condition violated: vertex 3 has one neighbour in the lower level.
  SemisimpleGraph sparse(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  REQUIRE_THROWS_AS(find_seed(sparse, kind, SeedChain{{{0, 1, 2}, {0, 1, 2, 3}}}, kConfig),
                    std::invalid_argument);
}

TEST_CASE("seed size bound holds on randomized chains") {
  auto rng = substream(41, 0);
  MatroidKind kind = MatroidKind::hyperconnectivity(2);
  for (int trial = 0; trial < 15; ++trial) {
    int n = uniform_int(rng, 6, 9);
    SemisimpleGraph g = complete_graph(n);
    std::vector<int> x0 = sample_cover_set(g, 2, 0.3, rng);
    std::vector<int> everything(n);
    for (int v = 0; v < n; ++v) everything[v] = v;
    auto seed = find_seed(g, kind, SeedChain{{x0, everything}}, kConfig);
    long long bound = 2 * static_cast<long long>(x0.size()) * 4;  // 2 |X_0| d^(t+1)
    REQUIRE(static_cast<long long>(seed.seed_vertices.size()) * 1 <= bound);
    REQUIRE(is_seed(g, kind, seed.seed_vertices, kConfig).has_value());
  }
}

TEST_CASE("cover sets dominate every vertex d times") {
  auto rng = substream(42, 0);
  SemisimpleGraph g = complete_graph(12);
  auto check = [&](const std::vector<int>& x0, const auto& host, int d) {
    std::set<int> members(x0.begin(), x0.end());
    for (int v = 0; v < host.vertex_count(); ++v) {
      int have = 0;
      for (int w : host.neighbors(v)) have += members.count(w);
      REQUIRE(have >= d);
    }
  };
  check(sample_cover_set(g, 2, 0.125, rng), g, 2);
  check(sample_cover_set(g, 3, 0.0, rng), g, 3);
  REQUIRE(sample_cover_set(g, 2, 1.0, rng).size() == 12);

  BipartiteGraph b = complete_bipartite(5, 6);
  check(sample_cover_set(b, 2, 0.2, rng), b, 2);

  REQUIRE_THROWS_AS(sample_cover_set(SemisimpleGraph(3, {{0, 1}}), 2, 0.5, rng),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(sample_cover_set(g, 2, 1.5, rng), std::invalid_argument);

  auto greedy = greedy_cover_set(g, 2);
  check(greedy, g, 2);
  REQUIRE(greedy == greedy_cover_set(g, 2));
  check(greedy_cover_set(complete_bipartite(4, 7).to_semisimple(), 3),
        complete_bipartite(4, 7).to_semisimple(), 3);
}

TEST_CASE("deletable pairs satisfy the double rank drop") {
  MatroidKind hyper2 = MatroidKind::hyperconnectivity(2);
  SemisimpleGraph k8 = complete_graph(8);
  std::vector<int> everything8(8);
  for (int v = 0; v < 8; ++v) everything8[v] = v;
  auto seed = find_seed(k8, hyper2, SeedChain{{{0, 1}, everything8}}, kConfig);
  DeletablePair pair = deletable_pair(k8, hyper2, seed.seed_vertices, kConfig);
  REQUIRE(pair.rank_full == 13);
  REQUIRE(pair.rank_without_u == 11);
  REQUIRE(pair.rank_without_v == 11);
  REQUIRE(pair.rank_without_both == 9);
  REQUIRE(pair.u != pair.v);
  REQUIRE(k8.has_edge(pair.u, pair.v));

  MatroidKind sym2 = MatroidKind::sym_completion(2);
  SemisimpleGraph k6o = complete_semisimple(6);
  std::vector<int> everything6{0, 1, 2, 3, 4, 5};
  auto loop_seed = find_seed(k6o, sym2, SeedChain{{{0, 1}, everything6}}, kConfig);
  DeletablePair loop_pair = deletable_pair(k6o, sym2, loop_seed.seed_vertices, kConfig);
  REQUIRE(loop_pair.rank_full - loop_pair.rank_without_u == 2);
  REQUIRE(loop_pair.rank_full - loop_pair.rank_without_v == 2);
  REQUIRE(loop_pair.rank_full - loop_pair.rank_without_both == 4);
}

TEST_CASE("deletable pair preconditions") {
  MatroidKind kind = MatroidKind::hyperconnectivity(2);
  SemisimpleGraph k6 = complete_graph(6);
  std::vector<int> everything{0, 1, 2, 3, 4, 5};
  REQUIRE_THROWS_AS(deletable_pair(k6, kind, everything, kConfig),
                    std::invalid_argument);  // no non-loop edge outside K
  REQUIRE_THROWS_AS(deletable_pair(k6, kind, {0}, kConfig),
                    std::invalid_argument);  // a single vertex is not a seed here
  SemisimpleGraph cycle(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  REQUIRE_THROWS_AS(deletable_pair(cycle, MatroidKind::hyperconnectivity(1), {0}, kConfig),
                    std::invalid_argument);  // min degree 2 < d + 2
}

TEST_CASE("linked neighbour pairs from a rank-deficient edge") {
  MatroidKind hyper2 = MatroidKind::hyperconnectivity(2);
  SemisimpleGraph k8 = complete_graph(8);
  std::vector<int> everything8(8);
  for (int v = 0; v < 8; ++v) everything8[v] = v;
  auto seed = find_seed(k8, hyper2, SeedChain{{{0, 1}, everything8}}, kConfig);
  DeletablePair pair = deletable_pair(k8, hyper2, seed.seed_vertices, kConfig);
  EdgeList pairs = linked_neighbour_pairs(k8, hyper2, pair.u, pair.v, kConfig);
  REQUIRE_FALSE(pairs.empty());
  for (const auto& [x, y] : pairs) {
    REQUIRE(x != pair.u);
    REQUIRE(x != pair.v);
    REQUIRE(y != pair.u);
    REQUIRE(y != pair.v);
  }

  // Bipartite case: K_{5,5} minus a perfect matching still has deletable pairs.
  MatroidKind biri2 = MatroidKind::birigidity(2);
  BipartiteGraph g = complete_bipartite(5, 5);
  for (int i = 0; i < 5; ++i) g = g.delete_edge(i, 5 + i);
  std::vector<int> everything10(10);
  for (int v = 0; v < 10; ++v) everything10[v] = v;
  auto bseed = find_seed(g, biri2, SeedChain{{{0, 1, 5, 6}, everything10}}, kConfig);
  DeletablePair bpair = deletable_pair(g, biri2, bseed.seed_vertices, kConfig);
  EdgeList bpairs = linked_neighbour_pairs(g, biri2, bpair.u, bpair.v, kConfig);
  REQUIRE_FALSE(bpairs.empty());
  for (const auto& [x, y] : bpairs) {
    REQUIRE((x < 5) != (y < 5));
  }
}

TEST_CASE("linked neighbour pairs in the looped case") {
  MatroidKind sym2 = MatroidKind::sym_completion(2);
  SemisimpleGraph k4o = complete_semisimple(4);
  // Deleting any vertex drops the rank by exactly d here.
  EdgeList pairs = linked_neighbour_pairs(k4o, sym2, 0, 0, kConfig);
  REQUIRE(pairs == EdgeList{{1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("linked neighbour pair hypotheses are enforced") {
  MatroidKind hyper2 = MatroidKind::hyperconnectivity(2);
  SemisimpleGraph k8 = complete_graph(8);
  REQUIRE_THROWS_AS(linked_neighbour_pairs(k8, hyper2, 0, 0, kConfig), std::invalid_argument);
  // Two triangles sharing a vertex: deleting the edge {1, 2} ends split the
  // graph, so the rank drops by 3 instead of 2d = 2.
  SemisimpleGraph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  REQUIRE_THROWS_AS(linked_neighbour_pairs(bowtie, MatroidKind::hyperconnectivity(1), 1, 2, kConfig),
                    std::invalid_argument);
  SemisimpleGraph path(4, {{0, 1}, {1, 2}, {2, 3}});
  REQUIRE_THROWS_AS(linked_neighbour_pairs(path, MatroidKind::hyperconnectivity(1), 0, 2, kConfig),
                    std::invalid_argument);  // min degree below d + 1
  MatroidKind sym2 = MatroidKind::sym_completion(2);
  SemisimpleGraph no_loop = complete_graph(5);
  REQUIRE_THROWS_AS(linked_neighbour_pairs(no_loop, sym2, 2, 2, kConfig), std::invalid_argument);
}

TEST_CASE("biconnected seed search on complete bipartite hosts") {
  RankQueryConfig config;
  auto rng = substream(43, 0);
  BiconnectedSeedOutcome outcome = biconnected_seed(complete_bipartite(6, 6), 2, 3, config, rng);
  REQUIRE(outcome.failure.empty());
  REQUIRE(outcome.certificate.has_value());
  REQUIRE(outcome.cover.size() == 6);  // one side of K_{6,6}
  REQUIRE_FALSE(outcome.sample.empty());
  REQUIRE(is_seed(complete_bipartite(6, 6), MatroidKind::birigidity(2),
                  outcome.certificate->seed_vertices, config)
              .has_value());
}

TEST_CASE("biconnected seed search reports structured failures") {
  RankQueryConfig config;
  auto rng = substream(44, 0);
  BipartiteGraph path(2, 2, {{0, 0}, {1, 0}, {1, 1}});  // path on 4 vertices
  BiconnectedSeedOutcome outcome = biconnected_seed(path, 2, 3, config, rng);
  REQUIRE_FALSE(outcome.certificate.has_value());
  REQUIRE_FALSE(outcome.failure.empty());

  auto rng2 = substream(45, 0);
  BiconnectedSeedOutcome glued = biconnected_seed(critical_family(3, 4), 2, 3, config, rng2);
  REQUIRE(glued.certificate.has_value() == glued.failure.empty());
  if (glued.certificate) {
    REQUIRE(is_seed(critical_family(3, 4), MatroidKind::birigidity(2),
                    glued.certificate->seed_vertices, config)
                .has_value());
  }
}

TEST_CASE("biconnected seed search is deterministic given the stream") {
  RankQueryConfig config;
  auto rng1 = substream(46, 0);
  auto rng2 = substream(46, 0);
  auto a = biconnected_seed(complete_bipartite(5, 7), 2, 3, config, rng1);
  auto b = biconnected_seed(complete_bipartite(5, 7), 2, 3, config, rng2);
  REQUIRE(a.sample == b.sample);
  REQUIRE(a.failure == b.failure);
  REQUIRE(a.certificate.has_value() == b.certificate.has_value());
  if (a.certificate) {
    REQUIRE(a.certificate->seed_vertices == b.certificate->seed_vertices);
  }
}
