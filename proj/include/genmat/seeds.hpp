#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "genmat/connectivity.hpp"
#include "genmat/graph.hpp"
#include "genmat/matroids.hpp"
#include "genmat/rng.hpp"

namespace genmat {

// Witnesses that K generates the whole graph: the rank of G splits as
// r(G[K]) + d|V - K|, and the elimination order adds each remaining vertex
// with at least d neighbours among the vertices already present (the vertex
// itself counts when it has a loop).
struct SeedCertificate {
  std::vector<int> seed_vertices;           // K, ascending
  std::vector<int> elimination_order;       // V - K in greedy order
  std::vector<std::vector<int>> witnesses;  // available neighbours per added vertex
  EdgeList basis_edges;                     // basis of G[K], original labels
};

// Nested vertex sets X_0 through X_t = V; every vertex entering at level i
// must have at least d neighbours in the previous level.
struct SeedChain {
  std::vector<std::vector<int>> levels;
};

namespace detail {

struct ClosureTrace {
  std::vector<int> closure;  // ascending
  std::vector<int> order;
  std::vector<std::vector<int>> witnesses;
};

// Smallest-first greedy closure: repeatedly admits the smallest vertex x
// with |(current + x) cap N(x)| >= d. The closure itself is
// order-independent; the recorded order is this deterministic one.
template <class G>
ClosureTrace greedy_closure_trace(const G& g, int d, const std::vector<int>& start) {
  int n = g.vertex_count();
  std::vector<char> in_set(n, 0);
  for (int v : start) {
    if (v < 0 || v >= n) throw std::invalid_argument("greedy closure: vertex out of range");
    in_set[v] = 1;
  }
  auto adj = g.adjacency();
  ClosureTrace trace;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x = 0; x < n && !grew; ++x) {
      if (in_set[x]) continue;
      std::vector<int> available;
      for (int w : adj[x]) {
        if (in_set[w] || w == x) available.push_back(w);
      }
      if (static_cast<int>(available.size()) >= d) {
        in_set[x] = 1;
        trace.order.push_back(x);
        trace.witnesses.push_back(std::move(available));
        grew = true;
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (in_set[v]) trace.closure.push_back(v);
  }
  return trace;
}

// Row indices of a maximum-rank greedy basis over config.trials evaluation
// points, mapped to edges. Row order is canonical, so indices agree across
// trials; the first trial attaining the best rank wins.
template <class G>
EdgeList matroid_basis_edges(const G& g, MatroidKind kind, const RankQueryConfig& config) {
  PrimeField field(config.prime);
  std::vector<std::size_t> best;
  for (int t = 0; t < config.trials; ++t) {
    auto rng = substream(config.rng_seed, static_cast<std::uint64_t>(t));
    auto assignment = draw_assignment(g, kind, field, rng);
    auto basis = row_basis(build_matrix(g, kind, assignment, field), field);
    if (basis.size() > best.size()) best = std::move(basis);
  }
  EdgeList all = g.flat_edges();
  EdgeList edges;
  for (std::size_t index : best) edges.push_back(all[index]);
  return edges;
}

}  // namespace detail

// The unique maximal superset of `start` reachable by repeatedly adding any
// vertex with at least d neighbours among the current set and itself.
template <class G>
std::vector<int> greedy_closure(const G& g, int d, const std::vector<int>& start) {
  if (d < 1) throw std::invalid_argument("greedy_closure: dimension must be positive");
  return detail::greedy_closure_trace(g, d, start).closure;
}

// Certificate iff K is a seed: the greedy closure of K reaches V and
// r(G) = r(G[K]) + d|V - K| at the configured evaluation points.
template <class G>
std::optional<SeedCertificate> is_seed(const G& g, MatroidKind kind, const std::vector<int>& k_set,
                                       const RankQueryConfig& config) {
  int d = kind.dim();
  auto trace = detail::greedy_closure_trace(g, d, k_set);
  if (static_cast<int>(trace.closure.size()) != g.vertex_count()) return std::nullopt;
  std::vector<int> kernel = detail::sorted_unique(k_set);
  G inside = g.induced_subgraph(kernel);
  long long expected = generic_rank(inside, kind, config) +
                       static_cast<long long>(d) * (g.vertex_count() - static_cast<int>(kernel.size()));
  if (generic_rank(g, kind, config) != expected) return std::nullopt;
  SeedCertificate certificate;
  certificate.seed_vertices = kernel;
  certificate.elimination_order = std::move(trace.order);
  certificate.witnesses = std::move(trace.witnesses);
  for (const auto& [u, v] : detail::matroid_basis_edges(inside, kind, config)) {
    certificate.basis_edges.emplace_back(kernel[u], kernel[v]);
  }
  return certificate;
}

// Builds a seed from a valid chain: back-edges join each vertex outside X_0
// to its d smallest neighbours in the previous level, a basis is grown with
// those rows first, and the extra basis edges pull in the sets Y_v of
// vertices reachable backwards along chosen back-edges. The result passes
// is_seed and, for d >= 2, satisfies |K| (d-1) <= 2 |X_0| d^(t+1).
template <class G>
SeedCertificate find_seed(const G& g, MatroidKind kind, const SeedChain& chain,
                          const RankQueryConfig& config) {
  int d = kind.dim();
  int n = g.vertex_count();
  if (chain.levels.empty()) throw std::invalid_argument("find_seed: empty chain");
  std::vector<int> level_of(n, -1);
  for (std::size_t i = 0; i < chain.levels.size(); ++i) {
    std::vector<char> seen(n, 0);
    for (int v : chain.levels[i]) {
      if (v < 0 || v >= n) throw std::invalid_argument("find_seed: chain vertex out of range");
      seen[v] = 1;
      if (level_of[v] == -1) level_of[v] = static_cast<int>(i);
    }
    if (i > 0) {
      for (int v : chain.levels[i - 1]) {
        if (!seen[v]) throw std::invalid_argument("find_seed: chain levels must be nested");
      }
    }
  }
  if (static_cast<int>(chain.levels.back().size()) != n) {
    throw std::invalid_argument("find_seed: final chain level must cover every vertex");
  }
  auto adj = g.adjacency();
  std::vector<std::vector<int>> targets(n);
  EdgeList back_edges;
  for (std::size_t i = 1; i < chain.levels.size(); ++i) {
    for (int v : chain.levels[i]) {
      if (level_of[v] != static_cast<int>(i)) continue;
      for (int w : adj[v]) {
        if (w != v && level_of[w] >= 0 && level_of[w] < static_cast<int>(i)) {
          targets[v].push_back(w);
          if (static_cast<int>(targets[v].size()) == d) break;
        }
      }
      if (static_cast<int>(targets[v].size()) < d) {
        throw std::invalid_argument("find_seed: chain condition fails at vertex " + std::to_string(v));
      }
      for (int w : targets[v]) back_edges.emplace_back(std::min(v, w), std::max(v, w));
    }
  }

  // Rank rows permuted so the back-edges come first, in chain order.
  EdgeList all = g.flat_edges();
  std::map<std::pair<int, int>, std::size_t> edge_row;
  for (std::size_t r = 0; r < all.size(); ++r) edge_row[all[r]] = r;
  std::vector<std::size_t> row_order;
  std::vector<char> is_back(all.size(), 0);
  for (const auto& edge : back_edges) {
    std::size_t r = edge_row.at(edge);
    row_order.push_back(r);
    is_back[r] = 1;
  }
  for (std::size_t r = 0; r < all.size(); ++r) {
    if (!is_back[r]) row_order.push_back(r);
  }

  PrimeField field(config.prime);
  EdgeList extension;
  bool back_edges_independent = back_edges.empty();  // X_0 = V needs no extension
  for (int t = 0; t < config.trials && !back_edges_independent; ++t) {
    auto rng = substream(config.rng_seed, static_cast<std::uint64_t>(t));
    auto assignment = draw_assignment(g, kind, field, rng);
    DenseMatrix canonical = build_matrix(g, kind, assignment, field);
    DenseMatrix permuted(canonical.rows(), canonical.cols());
    for (std::size_t r = 0; r < row_order.size(); ++r) {
      const std::uint64_t* src = canonical.row(row_order[r]);
      std::copy(src, src + canonical.cols(), permuted.row(r));
    }
    auto basis = row_basis(permuted, field);
    if (basis.size() < back_edges.size() || basis[back_edges.size() - 1] + 1 != back_edges.size()) {
      continue;  // a back-edge row came out dependent at this evaluation
    }
    back_edges_independent = true;
    extension.clear();
    for (std::size_t index : basis) {
      if (index >= back_edges.size()) extension.push_back(all[row_order[index]]);
    }
  }
  if (!back_edges_independent) {
    throw std::runtime_error("randomized rank anomaly: back-edges evaluated dependent; increase trials");
  }

  std::vector<char> in_x0(n, 0);
  for (int v : chain.levels.front()) in_x0[v] = 1;
  std::vector<std::vector<int>> y_sets(n);
  std::vector<char> y_done(n, 0);
  auto y_set = [&](auto&& self, int v) -> const std::vector<int>& {
    if (!y_done[v]) {
      y_done[v] = 1;
      if (!in_x0[v]) {
        y_sets[v].push_back(v);
        for (int u : targets[v]) {
          const std::vector<int>& sub = self(self, u);
          y_sets[v].insert(y_sets[v].end(), sub.begin(), sub.end());
        }
        y_sets[v] = detail::sorted_unique(std::move(y_sets[v]));
      }
    }
    return y_sets[v];
  };

  std::vector<int> kernel = chain.levels.front();
  for (const auto& [u, v] : extension) {
    for (int endpoint : {u, v}) {
      if (!in_x0[endpoint]) {
        const std::vector<int>& reach = y_set(y_set, endpoint);
        kernel.insert(kernel.end(), reach.begin(), reach.end());
      }
    }
  }
  kernel = detail::sorted_unique(std::move(kernel));

  std::optional<SeedCertificate> certificate = is_seed(g, kind, kernel, config);
  if (!certificate) {
    RankQueryConfig boosted = config;
    boosted.trials *= 4;
    certificate = is_seed(g, kind, kernel, boosted);
  }
  if (!certificate) {
    throw std::runtime_error("randomized rank anomaly: constructed set failed seed verification");
  }
  if (d >= 2) {
    long long limit = 2 * static_cast<long long>(chain.levels.front().size());
    for (std::size_t i = 0; i < chain.levels.size(); ++i) limit *= d;  // 2 |X_0| d^(t+1)
    if (static_cast<long long>(kernel.size()) * (d - 1) > limit) {
      throw std::runtime_error("property violation: seed size bound exceeded");
    }
  }
  return *certificate;
}

// Random X_0 with |N(v) cap X_0| >= d for every vertex: independent
// inclusion with the given probability, then each deficient vertex patches
// in its smallest missing neighbours. Needs minimum degree >= d.
template <class G>
std::vector<int> sample_cover_set(const G& g, int d, double probability, std::mt19937_64& rng) {
  if (d < 1) throw std::invalid_argument("sample_cover_set: dimension must be positive");
  if (probability < 0.0 || probability > 1.0) {
    throw std::invalid_argument("sample_cover_set: probability outside [0, 1]");
  }
  if (g.min_degree() < d) throw std::invalid_argument("sample_cover_set: minimum degree below d");
  int n = g.vertex_count();
  auto adj = g.adjacency();
  std::vector<char> in_set(n, 0);
  for (int v = 0; v < n; ++v) in_set[v] = bernoulli(rng, probability) ? 1 : 0;
  for (int v = 0; v < n; ++v) {
    int have = 0;
    for (int w : adj[v]) have += in_set[w];
    for (int w : adj[v]) {
      if (have >= d) break;
      if (!in_set[w]) {
        in_set[w] = 1;
        ++have;
      }
    }
  }
  std::vector<int> result;
  for (int v = 0; v < n; ++v) {
    if (in_set[v]) result.push_back(v);
  }
  return result;
}

// Deterministic alternative: repeatedly add the vertex adjacent to the most
// still-deficient vertices.
template <class G>
std::vector<int> greedy_cover_set(const G& g, int d) {
  if (d < 1) throw std::invalid_argument("greedy_cover_set: dimension must be positive");
  if (g.min_degree() < d) throw std::invalid_argument("greedy_cover_set: minimum degree below d");
  int n = g.vertex_count();
  auto adj = g.adjacency();
  std::vector<char> in_set(n, 0);
  std::vector<int> have(n, 0);
  while (true) {
    std::vector<char> deficient(n, 0);
    bool any = false;
    for (int v = 0; v < n; ++v) {
      if (have[v] < d) {
        deficient[v] = 1;
        any = true;
      }
    }
    if (!any) break;
    int pick = -1, gain = 0;
    for (int u = 0; u < n; ++u) {
      if (in_set[u]) continue;
      int covers = 0;
      for (int v : adj[u]) covers += deficient[v];
      if (covers > gain) {
        gain = covers;
        pick = u;
      }
    }
    in_set[pick] = 1;
    for (int v : adj[pick]) ++have[v];
  }
  std::vector<int> result;
  for (int v = 0; v < n; ++v) {
    if (in_set[v]) result.push_back(v);
  }
  return result;
}

struct DeletablePair {
  int u = -1;
  int v = -1;
  int rank_full = 0;
  int rank_without_u = 0;
  int rank_without_v = 0;
  int rank_without_both = 0;
};

namespace detail {

template <class G>
G drop_two(const G& g, int u, int v) {
  // Delete the higher id first so the lower one keeps its label.
  return g.delete_vertex(std::max(u, v)).delete_vertex(std::min(u, v));
}

}  // namespace detail

// Grows the seed while some non-loop edge stays uncovered; once stuck, the
// two leftover vertices form an edge whose deletions drop the rank by
// exactly d each and 2d jointly. The rank chain is verified (with a
// boosted-trials retry) on every output.
template <class G>
DeletablePair deletable_pair(const G& g, MatroidKind kind, const std::vector<int>& seed_set,
                             const RankQueryConfig& config) {
  int d = kind.dim();
  int n = g.vertex_count();
  if (!is_seed(g, kind, seed_set, config)) {
    throw std::invalid_argument("deletable_pair: the given set is not a seed");
  }
  if (g.min_degree() < d + 2) throw std::invalid_argument("deletable_pair: minimum degree below d+2");
  std::vector<char> in_set(n, 0);
  for (int v : seed_set) in_set[v] = 1;
  auto uncovered_edge_exists = [&]() {
    for (const auto& [a, b] : g.flat_edges()) {
      if (a != b && !in_set[a] && !in_set[b]) return true;
    }
    return false;
  };
  if (!uncovered_edge_exists()) {
    throw std::invalid_argument("deletable_pair: no non-loop edge outside the seed");
  }
  auto adj = g.adjacency();
  bool grew = true;
  while (grew) {
    grew = false;
    for (int w = 0; w < n && !grew; ++w) {
      if (in_set[w]) continue;
      int available = 0;
      for (int x : adj[w]) available += (in_set[x] || x == w) ? 1 : 0;
      if (available < d) continue;
      in_set[w] = 1;
      if (uncovered_edge_exists()) {
        grew = true;
      } else {
        in_set[w] = 0;
      }
    }
  }
  std::vector<int> rest;
  for (int v = 0; v < n; ++v) {
    if (!in_set[v]) rest.push_back(v);
  }
  if (rest.size() != 2 || !g.has_edge(rest[0], rest[1])) {
    throw std::runtime_error("property violation: seed growth did not stop at a single uncovered edge");
  }
  DeletablePair pair;
  pair.u = rest[0];
  pair.v = rest[1];
  RankQueryConfig attempt = config;
  for (int round = 0; round < 2; ++round) {
    pair.rank_full = generic_rank(g, kind, attempt);
    pair.rank_without_u = generic_rank(g.delete_vertex(pair.u), kind, attempt);
    pair.rank_without_v = generic_rank(g.delete_vertex(pair.v), kind, attempt);
    pair.rank_without_both = generic_rank(detail::drop_two(g, pair.u, pair.v), kind, attempt);
    if (pair.rank_full == pair.rank_without_u + d && pair.rank_full == pair.rank_without_v + d &&
        pair.rank_full == pair.rank_without_both + 2 * d) {
      return pair;
    }
    attempt.trials *= 4;
  }
  throw std::runtime_error("property violation: deletable pair rank chain failed");
}

// The neighbour pairs certified linked by a rank-deficient pair: for a
// non-loop edge uv with r(G) = r(G-u-v) + 2d, all ambient pairs (x, y) with
// x adjacent to u and y adjacent to v (both avoiding u, v); for a looped
// vertex v = u with r(G) = r(G-v) + d, all pairs inside N(v) - v. Every
// returned pair is cross-checked with is_linked.
template <class G>
EdgeList linked_neighbour_pairs(const G& g, MatroidKind kind, int u, int v,
                                const RankQueryConfig& config) {
  int d = kind.dim();
  int n = g.vertex_count();
  if (u < 0 || u >= n || v < 0 || v >= n) {
    throw std::invalid_argument("linked_neighbour_pairs: vertex out of range");
  }
  if (g.min_degree() < d + 1) {
    throw std::invalid_argument("linked_neighbour_pairs: minimum degree below d+1");
  }
  auto hypothesis = [&](const G& reduced, int delta) {
    RankQueryConfig attempt = config;
    for (int round = 0; round < 2; ++round) {
      if (generic_rank(g, kind, attempt) == generic_rank(reduced, kind, attempt) + delta) return true;
      attempt.trials *= 4;
    }
    return false;
  };
  constexpr bool bipartite = std::is_same_v<G, BipartiteGraph>;
  auto ambient = [&](int x, int y) {
    if constexpr (bipartite) {
      return (x < g.left_count()) != (y < g.left_count());
    } else {
      return x != y || kind.allows_loops();
    }
  };
  EdgeList pairs;
  if (u != v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("linked_neighbour_pairs: uv must be an edge");
    if (!hypothesis(detail::drop_two(g, u, v), 2 * d)) {
      throw std::invalid_argument("linked_neighbour_pairs: rank drop hypothesis fails");
    }
    for (int x : g.neighbors(u)) {
      if (x == u || x == v) continue;
      for (int y : g.neighbors(v)) {
        if (y == u || y == v || !ambient(x, y)) continue;
        pairs.emplace_back(std::min(x, y), std::max(x, y));
      }
    }
  } else {
    if (!kind.allows_loops() || d < 2) {
      throw std::invalid_argument("linked_neighbour_pairs: looped case needs a loop-carrying kind and d >= 2");
    }
    if (!g.has_loop(v)) throw std::invalid_argument("linked_neighbour_pairs: no loop at the vertex");
    if (!hypothesis(g.delete_vertex(v), d)) {
      throw std::invalid_argument("linked_neighbour_pairs: rank drop hypothesis fails");
    }
    for (int x : g.neighbors(v)) {
      for (int y : g.neighbors(v)) {
        if (x >= y || x == v || y == v) continue;
        pairs.emplace_back(x, y);
      }
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  for (const auto& [x, y] : pairs) {
    if (!is_linked(g, kind, x, y, config)) {
      RankQueryConfig boosted = config;
      boosted.trials *= 4;
      if (!is_linked(g, kind, x, y, boosted)) {
        throw std::runtime_error("property violation: certified pair is not linked");
      }
    }
  }
  return pairs;
}

struct BiconnectedSeedOutcome {
  std::optional<SeedCertificate> certificate;
  std::string failure;  // empty on success
  std::vector<int> cover;
  std::vector<int> reduced_cover;
  std::vector<int> sample;
};

// Seed search for bipartite graphs: cover A by minimum vertex cover, put
// aside A' (cover vertices with at most k-d cover neighbours), sample
// X_0 inside A covering V - A' with d neighbours each (probability
// (d-1) / (4 d^3), then patching), and hand the chain
// X_0, X_0 + (V - A'), V to find_seed. Chain violations and construction
// anomalies are reported in `failure` instead of thrown.
inline BiconnectedSeedOutcome biconnected_seed(const BipartiteGraph& g, int d, int k,
                                               const RankQueryConfig& config, std::mt19937_64& rng) {
  if (d < 1) throw std::invalid_argument("biconnected_seed: dimension must be positive");
  if (k < 1) throw std::invalid_argument("biconnected_seed: k must be positive");
  BiconnectedSeedOutcome out;
  int n = g.vertex_count();
  auto adj = g.adjacency();
  out.cover = min_vertex_cover(g);
  std::vector<char> in_cover(n, 0);
  for (int v : out.cover) in_cover[v] = 1;
  for (int v : out.cover) {
    int inside = 0;
    for (int w : adj[v]) inside += in_cover[w];
    if (inside <= k - d) out.reduced_cover.push_back(v);
  }
  std::vector<char> in_reduced(n, 0);
  for (int v : out.reduced_cover) in_reduced[v] = 1;

  double probability = d > 1 ? (d - 1) / (4.0 * d * d * d) : 0.0;
  std::vector<char> in_sample(n, 0);
  for (int v : out.cover) in_sample[v] = bernoulli(rng, probability) ? 1 : 0;
  for (int v = 0; v < n; ++v) {
    if (in_reduced[v]) continue;
    int have = 0;
    for (int w : adj[v]) have += in_sample[w];
    for (int w : adj[v]) {
      if (have >= d) break;
      if (in_cover[w] && !in_sample[w]) {
        in_sample[w] = 1;
        ++have;
      }
    }
    if (have < d) {
      out.failure = "vertex " + std::to_string(v) + " has fewer than " + std::to_string(d) +
                    " neighbours in the cover";
      return out;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (in_sample[v]) out.sample.push_back(v);
  }

  std::vector<int> middle = out.sample;
  for (int v = 0; v < n; ++v) {
    if (!in_reduced[v]) middle.push_back(v);
  }
  middle = detail::sorted_unique(std::move(middle));
  std::vector<int> everything(n);
  for (int v = 0; v < n; ++v) everything[v] = v;
  // The level-two condition is the one that needs k to be large; report it
  // as a structured failure rather than an exception from find_seed.
  std::vector<char> in_middle(n, 0);
  for (int v : middle) in_middle[v] = 1;
  for (int v = 0; v < n; ++v) {
    if (in_middle[v]) continue;
    int have = 0;
    for (int w : adj[v]) have += in_middle[w];
    if (have < d) {
      out.failure = "chain condition fails for vertex " + std::to_string(v) + ": " +
                    std::to_string(have) + " of " + std::to_string(d) + " needed neighbours";
      return out;
    }
  }
  SeedChain chain{{out.sample, middle, everything}};
  try {
    out.certificate = find_seed(g, MatroidKind::birigidity(d), chain, config);
  } catch (const std::exception& error) {
    out.failure = error.what();
  }
  return out;
}

}  // namespace genmat
