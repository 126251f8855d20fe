#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "genmat/graph.hpp"

namespace genmat {

// Ceiling on candidate sets examined by the exponential enumerations below.
inline constexpr std::uint64_t kDefaultEnumerationCap = 4'000'000;

namespace detail {

// Unit-capacity-friendly max flow via shortest augmenting paths. Arcs are
// stored in pairs, arcs[i ^ 1] being the reverse of arcs[i]; `cap` is the
// residual capacity, so the flow pushed through a forward arc equals the
// residual of its reverse.
struct FlowNetwork {
  struct Arc {
    int to;
    int cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out;

  explicit FlowNetwork(int nodes) : out(nodes) {}

  void add_arc(int from, int to, int cap) {
    out[from].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({to, cap});
    out[to].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({from, 0});
  }

  int max_flow(int source, int sink, int limit) {
    int total = 0;
    while (total < limit) {
      std::vector<int> pred(out.size(), -1);
      std::deque<int> queue{source};
      pred[source] = -2;
      while (!queue.empty() && pred[sink] == -1) {
        int node = queue.front();
        queue.pop_front();
        for (int id : out[node]) {
          if (arcs[id].cap > 0 && pred[arcs[id].to] == -1) {
            pred[arcs[id].to] = id;
            queue.push_back(arcs[id].to);
          }
        }
      }
      if (pred[sink] == -1) break;
      int push = std::numeric_limits<int>::max();
      for (int node = sink; node != source; node = arcs[pred[node] ^ 1].to) {
        push = std::min(push, arcs[pred[node]].cap);
      }
      for (int node = sink; node != source; node = arcs[pred[node] ^ 1].to) {
        arcs[pred[node]].cap -= push;
        arcs[pred[node] ^ 1].cap += push;
      }
      total += push;
    }
    return total;
  }

  // Splits the computed flow into `amount` arc-disjoint source-sink walks,
  // always consuming the smallest usable arc id first.
  std::vector<std::vector<int>> decompose(int source, int sink, int amount) {
    std::vector<std::vector<int>> walks;
    for (int w = 0; w < amount; ++w) {
      std::vector<int> nodes{source};
      int node = source;
      while (node != sink) {
        int chosen = -1;
        for (int id : out[node]) {
          if ((id & 1) == 0 && arcs[id ^ 1].cap > 0) {
            chosen = id;
            break;
          }
        }
        if (chosen == -1) throw std::runtime_error("flow decomposition ran out of arcs");
        arcs[chosen ^ 1].cap -= 1;
        node = arcs[chosen].to;
        nodes.push_back(node);
      }
      walks.push_back(std::move(nodes));
    }
    return walks;
  }
};

// Vertex-split network for internally disjoint paths: vertex v becomes
// in-node 2v and out-node 2v+1 joined by a unit arc (unbounded at the
// terminals), and each non-loop edge contributes a unit arc in both
// directions. kappa(u, v) is then the max flow from 2u+1 to 2v.
inline FlowNetwork split_network(const SemisimpleGraph& g, int u, int v) {
  int n = g.vertex_count();
  FlowNetwork net(2 * n);
  for (int w = 0; w < n; ++w) {
    net.add_arc(2 * w, 2 * w + 1, (w == u || w == v) ? n : 1);
  }
  for (const auto& [a, b] : g.flat_edges()) {
    if (a == b) continue;
    net.add_arc(2 * a + 1, 2 * b, 1);
    net.add_arc(2 * b + 1, 2 * a, 1);
  }
  return net;
}

// Connected components of the graph restricted to vertices with alive[v],
// as ascending vertex lists in order of smallest member.
inline std::vector<std::vector<int>> alive_components(const std::vector<std::vector<int>>& adj,
                                                      const std::vector<char>& alive) {
  int n = static_cast<int>(adj.size());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> components;
  for (int start = 0; start < n; ++start) {
    if (!alive[start] || comp[start] != -1) continue;
    int id = static_cast<int>(components.size());
    components.emplace_back();
    std::deque<int> queue{start};
    comp[start] = id;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      components[id].push_back(v);
      for (int w : adj[v]) {
        if (w != v && alive[w] && comp[w] == -1) {
          comp[w] = id;
          queue.push_back(w);
        }
      }
    }
    std::sort(components[id].begin(), components[id].end());
  }
  return components;
}

// Calls fn on every size-`count` subset of {0..m-1}, lexicographically.
template <class Fn>
void for_each_combination(int m, int count, Fn&& fn) {
  std::vector<int> pick(count);
  auto recurse = [&](auto&& self, int next, int depth) -> void {
    if (depth == count) {
      fn(pick);
      return;
    }
    for (int v = next; v <= m - (count - depth); ++v) {
      pick[depth] = v;
      self(self, v + 1, depth + 1);
    }
  };
  recurse(recurse, 0, 0);
}

inline std::uint64_t binomial(int m, int count) {
  if (count < 0 || count > m) return 0;
  std::uint64_t result = 1;
  for (int i = 0; i < count; ++i) {
    result = result * static_cast<std::uint64_t>(m - i) / (i + 1);
    if (result > (std::uint64_t(1) << 62)) return std::uint64_t(1) << 62;
  }
  return result;
}

inline std::uint64_t binomial_sum(int m, int max_count) {
  std::uint64_t total = 0;
  for (int c = 0; c <= max_count; ++c) total += binomial(m, c);
  return total;
}

}  // namespace detail

// Maximum number of internally disjoint u-v paths; the direct edge, if
// present, counts as one path. Loops are ignored.
inline int local_connectivity(const SemisimpleGraph& g, int u, int v) {
  int n = g.vertex_count();
  if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("local_connectivity: vertex out of range");
  if (u == v) throw std::invalid_argument("local_connectivity: endpoints must differ");
  detail::FlowNetwork net = detail::split_network(g, u, v);
  return net.max_flow(2 * u + 1, 2 * v, n);
}

inline int local_connectivity(const BipartiteGraph& g, int u, int v) {
  return local_connectivity(g.to_semisimple(), u, v);
}

// Minimum over non-adjacent pairs of local connectivity, n-1 for complete
// graphs (loops do not count towards completeness or connectivity).
inline int vertex_connectivity(const SemisimpleGraph& g) {
  int n = g.vertex_count();
  if (n <= 1) return 0;
  int best = n - 1;
  bool complete = true;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      complete = false;
      best = std::min(best, local_connectivity(g, u, v));
      if (best == 0) return 0;
    }
  }
  return complete ? n - 1 : best;
}

inline int vertex_connectivity(const BipartiteGraph& g) {
  return vertex_connectivity(g.to_semisimple());
}

struct BiconnectivityResult {
  bool biconnected = false;
  // An admissible cut whose removal disconnects the graph, when one exists.
  std::optional<std::vector<int>> witness;
  std::string reason;
};

// A bipartite graph with classes (A, B) is k-biconnected when |A|, |B| >= k
// and no cut W with |W cap A| <= k-1 and |W cap B| <= k-1 disconnects it.
// Exact: after the sufficient shortcut kappa(G) >= 2k-1, every admissible
// cut is enumerated (their number must stay below `cap`).
inline BiconnectivityResult is_k_biconnected(const BipartiteGraph& g, int k,
                                             std::uint64_t cap = kDefaultEnumerationCap) {
  if (k < 1) throw std::invalid_argument("is_k_biconnected: k must be positive");
  int a = g.left_count(), b = g.right_count();
  if (a < k || b < k) {
    return {false, std::nullopt, "a bipartition class has fewer than k vertices"};
  }
  if (vertex_connectivity(g) >= 2 * k - 1) {
    return {true, std::nullopt, "vertex connectivity is at least 2k-1"};
  }
  std::uint64_t candidates = detail::binomial_sum(a, k - 1) * detail::binomial_sum(b, k - 1);
  if (candidates > cap) throw std::runtime_error("is_k_biconnected: candidate cut enumeration exceeds cap");
  const auto& adj = g.adjacency();
  BiconnectivityResult found{true, std::nullopt, "no admissible cut disconnects the graph"};
  std::vector<char> alive(g.vertex_count(), 1);
  for (int size_a = 0; size_a <= k - 1 && found.biconnected; ++size_a) {
    detail::for_each_combination(a, size_a, [&](const std::vector<int>& left_cut) {
      if (!found.biconnected) return;
      for (int size_b = 0; size_b <= k - 1 && found.biconnected; ++size_b) {
        detail::for_each_combination(b, size_b, [&](const std::vector<int>& right_cut) {
          if (!found.biconnected) return;
          std::fill(alive.begin(), alive.end(), 1);
          for (int v : left_cut) alive[v] = 0;
          for (int v : right_cut) alive[a + v] = 0;
          if (detail::alive_components(adj, alive).size() > 1) {
            std::vector<int> cut(left_cut);
            for (int v : right_cut) cut.push_back(a + v);
            found = {false, cut, "removing the witness cut disconnects the graph"};
          }
        });
      }
    });
  }
  return found;
}

inline bool is_critically_k_biconnected(const BipartiteGraph& g, int k,
                                        std::uint64_t cap = kDefaultEnumerationCap) {
  if (!is_k_biconnected(g, k, cap).biconnected) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (is_k_biconnected(g.delete_vertex(v), k, cap).biconnected) return false;
  }
  return true;
}

inline bool is_critically_k_connected(const SemisimpleGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("is_critically_k_connected: k must be positive");
  if (g.vertex_count() < k + 1 || vertex_connectivity(g) < k) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    SemisimpleGraph reduced = g.delete_vertex(v);
    if (reduced.vertex_count() >= k + 1 && vertex_connectivity(reduced) >= k) return false;
  }
  return true;
}

namespace detail {

// Kuhn augmenting-path matching; match_left[u] is the matched right-local
// vertex of left-local u, or -1.
inline bool try_augment(const BipartiteGraph& g, int left, std::vector<char>& used,
                        std::vector<int>& match_left, std::vector<int>& match_right) {
  int a = g.left_count();
  for (int flat : g.neighbors(left)) {
    int right = flat - a;
    if (used[right]) continue;
    used[right] = 1;
    if (match_right[right] == -1 || try_augment(g, match_right[right], used, match_left, match_right)) {
      match_left[left] = right;
      match_right[right] = left;
      return true;
    }
  }
  return false;
}

}  // namespace detail

// Exact minimum vertex cover of a bipartite graph via maximum matching and
// the alternating-reachability construction; returns sorted flat ids.
inline std::vector<int> min_vertex_cover(const BipartiteGraph& g) {
  int a = g.left_count(), b = g.right_count();
  std::vector<int> match_left(a, -1), match_right(b, -1);
  for (int u = 0; u < a; ++u) {
    std::vector<char> used(b, 0);
    detail::try_augment(g, u, used, match_left, match_right);
  }
  // Alternating BFS from unmatched left vertices: non-matching edges
  // leftwards-to-right, matching edges back. The cover is the unreached
  // part of the left class plus the reached part of the right class.
  std::vector<char> reached_left(a, 0), reached_right(b, 0);
  std::deque<int> queue;
  for (int u = 0; u < a; ++u) {
    if (match_left[u] == -1) {
      reached_left[u] = 1;
      queue.push_back(u);
    }
  }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int flat : g.neighbors(u)) {
      int v = flat - a;
      if (match_left[u] == v || reached_right[v]) continue;
      reached_right[v] = 1;
      int back = match_right[v];
      if (back != -1 && !reached_left[back]) {
        reached_left[back] = 1;
        queue.push_back(back);
      }
    }
  }
  std::vector<int> cover;
  for (int u = 0; u < a; ++u) {
    if (!reached_left[u]) cover.push_back(u);
  }
  for (int v = 0; v < b; ++v) {
    if (reached_right[v]) cover.push_back(a + v);
  }
  return cover;
}

namespace detail {

struct CoverSearch {
  std::vector<std::vector<int>> adj;
  std::vector<char> removed;
  std::vector<int> current;
  std::vector<int> best;

  int degree(int v) const {
    if (removed[v]) return 0;
    int deg = 0;
    for (int w : adj[v]) {
      if (!removed[w]) ++deg;
    }
    return deg;
  }

  int matching_lower_bound() const {
    std::vector<char> taken = removed;
    int size = 0;
    for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
      if (taken[v]) continue;
      for (int w : adj[v]) {
        if (!taken[w] && w != v) {
          taken[v] = taken[w] = 1;
          ++size;
          break;
        }
      }
    }
    return size;
  }

  void search() {
    if (current.size() + matching_lower_bound() >= best.size()) return;
    int pick = -1, max_degree = 0;
    for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
      int deg = degree(v);
      if (deg > max_degree) {
        max_degree = deg;
        pick = v;
      }
    }
    if (pick == -1) {
      best = current;
      return;
    }
    removed[pick] = 1;
    current.push_back(pick);
    search();
    current.pop_back();
    removed[pick] = 0;

    std::vector<int> neighbours;
    for (int w : adj[pick]) {
      if (!removed[w]) neighbours.push_back(w);
    }
    for (int w : neighbours) {
      removed[w] = 1;
      current.push_back(w);
    }
    search();
    for (int w : neighbours) {
      removed[w] = 0;
      current.pop_back();
    }
  }
};

}  // namespace detail

// Exact minimum vertex cover of a semisimple graph. Loop vertices are
// forced into the cover; the loopless rest is solved by branch and bound
// with a greedy matching lower bound. Exponential, intended for n up to
// around 30.
inline std::vector<int> min_vertex_cover(const SemisimpleGraph& g) {
  int n = g.vertex_count();
  std::vector<int> forced;
  detail::CoverSearch search;
  search.adj.assign(n, {});
  search.removed.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    if (g.has_loop(v)) {
      forced.push_back(v);
      search.removed[v] = 1;
    }
  }
  for (const auto& [u, v] : g.flat_edges()) {
    if (u == v || search.removed[u] || search.removed[v]) continue;
    search.adj[u].push_back(v);
    search.adj[v].push_back(u);
  }
  // Greedy initial cover: repeatedly take a maximum-degree vertex.
  {
    detail::CoverSearch greedy = search;
    while (true) {
      int pick = -1, max_degree = 0;
      for (int v = 0; v < n; ++v) {
        int deg = greedy.degree(v);
        if (deg > max_degree) {
          max_degree = deg;
          pick = v;
        }
      }
      if (pick == -1) break;
      greedy.removed[pick] = 1;
      greedy.best.push_back(pick);
    }
    search.best = greedy.best;
  }
  search.search();
  std::vector<int> cover = forced;
  cover.insert(cover.end(), search.best.begin(), search.best.end());
  std::sort(cover.begin(), cover.end());
  return cover;
}

struct SeparatorReport {
  std::vector<int> separator;
  // (|S cap A|, |S cap B|) for bipartite inputs, (-1, -1) otherwise.
  std::pair<int, int> side_counts{-1, -1};
  std::vector<std::vector<int>> components;
  // Parallel to `separator`: vertex has a neighbour in every component.
  std::vector<bool> spans_all_components;
};

namespace detail {

// Fills components and the per-vertex spanning flags; true iff S separates
// the graph and every vertex of S neighbours every component.
inline bool essential_filter(const std::vector<std::vector<int>>& adj, SeparatorReport& report) {
  int n = static_cast<int>(adj.size());
  std::vector<char> alive(n, 1);
  for (int v : report.separator) alive[v] = 0;
  report.components = alive_components(adj, alive);
  if (report.components.size() < 2) return false;
  std::vector<int> comp(n, -1);
  for (std::size_t id = 0; id < report.components.size(); ++id) {
    for (int v : report.components[id]) comp[v] = static_cast<int>(id);
  }
  bool essential = true;
  report.spans_all_components.clear();
  for (int s : report.separator) {
    std::vector<char> hit(report.components.size(), 0);
    for (int w : adj[s]) {
      if (w != s && alive[w]) hit[comp[w]] = 1;
    }
    bool spans = std::find(hit.begin(), hit.end(), 0) == hit.end();
    report.spans_all_components.push_back(spans);
    essential = essential && spans;
  }
  return essential;
}

}  // namespace detail

// All essential separators of a bipartite graph: S = A' cup B' with
// |A'| = k and |B'| <= k-1 (or the classes swapped) such that G - S is
// disconnected and every vertex of S has a neighbour in every component.
inline std::vector<SeparatorReport> essential_separators(const BipartiteGraph& g, int k,
                                                         std::uint64_t cap = kDefaultEnumerationCap) {
  if (k < 1) throw std::invalid_argument("essential_separators: k must be positive");
  int a = g.left_count(), b = g.right_count();
  std::uint64_t candidates = detail::binomial(a, k) * detail::binomial_sum(b, k - 1) +
                             detail::binomial(b, k) * detail::binomial_sum(a, k - 1);
  if (candidates > cap) throw std::runtime_error("essential_separators: enumeration exceeds cap");
  const auto& adj = g.adjacency();
  std::vector<SeparatorReport> reports;
  auto consider = [&](const std::vector<int>& full_side, const std::vector<int>& short_side,
                      bool full_is_left) {
    SeparatorReport report;
    for (int v : full_side) report.separator.push_back(full_is_left ? v : a + v);
    for (int v : short_side) report.separator.push_back(full_is_left ? a + v : v);
    std::sort(report.separator.begin(), report.separator.end());
    int full = static_cast<int>(full_side.size()), part = static_cast<int>(short_side.size());
    report.side_counts = full_is_left ? std::make_pair(full, part) : std::make_pair(part, full);
    if (detail::essential_filter(adj, report)) reports.push_back(std::move(report));
  };
  detail::for_each_combination(a, k, [&](const std::vector<int>& left_full) {
    for (int size_b = 0; size_b <= k - 1; ++size_b) {
      detail::for_each_combination(b, size_b, [&](const std::vector<int>& right_short) {
        consider(left_full, right_short, true);
      });
    }
  });
  detail::for_each_combination(b, k, [&](const std::vector<int>& right_full) {
    for (int size_a = 0; size_a <= k - 1; ++size_a) {
      detail::for_each_combination(a, size_a, [&](const std::vector<int>& left_short) {
        consider(right_full, left_short, false);
      });
    }
  });
  return reports;
}

// All essential separators of a general graph: |S| = k, G - S disconnected,
// every vertex of S with a neighbour in every component.
inline std::vector<SeparatorReport> essential_separators(const SemisimpleGraph& g, int k,
                                                         std::uint64_t cap = kDefaultEnumerationCap) {
  if (k < 1) throw std::invalid_argument("essential_separators: k must be positive");
  int n = g.vertex_count();
  if (detail::binomial(n, k) > cap) throw std::runtime_error("essential_separators: enumeration exceeds cap");
  const auto& adj = g.adjacency();
  std::vector<SeparatorReport> reports;
  detail::for_each_combination(n, k, [&](const std::vector<int>& pick) {
    SeparatorReport report;
    report.separator = pick;
    if (detail::essential_filter(adj, report)) reports.push_back(std::move(report));
  });
  return reports;
}

struct Pairing {
  std::vector<int> domain;                      // covered X-vertices, ascending
  std::vector<std::array<int, 3>> assignments;  // (x, u, v) with u, v neighbours of x
  // Canonical edge of the auxiliary multigraph -> multiplicity, sorted.
  std::vector<std::pair<std::pair<int, int>, int>> edge_multiplicities;
  EdgeList support;  // each multigraph edge once
};

namespace detail {

inline void finish_pairing(Pairing& pairing) {
  std::map<std::pair<int, int>, int> counts;
  for (const auto& [x, u, v] : pairing.assignments) {
    counts[{std::min(u, v), std::max(u, v)}] += 1;
  }
  for (const auto& [edge, count] : counts) {
    pairing.edge_multiplicities.emplace_back(edge, count);
    pairing.support.push_back(edge);
  }
}

// The graph on the full vertex set whose edges are those of g induced by
// the complement of `excluded`, plus the support of the pairing.
inline SemisimpleGraph pairing_host(const SemisimpleGraph& g, const std::vector<char>& excluded,
                                    const Pairing& pairing) {
  EdgeList edges;
  for (const auto& [u, v] : g.flat_edges()) {
    if (u != v && !excluded[u] && !excluded[v]) edges.emplace_back(u, v);
  }
  edges.insert(edges.end(), pairing.support.begin(), pairing.support.end());
  return SemisimpleGraph(g.vertex_count(), edges);
}

inline std::vector<int> sorted_unique(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

}  // namespace detail

// Builds a pairing for X in a bipartite graph: each x gets the first (in
// enumeration order) essential separator containing it and the
// lexicographically smallest neighbour pair split across components. The
// three multigraph conclusions (|edges| = |domain|, disjointness from E,
// multiplicities at most k) and the connectivity bound
// kappa(u, v) <= 2k-1 in the host graph are verified on every output.
inline Pairing build_pairing_bipartite(const BipartiteGraph& g, int k, const std::vector<int>& x_set,
                                       std::uint64_t cap = kDefaultEnumerationCap) {
  int n = g.vertex_count();
  Pairing pairing;
  pairing.domain = detail::sorted_unique(x_set);
  for (int x : pairing.domain) {
    if (x < 0 || x >= n) throw std::invalid_argument("build_pairing_bipartite: vertex out of range");
  }
  std::vector<SeparatorReport> separators = essential_separators(g, k, cap);
  for (int x : pairing.domain) {
    bool assigned = false;
    for (const SeparatorReport& report : separators) {
      if (!std::binary_search(report.separator.begin(), report.separator.end(), x)) continue;
      std::vector<int> comp(n, -1);
      for (std::size_t id = 0; id < report.components.size(); ++id) {
        for (int v : report.components[id]) comp[v] = static_cast<int>(id);
      }
      int u = -1;
      for (int w : g.neighbors(x)) {
        if (comp[w] != -1) {
          u = w;
          break;
        }
      }
      int v = -1;
      for (int w : g.neighbors(x)) {
        if (comp[w] != -1 && comp[w] != comp[u]) {
          v = w;
          break;
        }
      }
      if (u == -1 || v == -1) continue;
      pairing.assignments.push_back({x, u, v});
      assigned = true;
      break;
    }
    if (!assigned) {
      throw std::invalid_argument("build_pairing_bipartite: no essential separator contains vertex " +
                                  std::to_string(x));
    }
  }
  detail::finish_pairing(pairing);
  if (pairing.assignments.size() != pairing.domain.size()) {
    throw std::runtime_error("pairing property violation: edge count differs from domain size");
  }
  for (const auto& [edge, count] : pairing.edge_multiplicities) {
    if (g.has_edge(edge.first, edge.second)) {
      throw std::runtime_error("pairing property violation: multigraph edge already in the graph");
    }
    if (count > k) {
      throw std::runtime_error("pairing property violation: edge multiplicity exceeds k");
    }
  }
  std::vector<char> excluded(n, 0);
  for (int x : pairing.domain) excluded[x] = 1;
  SemisimpleGraph host = detail::pairing_host(g.to_semisimple(), excluded, pairing);
  for (const auto& [u, v] : pairing.support) {
    if (local_connectivity(host, u, v) > 2 * k - 1) {
      throw std::runtime_error("pairing property violation: support edge exceeds the 2k-1 connectivity bound");
    }
  }
  return pairing;
}

// Builds a pairing for X in a critically k-connected graph, following the
// sequential construction: a pruned greedy sequence of essential
// k-separators covering X, and for each separator k internally disjoint
// paths from an auxiliary vertex (joined to k vertices outside the chosen
// component) to the component's smallest vertex. Every x newly covered by
// the separator lies on exactly one path, between a predecessor outside
// and a successor inside the component; that neighbour pair is f(x).
// Simplicity of the auxiliary graph, its disjointness from E, and the
// connectivity bound kappa(u, v) <= k in the host graph are verified.
inline Pairing build_pairing_general(const SemisimpleGraph& g, int k, const std::vector<int>& x_set,
                                     std::uint64_t cap = kDefaultEnumerationCap) {
  int n = g.vertex_count();
  if (n < 3 * k - 1) throw std::invalid_argument("build_pairing_general: needs at least 3k-1 vertices");
  Pairing pairing;
  pairing.domain = detail::sorted_unique(x_set);
  for (int x : pairing.domain) {
    if (x < 0 || x >= n) throw std::invalid_argument("build_pairing_general: vertex out of range");
  }
  std::vector<SeparatorReport> separators = essential_separators(g, k, cap);
  std::vector<char> in_some(n, 0);
  for (const SeparatorReport& report : separators) {
    for (int v : report.separator) in_some[v] = 1;
  }
  for (int x : pairing.domain) {
    if (!in_some[x]) {
      throw std::invalid_argument("build_pairing_general: no essential separator contains vertex " +
                                  std::to_string(x));
    }
  }

  // Greedy covering sequence, then a pruning pass dropping redundant
  // separators while the rest still covers the domain.
  std::vector<std::size_t> sequence;
  {
    std::vector<char> uncovered(n, 0);
    int remaining = static_cast<int>(pairing.domain.size());
    for (int x : pairing.domain) uncovered[x] = 1;
    while (remaining > 0) {
      std::size_t pick = separators.size();
      int gain = 0;
      for (std::size_t i = 0; i < separators.size(); ++i) {
        int covers = 0;
        for (int v : separators[i].separator) covers += uncovered[v];
        if (covers > gain) {
          gain = covers;
          pick = i;
        }
      }
      sequence.push_back(pick);
      for (int v : separators[pick].separator) {
        if (uncovered[v]) {
          uncovered[v] = 0;
          --remaining;
        }
      }
    }
    for (std::size_t j = 0; j < sequence.size();) {
      std::vector<char> covered(n, 0);
      for (std::size_t i = 0; i < sequence.size(); ++i) {
        if (i == j) continue;
        for (int v : separators[sequence[i]].separator) covered[v] = 1;
      }
      bool redundant = true;
      for (int x : pairing.domain) redundant = redundant && covered[x];
      if (redundant) {
        sequence.erase(sequence.begin() + j);
      } else {
        ++j;
      }
    }
  }

  std::vector<char> seen(n, 0);
  for (std::size_t index : sequence) {
    const SeparatorReport& report = separators[index];
    std::vector<int> fresh;
    for (int x : pairing.domain) {
      if (!seen[x] && std::binary_search(report.separator.begin(), report.separator.end(), x)) {
        fresh.push_back(x);
      }
    }
    for (int v : report.separator) seen[v] = 1;
    if (fresh.empty()) continue;

    // Component choice: smallest size, then smallest lead vertex, subject
    // to leaving at least k vertices outside separator and component.
    int chosen = -1;
    for (std::size_t id = 0; id < report.components.size(); ++id) {
      if (n - k - static_cast<int>(report.components[id].size()) < k) continue;
      if (chosen == -1 || report.components[id].size() < report.components[chosen].size()) {
        chosen = static_cast<int>(id);
      }
    }
    if (chosen == -1) {
      throw std::runtime_error("pairing construction anomaly: every component is too large to leave k vertices");
    }
    const std::vector<int>& inside = report.components[chosen];
    std::vector<char> in_component(n, 0), in_outside(n, 0);
    for (int v : inside) in_component[v] = 1;
    std::vector<int> outside;
    for (int v = 0; v < n; ++v) {
      if (!in_component[v] && !std::binary_search(report.separator.begin(), report.separator.end(), v)) {
        outside.push_back(v);
        in_outside[v] = 1;
      }
    }

    // Auxiliary vertex n joined to the k smallest outside vertices; k
    // internally disjoint paths to the smallest component vertex.
    EdgeList edges = g.flat_edges();
    for (int i = 0; i < k; ++i) edges.emplace_back(outside[i], n);
    SemisimpleGraph augmented(n + 1, edges);
    int target = inside.front();
    detail::FlowNetwork net = detail::split_network(augmented, n, target);
    if (net.max_flow(2 * n + 1, 2 * target, k) < k) {
      throw std::runtime_error("pairing construction anomaly: fewer than k disjoint paths");
    }
    std::vector<std::vector<int>> walks = net.decompose(2 * n + 1, 2 * target, k);
    std::vector<std::vector<int>> paths;
    for (const auto& walk : walks) {
      std::vector<int> path;
      for (int node : walk) {
        if ((node & 1) == 0) path.push_back(node / 2);
      }
      path.insert(path.begin(), n);
      paths.push_back(std::move(path));
    }
    for (int x : fresh) {
      std::array<int, 3> assignment{x, -1, -1};
      for (const auto& path : paths) {
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
          if (path[i] != x) continue;
          int before = path[i - 1], after = path[i + 1];
          if (in_outside[before] && in_component[after]) {
            assignment = {x, after, before};
          }
        }
      }
      if (assignment[1] == -1) {
        throw std::runtime_error("pairing construction anomaly: vertex " + std::to_string(x) +
                                 " not on a crossing length-two subpath");
      }
      pairing.assignments.push_back(assignment);
    }
  }

  detail::finish_pairing(pairing);
  for (const auto& [edge, count] : pairing.edge_multiplicities) {
    if (count > 1) {
      throw std::runtime_error("pairing property violation: auxiliary graph has a parallel edge");
    }
    if (g.has_edge(edge.first, edge.second)) {
      throw std::runtime_error("pairing property violation: auxiliary edge already in the graph");
    }
  }
  std::vector<char> excluded(n, 0);
  for (int x : pairing.domain) excluded[x] = 1;
  SemisimpleGraph host = detail::pairing_host(g, excluded, pairing);
  for (const auto& [u, v] : pairing.support) {
    if (local_connectivity(host, u, v) > k) {
      throw std::runtime_error("pairing property violation: support edge exceeds the k connectivity bound");
    }
  }
  return pairing;
}

struct SparseCertificate {
  SemisimpleGraph subgraph;
  int k = 0;
  int edge_count = 0;
};

// Spanning subgraph preserving local connectivity up to k, by the scan
// ordering that repeatedly visits the unscanned vertex of largest scan
// count and keeps each edge whose forest index stays within k. Loops are
// dropped. Both certificate properties (the edge bound when n > k and
// min{k, kappa} preservation for all pairs) are verified on every output.
inline SparseCertificate sparse_local_certificate(const SemisimpleGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("sparse_local_certificate: k must be positive");
  int n = g.vertex_count();
  std::vector<int> count(n, 0);
  std::vector<char> scanned(n, 0);
  EdgeList kept;
  for (int step = 0; step < n; ++step) {
    int u = -1;
    for (int v = 0; v < n; ++v) {
      if (!scanned[v] && (u == -1 || count[v] > count[u])) u = v;
    }
    scanned[u] = 1;
    for (int v : g.neighbors(u)) {
      if (v == u || scanned[v]) continue;
      if (count[v] < k) kept.emplace_back(std::min(u, v), std::max(u, v));
      count[v] += 1;
    }
  }
  SparseCertificate certificate{SemisimpleGraph(n, kept), k, static_cast<int>(kept.size())};
  if (n > k) {
    long long bound = static_cast<long long>(k) * n - static_cast<long long>(k) * (k + 1) / 2;
    if (certificate.edge_count > bound) {
      throw std::runtime_error("certificate property violation: edge bound exceeded");
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      int full = local_connectivity(g, u, v);
      int sparse = local_connectivity(certificate.subgraph, u, v);
      if (sparse < std::min(k, full)) {
        throw std::runtime_error("certificate property violation: local connectivity lost between " +
                                 std::to_string(u) + " and " + std::to_string(v));
      }
    }
  }
  return certificate;
}

struct InequalityCheck {
  std::string label;
  long long lhs = 0;
  long long rhs = 0;
  bool holds = false;
};

struct TauBoundReport {
  std::string mode;  // "bipartite" or "general"
  int k = 0;
  int n = 0;
  std::string branch;  // "pipeline", "complete-balanced" or "small-graph"
  bool critical = false;
  std::string critical_note;
  int tau = 0;
  std::vector<int> cover;
  int x_size = 0;
  int f_size = 0;
  int certificate_edges = 0;
  std::vector<InequalityCheck> chain;
  Pairing pairing;
  double bound = 0.0;
  bool bound_holds = false;
};

namespace detail {

inline void append_check(TauBoundReport& report, std::string label, long long lhs, long long rhs) {
  report.chain.push_back({std::move(label), lhs, rhs, lhs <= rhs});
}

inline void require_chain(const TauBoundReport& report) {
  for (const InequalityCheck& check : report.chain) {
    if (!check.holds) {
      throw std::runtime_error("tau bound property violation: " + check.label);
    }
  }
}

// Renumbers the cover-induced graph plus the pairing support onto
// 0..|cover|-1 (ascending original labels).
inline SemisimpleGraph cover_graph(const SemisimpleGraph& g, const std::vector<int>& cover,
                                   const Pairing& pairing) {
  std::vector<int> position(g.vertex_count(), -1);
  for (std::size_t i = 0; i < cover.size(); ++i) position[cover[i]] = static_cast<int>(i);
  EdgeList edges;
  for (const auto& [u, v] : g.flat_edges()) {
    if (u != v && position[u] != -1 && position[v] != -1) {
      edges.emplace_back(position[u], position[v]);
    }
  }
  for (const auto& [u, v] : pairing.support) {
    if (position[u] == -1 || position[v] == -1) {
      throw std::runtime_error("tau bound property violation: pairing edge leaves the cover");
    }
    edges.emplace_back(position[u], position[v]);
  }
  return SemisimpleGraph(static_cast<int>(cover.size()), edges);
}

inline int support_edges_in(const SemisimpleGraph& certificate, const std::vector<int>& cover,
                            const Pairing& pairing, int n) {
  std::vector<int> position(n, -1);
  for (std::size_t i = 0; i < cover.size(); ++i) position[cover[i]] = static_cast<int>(i);
  int inside = 0;
  for (const auto& [u, v] : pairing.support) {
    if (certificate.has_edge(position[u], position[v])) ++inside;
  }
  return inside;
}

}  // namespace detail

// Runs the vertex-cover lower-bound pipeline for bipartite graphs: minimum
// cover T, pairing for X = V - T, auxiliary support F, cover graph
// G[T] + F, sparse certificate with parameter 2k-1, and the counting chain
// |X| <= k|F| <= k|E+| <= k(2k-1)|T| leading to tau >= |V| / (2k^2).
// Criticality of k-biconnectivity is checked and recorded; the pipeline
// itself runs whenever every X-vertex lies in an essential separator.
// Balanced complete inputs with classes of size exactly k are reported via
// the closed form tau = k instead. Every chain inequality is verified.
inline TauBoundReport tau_bound_report(const BipartiteGraph& g, int k,
                                       std::uint64_t cap = kDefaultEnumerationCap) {
  if (k < 1) throw std::invalid_argument("tau_bound_report: k must be positive");
  TauBoundReport report;
  report.mode = "bipartite";
  report.k = k;
  report.n = g.vertex_count();
  int a = g.left_count(), b = g.right_count();
  if (std::min(a, b) < k) throw std::invalid_argument("tau_bound_report: a bipartition class is smaller than k");
  report.critical = is_critically_k_biconnected(g, k, cap);
  if (!report.critical) {
    BiconnectivityResult base = is_k_biconnected(g, k, cap);
    report.critical_note = base.biconnected
                               ? "some single vertex deletion stays k-biconnected"
                               : "not k-biconnected: " + base.reason;
  }
  if (std::min(a, b) == k) {
    report.branch = "complete-balanced";
    report.cover = min_vertex_cover(g);
    report.tau = static_cast<int>(report.cover.size());
    report.bound = static_cast<double>(report.n) / (2.0 * k * k);
    report.bound_holds = static_cast<long long>(report.tau) * 2 * k * k >= report.n;
    if (g.edge_count() != a * b) {
      report.critical_note += (report.critical_note.empty() ? "" : "; ");
      report.critical_note += "balanced class of size k without being complete";
    }
    return report;
  }
  report.branch = "pipeline";
  report.cover = min_vertex_cover(g);
  report.tau = static_cast<int>(report.cover.size());
  std::vector<int> x_set;
  {
    std::vector<char> covered(g.vertex_count(), 0);
    for (int v : report.cover) covered[v] = 1;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!covered[v]) x_set.push_back(v);
    }
  }
  report.pairing = build_pairing_bipartite(g, k, x_set, cap);
  report.x_size = static_cast<int>(report.pairing.domain.size());
  report.f_size = static_cast<int>(report.pairing.support.size());
  SemisimpleGraph cover_graph = detail::cover_graph(g.to_semisimple(), report.cover, report.pairing);
  SparseCertificate certificate = sparse_local_certificate(cover_graph, 2 * k - 1);
  report.certificate_edges = certificate.edge_count;
  int support_inside = detail::support_edges_in(certificate.subgraph, report.cover, report.pairing, report.n);
  detail::append_check(report, "every pairing edge survives in the certificate", report.f_size, support_inside);
  detail::append_check(report, "|X| <= k|F|", report.x_size, static_cast<long long>(k) * report.f_size);
  detail::append_check(report, "k|F| <= k|E+|", static_cast<long long>(k) * report.f_size,
                       static_cast<long long>(k) * report.certificate_edges);
  detail::append_check(report, "k|E+| <= k(2k-1)|T|", static_cast<long long>(k) * report.certificate_edges,
                       static_cast<long long>(k) * (2 * k - 1) * report.tau);
  report.bound = static_cast<double>(report.n) / (2.0 * k * k);
  report.bound_holds = static_cast<long long>(report.tau) * 2 * k * k >= report.n;
  detail::require_chain(report);
  if (!report.bound_holds) {
    throw std::runtime_error("tau bound property violation: final bound fails");
  }
  return report;
}

// General-graph version of the pipeline: pairing via sequential essential
// k-separators, sparse certificate with parameter k, and the chain
// |X| = |F| <= |E+| <= k|T| - C(k+1,2) leading to tau >= |V| / (k+1).
// Criticality of k-connectivity is checked and recorded. Graphs with
// fewer than 3k-1 vertices skip the pipeline and verify the bound
// directly.
inline TauBoundReport tau_bound_report(const SemisimpleGraph& g, int k,
                                       std::uint64_t cap = kDefaultEnumerationCap) {
  if (k < 1) throw std::invalid_argument("tau_bound_report: k must be positive");
  TauBoundReport report;
  report.mode = "general";
  report.k = k;
  report.n = g.vertex_count();
  report.critical = is_critically_k_connected(g, k);
  if (!report.critical) report.critical_note = "not critically k-connected";
  report.cover = min_vertex_cover(g);
  report.tau = static_cast<int>(report.cover.size());
  report.bound = static_cast<double>(report.n) / (k + 1);
  report.bound_holds = static_cast<long long>(report.tau) * (k + 1) >= report.n;
  if (report.n < 3 * k - 1) {
    report.branch = "small-graph";
    if (report.critical && !report.bound_holds) {
      throw std::runtime_error("tau bound property violation: final bound fails");
    }
    return report;
  }
  report.branch = "pipeline";
  std::vector<int> x_set;
  {
    std::vector<char> covered(g.vertex_count(), 0);
    for (int v : report.cover) covered[v] = 1;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!covered[v]) x_set.push_back(v);
    }
  }
  report.pairing = build_pairing_general(g, k, x_set, cap);
  report.x_size = static_cast<int>(report.pairing.domain.size());
  report.f_size = static_cast<int>(report.pairing.support.size());
  SemisimpleGraph cover_graph = detail::cover_graph(g, report.cover, report.pairing);
  SparseCertificate certificate = sparse_local_certificate(cover_graph, k);
  report.certificate_edges = certificate.edge_count;
  int support_inside = detail::support_edges_in(certificate.subgraph, report.cover, report.pairing, report.n);
  detail::append_check(report, "every pairing edge survives in the certificate", report.f_size, support_inside);
  detail::append_check(report, "|X| = |F|", report.x_size, report.f_size);
  detail::append_check(report, "|F| <= |E+|", report.f_size, report.certificate_edges);
  if (report.tau > k) {
    detail::append_check(report, "|E+| <= k|T| - C(k+1,2)", report.certificate_edges,
                         static_cast<long long>(k) * report.tau - static_cast<long long>(k) * (k + 1) / 2);
  } else {
    detail::append_check(report, "|E+| <= k|T|", report.certificate_edges,
                         static_cast<long long>(k) * report.tau);
  }
  detail::require_chain(report);
  if (report.x_size != report.f_size) {
    throw std::runtime_error("tau bound property violation: |X| = |F|");
  }
  if (!report.bound_holds) {
    throw std::runtime_error("tau bound property violation: final bound fails");
  }
  return report;
}

}  // namespace genmat
