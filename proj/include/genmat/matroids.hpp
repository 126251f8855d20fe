#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "genmat/dense_matrix.hpp"
#include "genmat/families.hpp"
#include "genmat/graph.hpp"
#include "genmat/prime_field.hpp"
#include "genmat/rng.hpp"

namespace genmat {

// The five matroid families realized as row matroids of generic matrices.
// Each edge of the underlying graph contributes one row; each vertex owns a
// block of columns. "Generic" positions are emulated by uniform random field
// elements, so ranks computed here are correct with one-sided error: they
// never exceed the generic rank and match it with overwhelming probability.
enum class MatroidFamily {
  kSymCompletion,     // semisimple graphs, loops allowed
  kHyperconnectivity, // simple graphs
  kBirigidity,        // bipartite graphs, symmetric dimension
  kBirigidityAB,      // bipartite graphs, dimensions (a, b) per class
  kRigidity,          // simple graphs, bar-joint rigidity
};

struct MatroidKind {
  MatroidFamily family;
  int a;  // for the single-dimension kinds a == b == d
  int b;

  static MatroidKind sym_completion(int d) { return make(MatroidFamily::kSymCompletion, d, d); }
  static MatroidKind hyperconnectivity(int d) { return make(MatroidFamily::kHyperconnectivity, d, d); }
  static MatroidKind birigidity(int d) { return make(MatroidFamily::kBirigidity, d, d); }
  static MatroidKind birigidity_ab(int a, int b) { return make(MatroidFamily::kBirigidityAB, a, b); }
  static MatroidKind rigidity(int d) { return make(MatroidFamily::kRigidity, d, d); }

  bool bipartite_kind() const {
    return family == MatroidFamily::kBirigidity || family == MatroidFamily::kBirigidityAB;
  }

  bool allows_loops() const { return family == MatroidFamily::kSymCompletion; }

  // The single dimension d shared by both classes; the extension and seed
  // machinery is parameterized by it, so the asymmetric kind has none.
  int dim() const {
    if (a != b) throw std::invalid_argument("MatroidKind: asymmetric kind has no single dimension");
    return a;
  }

  std::string label() const {
    switch (family) {
      case MatroidFamily::kSymCompletion: return "sym_completion(" + std::to_string(a) + ")";
      case MatroidFamily::kHyperconnectivity: return "hyperconnectivity(" + std::to_string(a) + ")";
      case MatroidFamily::kBirigidity: return "birigidity(" + std::to_string(a) + ")";
      case MatroidFamily::kBirigidityAB:
        return "birigidity(" + std::to_string(a) + "," + std::to_string(b) + ")";
      case MatroidFamily::kRigidity: return "rigidity(" + std::to_string(a) + ")";
    }
    return "?";
  }

  bool operator==(const MatroidKind& other) const {
    return family == other.family && a == other.a && b == other.b;
  }

 private:
  static MatroidKind make(MatroidFamily f, int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("MatroidKind: dimension must be positive");
    return MatroidKind{f, a, b};
  }
};

// One evaluation point: a field vector per vertex. Semisimple kinds fill
// point[v] (length d); bipartite kinds fill left_point[i] (length a) for X
// and right_point[j] (length b) for Y.
struct GenericAssignment {
  std::vector<std::vector<std::uint64_t>> point;
  std::vector<std::vector<std::uint64_t>> left_point;
  std::vector<std::vector<std::uint64_t>> right_point;
};

struct RankQueryConfig {
  int trials = 3;
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t rng_seed = 0;
};

namespace detail {

inline std::vector<std::uint64_t> random_vector(int len, const PrimeField& field, std::mt19937_64& rng) {
  std::vector<std::uint64_t> v(len);
  for (auto& x : v) x = uniform_below(rng, field.modulus());
  return v;
}

}  // namespace detail

inline GenericAssignment draw_assignment(const SemisimpleGraph& g, MatroidKind kind,
                                         const PrimeField& field, std::mt19937_64& rng) {
  if (kind.bipartite_kind()) throw std::invalid_argument("draw_assignment: bipartite kind needs a bipartite graph");
  GenericAssignment out;
  out.point.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) out.point.push_back(detail::random_vector(kind.dim(), field, rng));
  return out;
}

inline GenericAssignment draw_assignment(const BipartiteGraph& g, MatroidKind kind,
                                         const PrimeField& field, std::mt19937_64& rng) {
  if (!kind.bipartite_kind()) throw std::invalid_argument("draw_assignment: semisimple kind needs a semisimple graph");
  GenericAssignment out;
  for (int i = 0; i < g.left_count(); ++i) out.left_point.push_back(detail::random_vector(kind.a, field, rng));
  for (int j = 0; j < g.right_count(); ++j) out.right_point.push_back(detail::random_vector(kind.b, field, rng));
  return out;
}

// Rows follow the canonical edge order. Column layout: semisimple kinds give
// vertex v the block [d*v, d*v + d); the bipartite kinds give X-vertex i the
// block [b*i, b*i + b) and Y-vertex j the block [b*|X| + a*j, ... + a).
inline DenseMatrix build_matrix(const SemisimpleGraph& g, MatroidKind kind,
                                const GenericAssignment& assignment, const PrimeField& field) {
  if (kind.bipartite_kind()) throw std::invalid_argument("build_matrix: bipartite kind needs a bipartite graph");
  if (!kind.allows_loops() && !g.is_simple()) {
    throw std::invalid_argument("build_matrix: loops are only allowed under sym_completion");
  }
  if (static_cast<int>(assignment.point.size()) != g.vertex_count()) {
    throw std::invalid_argument("build_matrix: assignment size mismatch");
  }
  int d = kind.dim();
  DenseMatrix m(g.edge_count(), static_cast<std::size_t>(d) * g.vertex_count());
  std::size_t row = 0;
  for (const auto& [u, v] : g.edges()) {
    const auto& pu = assignment.point[u];
    const auto& pv = assignment.point[v];
    switch (kind.family) {
      case MatroidFamily::kSymCompletion:
        if (u == v) {
          for (int t = 0; t < d; ++t) m.at(row, d * u + t) = pu[t];
        } else {
          for (int t = 0; t < d; ++t) m.at(row, d * u + t) = pv[t];
          for (int t = 0; t < d; ++t) m.at(row, d * v + t) = pu[t];
        }
        break;
      case MatroidFamily::kHyperconnectivity:
        // u < v in canonical order: +p(v) in u's block, -p(u) in v's block.
        for (int t = 0; t < d; ++t) m.at(row, d * u + t) = pv[t];
        for (int t = 0; t < d; ++t) m.at(row, d * v + t) = field.neg(pu[t]);
        break;
      case MatroidFamily::kRigidity:
        for (int t = 0; t < d; ++t) m.at(row, d * u + t) = field.sub(pu[t], pv[t]);
        for (int t = 0; t < d; ++t) m.at(row, d * v + t) = field.sub(pv[t], pu[t]);
        break;
      default:
        break;
    }
    ++row;
  }
  return m;
}

inline DenseMatrix build_matrix(const BipartiteGraph& g, MatroidKind kind,
                                const GenericAssignment& assignment, const PrimeField& field) {
  (void)field;
  if (!kind.bipartite_kind()) throw std::invalid_argument("build_matrix: semisimple kind needs a semisimple graph");
  if (static_cast<int>(assignment.left_point.size()) != g.left_count() ||
      static_cast<int>(assignment.right_point.size()) != g.right_count()) {
    throw std::invalid_argument("build_matrix: assignment size mismatch");
  }
  std::size_t x_block = static_cast<std::size_t>(kind.b);
  std::size_t y_base = x_block * g.left_count();
  DenseMatrix m(g.edge_count(), y_base + static_cast<std::size_t>(kind.a) * g.right_count());
  std::size_t row = 0;
  for (const auto& [i, j] : g.edges()) {
    const auto& pi = assignment.left_point[i];   // length a
    const auto& qj = assignment.right_point[j];  // length b
    for (int t = 0; t < kind.b; ++t) m.at(row, x_block * i + t) = qj[t];
    for (int t = 0; t < kind.a; ++t) m.at(row, y_base + static_cast<std::size_t>(kind.a) * j + t) = pi[t];
    ++row;
  }
  return m;
}

// Best rank over config.trials independent random evaluation points; each
// trial draws from substream(rng_seed, trial), so results are reproducible.
inline int generic_rank(const SemisimpleGraph& g, MatroidKind kind, const RankQueryConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("generic_rank: trials must be >= 1");
  PrimeField field(config.prime);
  int best = 0;
  for (int t = 0; t < config.trials; ++t) {
    auto rng = substream(config.rng_seed, static_cast<std::uint64_t>(t));
    auto assignment = draw_assignment(g, kind, field, rng);
    best = std::max(best, static_cast<int>(rank(build_matrix(g, kind, assignment, field), field)));
  }
  return best;
}

inline int generic_rank(const BipartiteGraph& g, MatroidKind kind, const RankQueryConfig& config) {
  if (!kind.bipartite_kind()) return generic_rank(g.to_semisimple(), kind, config);
  if (config.trials < 1) throw std::invalid_argument("generic_rank: trials must be >= 1");
  PrimeField field(config.prime);
  int best = 0;
  for (int t = 0; t < config.trials; ++t) {
    auto rng = substream(config.rng_seed, static_cast<std::uint64_t>(t));
    auto assignment = draw_assignment(g, kind, field, rng);
    best = std::max(best, static_cast<int>(rank(build_matrix(g, kind, assignment, field), field)));
  }
  return best;
}

namespace detail {

inline long long binom2(long long x) { return x * (x - 1) / 2; }

}  // namespace detail

// Rank of the ambient complete graph: K_n with all loops for sym_completion,
// K_n for hyperconnectivity, K_{m,n} for the bipartite kinds. Bar-joint
// rigidity has no closed form and is rejected; compare against a computed
// generic_rank of the complete graph instead.
inline long long rank_formula(MatroidKind kind, int n) {
  long long d = kind.dim();
  switch (kind.family) {
    case MatroidFamily::kSymCompletion:
      return n >= d ? d * n - detail::binom2(d) : detail::binom2(n + 1);
    case MatroidFamily::kHyperconnectivity:
      return n >= d ? d * n - detail::binom2(d + 1) : detail::binom2(n);
    case MatroidFamily::kRigidity:
      throw std::invalid_argument("rank_formula: no closed form for rigidity");
    default:
      throw std::invalid_argument("rank_formula: bipartite kind needs class sizes (m, n)");
  }
}

inline long long rank_formula(MatroidKind kind, int m, int n) {
  if (!kind.bipartite_kind()) throw std::invalid_argument("rank_formula: kind takes a single size");
  long long a = kind.a, b = kind.b;
  if (m >= a && n >= b) return b * m + a * n - a * b;
  return static_cast<long long>(m) * n;
}

inline bool is_independent(const SemisimpleGraph& g, MatroidKind kind, const RankQueryConfig& config) {
  return generic_rank(g, kind, config) == g.edge_count();
}

inline bool is_independent(const BipartiteGraph& g, MatroidKind kind, const RankQueryConfig& config) {
  return generic_rank(g, kind, config) == g.edge_count();
}

// Whether G spans its ambient matroid. For the bipartite kinds a graph whose
// classes are smaller than (a, b) counts as rigid exactly when it is complete
// bipartite, which coincides with reaching rank m*n.
inline bool is_rigid(const SemisimpleGraph& g, MatroidKind kind, const RankQueryConfig& config) {
  if (kind.family == MatroidFamily::kRigidity) {
    return generic_rank(g, kind, config) == generic_rank(complete_graph(g.vertex_count()), kind, config);
  }
  return generic_rank(g, kind, config) == rank_formula(kind, g.vertex_count());
}

inline bool is_rigid(const BipartiteGraph& g, MatroidKind kind, const RankQueryConfig& config) {
  if (!kind.bipartite_kind()) return is_rigid(g.to_semisimple(), kind, config);
  return generic_rank(g, kind, config) == rank_formula(kind, g.left_count(), g.right_count());
}

namespace detail {

template <class G>
void check_ambient_pair(const G& g, MatroidKind kind, int u, int v) {
  if constexpr (std::is_same_v<G, BipartiteGraph>) {
    if (!kind.bipartite_kind()) throw std::invalid_argument("ambient pair: kind/graph mismatch");
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count()) {
      throw std::invalid_argument("ambient pair: vertex index out of range");
    }
    if ((u < g.left_count()) == (v < g.left_count())) {
      throw std::invalid_argument("ambient pair: endpoints must lie in different classes");
    }
  } else {
    if (kind.bipartite_kind()) throw std::invalid_argument("ambient pair: kind/graph mismatch");
    if (u == v && !kind.allows_loops()) {
      throw std::invalid_argument("ambient pair: loop outside sym_completion");
    }
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count()) {
      throw std::invalid_argument("ambient pair: vertex index out of range");
    }
  }
}

}  // namespace detail

// Whether adding uv (a pair of the ambient matroid, possibly already an edge)
// leaves the generic rank unchanged. Both ranks are computed under the same
// config, hence at exactly the same evaluation points.
template <class G>
bool is_linked(const G& g, MatroidKind kind, int u, int v, const RankQueryConfig& config) {
  detail::check_ambient_pair(g, kind, u, v);
  return generic_rank(g.add_edge(u, v), kind, config) == generic_rank(g, kind, config);
}

// All pairs of the ambient matroid, as flat vertex pairs in canonical order.
template <class G>
EdgeList ambient_pairs(const G& g, MatroidKind kind) {
  EdgeList pairs;
  if constexpr (std::is_same_v<G, BipartiteGraph>) {
    if (!kind.bipartite_kind()) throw std::invalid_argument("ambient_pairs: kind/graph mismatch");
    for (int i = 0; i < g.left_count(); ++i)
      for (int j = 0; j < g.right_count(); ++j) pairs.emplace_back(i, g.left_count() + j);
  } else {
    if (kind.bipartite_kind()) throw std::invalid_argument("ambient_pairs: kind/graph mismatch");
    for (int u = 0; u < g.vertex_count(); ++u)
      for (int v = kind.allows_loops() ? u : u + 1; v < g.vertex_count(); ++v) pairs.emplace_back(u, v);
  }
  return pairs;
}

// Matroid closure: G plus every ambient pair whose addition keeps the rank of
// the original graph. Computing all candidates against the same base rank is
// exactly the matroid closure operator, so the result is closed.
template <class G>
G closure(const G& g, MatroidKind kind, const RankQueryConfig& config) {
  int base = generic_rank(g, kind, config);
  G result = g;
  for (const auto& [u, v] : ambient_pairs(g, kind)) {
    if (g.has_edge(u, v)) continue;
    if (generic_rank(g.add_edge(u, v), kind, config) == base) result = result.add_edge(u, v);
  }
  return result;
}

// Rank of the edge set in the cycle matroid: n minus the number of connected
// components. Loops are dependent and contribute nothing.
inline int cycle_matroid_rank(const SemisimpleGraph& g) {
  return g.vertex_count() - static_cast<int>(g.components().size());
}

// Rank in the even-cycle matroid: a component contributes its full vertex
// count when it carries a loop or an odd cycle, and one less otherwise.
inline int even_cycle_rank(const SemisimpleGraph& g) {
  int total = 0;
  auto adj = g.adjacency();
  for (const auto& comp : g.components()) {
    bool full = false;
    for (int v : comp)
      if (g.has_loop(v)) full = true;
    if (!full) {
      // odd cycle <=> the component is not 2-colourable
      std::vector<int> colour(g.vertex_count(), -1);
      std::vector<int> stack{comp[0]};
      colour[comp[0]] = 0;
      while (!stack.empty() && !full) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
          if (w == v) continue;
          if (colour[w] < 0) {
            colour[w] = colour[v] ^ 1;
            stack.push_back(w);
          } else if (colour[w] == colour[v]) {
            full = true;
            break;
          }
        }
      }
    }
    total += static_cast<int>(comp.size()) - (full ? 0 : 1);
  }
  return total;
}

// Confirms on G that being spanning in the d-dimensional rigidity matroid is
// equivalent to the loop-completed graph spanning sym_completion(d+1).
inline bool rigidity_completability_link_check(const SemisimpleGraph& g, int d,
                                               const RankQueryConfig& config) {
  if (!g.is_simple()) throw std::invalid_argument("link check: graph must be simple");
  bool rigid = is_rigid(g, MatroidKind::rigidity(d), config);
  bool completable = is_rigid(add_loops(g), MatroidKind::sym_completion(d + 1), config);
  return rigid == completable;
}

}  // namespace genmat
