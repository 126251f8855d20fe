#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "genmat/graph.hpp"
#include "genmat/matroids.hpp"
#include "genmat/rng.hpp"

namespace genmat {

// Target lists may contain kSelfTarget, which stands for the new vertex the
// list belongs to and so creates a loop there.
inline constexpr int kSelfTarget = -1;

// Vertex-extension moves. With n the vertex count of the graph being
// extended, new vertices take the next free ids:
//   Zero      adds vertex n joined to `targets`: d distinct values, each an
//             existing vertex or kSelfTarget.
//   DoubleOne removes `removed_edge` xy (x == y allowed when the loop
//             exists), adds u = n with `u_targets` (d distinct values from
//             the old vertices and kSelfTarget, containing x) and v = n + 1
//             with `v_targets` (same rule, containing y), plus the edge uv.
//   LoopedOne removes a non-loop edge xy, adds vertex n joined to `targets`
//             (d distinct old vertices containing x and y, hence d >= 2)
//             plus a loop at n.
// Edge-count deltas are d, 2d and d respectively.
enum class ExtensionVariant { kZero, kDoubleOne, kLoopedOne };

struct ExtensionStep {
  ExtensionVariant variant;
  int dim = 0;
  std::vector<int> targets;    // Zero, LoopedOne
  std::vector<int> u_targets;  // DoubleOne
  std::vector<int> v_targets;  // DoubleOne
  std::pair<int, int> removed_edge{-1, -1};  // DoubleOne, LoopedOne
};

namespace detail {

inline void check_target_set(const std::vector<int>& targets, int dim, const char* who) {
  if (static_cast<int>(targets.size()) != dim) {
    throw std::invalid_argument(std::string(who) + ": need exactly d targets");
  }
  std::vector<int> sorted = targets;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument(std::string(who) + ": duplicate target");
  }
}

inline bool contains(const std::vector<int>& list, int v) {
  return std::find(list.begin(), list.end(), v) != list.end();
}

}  // namespace detail

inline bool step_creates_loop(const ExtensionStep& step) {
  if (step.variant == ExtensionVariant::kLoopedOne) return true;
  if (step.removed_edge.first >= 0 && step.removed_edge.first == step.removed_edge.second) return true;
  return detail::contains(step.targets, kSelfTarget) ||
         detail::contains(step.u_targets, kSelfTarget) ||
         detail::contains(step.v_targets, kSelfTarget);
}

inline SemisimpleGraph apply_step(const SemisimpleGraph& g, const ExtensionStep& step) {
  int n = g.vertex_count();
  int d = step.dim;
  if (d < 1) throw std::invalid_argument("apply_step: dimension must be positive");
  auto check_old = [&](int t, const char* who) {
    if (t != kSelfTarget && (t < 0 || t >= n)) {
      throw std::invalid_argument(std::string(who) + ": target out of range");
    }
  };
  switch (step.variant) {
    case ExtensionVariant::kZero: {
      detail::check_target_set(step.targets, d, "zero extension");
      EdgeList edges = g.edges();
      for (int t : step.targets) {
        check_old(t, "zero extension");
        edges.emplace_back(t == kSelfTarget ? n : t, n);
      }
      return SemisimpleGraph(n + 1, std::move(edges));
    }
    case ExtensionVariant::kDoubleOne: {
      auto [x, y] = step.removed_edge;
      SemisimpleGraph base = g.delete_edge(x, y);  // rejects absent edges
      detail::check_target_set(step.u_targets, d, "double 1-extension (u)");
      detail::check_target_set(step.v_targets, d, "double 1-extension (v)");
      if (!detail::contains(step.u_targets, x) && !detail::contains(step.u_targets, y)) {
        throw std::invalid_argument("double 1-extension: u targets must contain an end of xy");
      }
      if (!detail::contains(step.v_targets, y) && !detail::contains(step.v_targets, x)) {
        throw std::invalid_argument("double 1-extension: v targets must contain an end of xy");
      }
      int u = n, v = n + 1;
      EdgeList edges = base.edges();
      for (int t : step.u_targets) {
        check_old(t, "double 1-extension (u)");
        edges.emplace_back(t == kSelfTarget ? u : t, u);
      }
      for (int t : step.v_targets) {
        check_old(t, "double 1-extension (v)");
        edges.emplace_back(t == kSelfTarget ? v : t, v);
      }
      edges.emplace_back(u, v);
      return SemisimpleGraph(n + 2, std::move(edges));
    }
    case ExtensionVariant::kLoopedOne: {
      auto [x, y] = step.removed_edge;
      if (x == y) throw std::invalid_argument("looped 1-extension: needs a non-loop edge");
      if (d < 2) throw std::invalid_argument("looped 1-extension: needs d >= 2");
      SemisimpleGraph base = g.delete_edge(x, y);
      detail::check_target_set(step.targets, d, "looped 1-extension");
      if (!detail::contains(step.targets, x) || !detail::contains(step.targets, y)) {
        throw std::invalid_argument("looped 1-extension: targets must contain x and y");
      }
      EdgeList edges = base.edges();
      for (int t : step.targets) {
        if (t < 0 || t >= n) throw std::invalid_argument("looped 1-extension: target out of range");
        edges.emplace_back(t, n);
      }
      edges.emplace_back(n, n);
      return SemisimpleGraph(n + 1, std::move(edges));
    }
  }
  throw std::invalid_argument("apply_step: unknown variant");
}

// Bipartite version. Targets are flat ids of g and must all lie in one class;
// the new vertex joins the other class, so all its edges cross. Loop-creating
// steps are rejected. Class-local numbering of existing vertices is
// preserved; flat ids of the right class shift when the left class grows.
inline BipartiteGraph apply_step(const BipartiteGraph& g, const ExtensionStep& step) {
  int d = step.dim;
  if (d < 1) throw std::invalid_argument("apply_step: dimension must be positive");
  if (step_creates_loop(step)) {
    throw std::invalid_argument("apply_step: loop-creating step on a bipartite graph");
  }
  int a = g.left_count(), b = g.right_count();

  // Returns 0/1 for the common class of a nonempty flat target set.
  auto side_of_targets = [&](const std::vector<int>& targets, const char* who) {
    bool left = false, right = false;
    for (int t : targets) {
      if (t < 0 || t >= g.vertex_count()) {
        throw std::invalid_argument(std::string(who) + ": target out of range");
      }
      (t < a ? left : right) = true;
    }
    if (left && right) {
      throw std::invalid_argument(std::string(who) + ": targets must lie in a single class");
    }
    return right ? 1 : 0;
  };
  auto local = [&](int flat) { return flat < a ? flat : flat - a; };

  switch (step.variant) {
    case ExtensionVariant::kZero: {
      detail::check_target_set(step.targets, d, "zero extension");
      int side = side_of_targets(step.targets, "zero extension");
      EdgeList edges = g.edges();
      for (int t : step.targets) {
        if (side == 0) edges.emplace_back(local(t), b);  // new right vertex
        else edges.emplace_back(a, local(t));            // new left vertex
      }
      return side == 0 ? BipartiteGraph(a, b + 1, std::move(edges))
                       : BipartiteGraph(a + 1, b, std::move(edges));
    }
    case ExtensionVariant::kDoubleOne: {
      auto [x, y] = step.removed_edge;
      BipartiteGraph base = g.delete_edge(x, y);  // also rejects same-class pairs
      if (x > y) std::swap(x, y);                 // x left, y right from here on
      detail::check_target_set(step.u_targets, d, "double 1-extension (u)");
      detail::check_target_set(step.v_targets, d, "double 1-extension (v)");
      bool u_has_x = detail::contains(step.u_targets, x);
      bool v_has_y = detail::contains(step.v_targets, y);
      bool u_has_y = detail::contains(step.u_targets, y);
      bool v_has_x = detail::contains(step.v_targets, x);
      const std::vector<int>* left_side_targets;   // the list living in x's class
      const std::vector<int>* right_side_targets;  // the list living in y's class
      if (u_has_x && v_has_y) {
        left_side_targets = &step.u_targets;
        right_side_targets = &step.v_targets;
      } else if (u_has_y && v_has_x) {
        left_side_targets = &step.v_targets;
        right_side_targets = &step.u_targets;
      } else {
        throw std::invalid_argument("double 1-extension: target lists must contain x and y");
      }
      if (side_of_targets(*left_side_targets, "double 1-extension") != 0 ||
          side_of_targets(*right_side_targets, "double 1-extension") != 1) {
        throw std::invalid_argument("double 1-extension: targets must stay in the classes of x and y");
      }
      // The vertex attached to x's class joins the right class (local id b),
      // the other one the left class (local id a); the new edge crosses.
      EdgeList edges = base.edges();
      for (int t : *left_side_targets) edges.emplace_back(local(t), b);
      for (int t : *right_side_targets) edges.emplace_back(a, local(t));
      edges.emplace_back(a, b);
      return BipartiteGraph(a + 1, b + 1, std::move(edges));
    }
    case ExtensionVariant::kLoopedOne:
      throw std::invalid_argument("looped 1-extension: impossible on a bipartite graph");
  }
  throw std::invalid_argument("apply_step: unknown variant");
}

// Whether the step stays inside the operation set certified for `kind`:
// sym_completion admits all three variants including loop-creating steps,
// the loopless kinds only loop-free Zero and DoubleOne steps. Bipartition
// compliance of the targets is checked by apply_step, which knows the
// classes.
inline bool simple_variant_allowed(const ExtensionStep& step, MatroidKind kind) {
  if (kind.family == MatroidFamily::kSymCompletion) return true;
  return !step_creates_loop(step);
}

// Draws a valid step of the requested variant, or nothing when none exists
// (too few vertices, no deletable edge, d < 2 for LoopedOne). Each choice
// (edge, then target sets) is uniform.
template <class G>
std::optional<ExtensionStep> random_step(const G& g, MatroidKind kind, int d,
                                         ExtensionVariant variant, std::mt19937_64& rng) {
  constexpr bool bipartite = std::is_same_v<G, BipartiteGraph>;
  bool loops_ok = kind.allows_loops() && !bipartite;
  int n = g.vertex_count();

  // Uniform d-subset of `pool`, required elements first.
  auto draw_targets = [&](std::vector<int> pool, std::vector<int> required) -> std::optional<std::vector<int>> {
    std::vector<int> out = required;
    pool.erase(std::remove_if(pool.begin(), pool.end(),
                              [&](int t) { return detail::contains(required, t); }),
               pool.end());
    if (static_cast<int>(out.size()) > d) return std::nullopt;
    while (static_cast<int>(out.size()) < d) {
      if (pool.empty()) return std::nullopt;
      std::size_t pick = uniform_below(rng, pool.size());
      out.push_back(pool[pick]);
      pool.erase(pool.begin() + pick);
    }
    return out;
  };

  auto all_vertices = [&](int except_a, int except_b) {
    std::vector<int> pool;
    for (int v = 0; v < n; ++v)
      if (v != except_a && v != except_b) pool.push_back(v);
    return pool;
  };

  auto class_pool = [&](int like_flat) {
    std::vector<int> pool;
    if constexpr (bipartite) {
      int a = g.left_count();
      bool left = like_flat < a;
      for (int v = 0; v < n; ++v)
        if ((v < a) == left && v != like_flat) pool.push_back(v);
    }
    return pool;
  };

  ExtensionStep step;
  step.variant = variant;
  step.dim = d;

  switch (variant) {
    case ExtensionVariant::kZero: {
      std::vector<int> pool;
      if constexpr (bipartite) {
        // pick the class the targets come from, then d of its vertices
        int a = g.left_count(), b = g.right_count();
        if (a < d && b < d) return std::nullopt;
        int side = (a >= d && b >= d) ? static_cast<int>(uniform_below(rng, 2)) : (a >= d ? 0 : 1);
        for (int v = 0; v < n; ++v)
          if ((v < a) == (side == 0)) pool.push_back(v);
      } else {
        pool = all_vertices(-1, -1);
        if (loops_ok) pool.push_back(kSelfTarget);
      }
      auto targets = draw_targets(pool, {});
      if (!targets) return std::nullopt;
      step.targets = *targets;
      return step;
    }
    case ExtensionVariant::kDoubleOne: {
      EdgeList candidates;
      for (const auto& e : g.flat_edges())
        if (loops_ok || e.first != e.second) candidates.push_back(e);
      if (candidates.empty()) return std::nullopt;
      auto [x, y] = candidates[uniform_below(rng, candidates.size())];
      step.removed_edge = {x, y};
      std::vector<int> u_pool, v_pool;
      if constexpr (bipartite) {
        u_pool = class_pool(x);
        v_pool = class_pool(y);
      } else {
        u_pool = all_vertices(x, -1);
        v_pool = all_vertices(y, -1);
        if (loops_ok) {
          u_pool.push_back(kSelfTarget);
          v_pool.push_back(kSelfTarget);
        }
      }
      auto u_targets = draw_targets(std::move(u_pool), {x});
      auto v_targets = draw_targets(std::move(v_pool), {y});
      if (!u_targets || !v_targets) return std::nullopt;
      step.u_targets = *u_targets;
      step.v_targets = *v_targets;
      return step;
    }
    case ExtensionVariant::kLoopedOne: {
      if (bipartite || !kind.allows_loops() || d < 2) return std::nullopt;
      EdgeList candidates;
      for (const auto& e : g.flat_edges())
        if (e.first != e.second) candidates.push_back(e);
      if (candidates.empty()) return std::nullopt;
      auto [x, y] = candidates[uniform_below(rng, candidates.size())];
      step.removed_edge = {x, y};
      auto targets = draw_targets(all_vertices(x, y), {x, y});
      if (!targets) return std::nullopt;
      step.targets = *targets;
      return step;
    }
  }
  return std::nullopt;
}

}  // namespace genmat
