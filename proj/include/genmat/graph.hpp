#pragma once

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace genmat {

using EdgeList = std::vector<std::pair<int, int>>;

// Undirected graph that may carry loops but no parallel edges. Edges are kept
// canonically as (u, v) with u <= v, sorted lexicographically; a loop at u is
// the pair (u, u). Instances are immutable: mutators return a new graph.
class SemisimpleGraph {
 public:
  SemisimpleGraph() : n_(0) {}

  explicit SemisimpleGraph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("SemisimpleGraph: negative vertex count");
  }

  SemisimpleGraph(int n, EdgeList edges) : SemisimpleGraph(n) {
    for (auto& [u, v] : edges) {
      if (u > v) std::swap(u, v);
      if (u < 0 || v >= n_) throw std::invalid_argument("SemisimpleGraph: vertex index out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const EdgeList& edges() const { return edges_; }
  EdgeList flat_edges() const { return edges_; }

  bool has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
  }

  bool has_loop(int v) const { return has_edge(v, v); }

  bool is_simple() const {
    for (const auto& [u, v] : edges_)
      if (u == v) return false;
    return true;
  }

  // Sorted neighbour list; contains v itself exactly when v has a loop.
  std::vector<int> neighbors(int v) const {
    check_vertex(v);
    std::vector<int> result;
    for (const auto& [a, b] : edges_) {
      if (a == v) result.push_back(b);
      else if (b == v) result.push_back(a);
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
  }

  // Loops contribute one to the degree.
  int degree(int v) const {
    check_vertex(v);
    int deg = 0;
    for (const auto& [a, b] : edges_)
      if (a == v || b == v) ++deg;
    return deg;
  }

  int min_degree() const {
    if (n_ == 0) return 0;
    std::vector<int> deg(n_, 0);
    for (const auto& [a, b] : edges_) {
      ++deg[a];
      if (b != a) ++deg[b];
    }
    return *std::min_element(deg.begin(), deg.end());
  }

  // Per-vertex sorted neighbour lists (self included for loops).
  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(n_);
    for (const auto& [a, b] : edges_) {
      adj[a].push_back(b);
      if (b != a) adj[b].push_back(a);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    return adj;
  }

  SemisimpleGraph add_edge(int u, int v) const {  // no-op if already present
    check_vertex(u);
    check_vertex(v);
    if (has_edge(u, v)) return *this;
    EdgeList edges = edges_;
    edges.emplace_back(u, v);
    return SemisimpleGraph(n_, std::move(edges));
  }

  SemisimpleGraph delete_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v)) {
      throw std::invalid_argument("SemisimpleGraph: delete_edge on absent edge");
    }
    EdgeList edges = edges_;
    edges.erase(edges.begin() + (it - edges_.begin()));
    SemisimpleGraph result(n_);
    result.edges_ = std::move(edges);
    return result;
  }

  // Removes v and its edges; vertices above v shift down by one.
  SemisimpleGraph delete_vertex(int v) const {
    check_vertex(v);
    EdgeList edges;
    for (const auto& [a, b] : edges_) {
      if (a == v || b == v) continue;
      edges.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
    }
    return SemisimpleGraph(n_ - 1, std::move(edges));
  }

  // Subgraph on the given vertices, renumbered in ascending order.
  SemisimpleGraph induced_subgraph(std::vector<int> keep) const {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<int> index(n_, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
      check_vertex(keep[i]);
      index[keep[i]] = static_cast<int>(i);
    }
    EdgeList edges;
    for (const auto& [a, b] : edges_) {
      if (index[a] >= 0 && index[b] >= 0) edges.emplace_back(index[a], index[b]);
    }
    return SemisimpleGraph(static_cast<int>(keep.size()), std::move(edges));
  }

  std::vector<std::vector<int>> components() const {
    std::vector<std::vector<int>> result;
    std::vector<int> label(n_, -1);
    auto adj = adjacency();
    for (int start = 0; start < n_; ++start) {
      if (label[start] >= 0) continue;
      int id = static_cast<int>(result.size());
      result.emplace_back();
      std::queue<int> queue;
      queue.push(start);
      label[start] = id;
      while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        result[id].push_back(v);
        for (int w : adj[v]) {
          if (label[w] < 0) {
            label[w] = id;
            queue.push(w);
          }
        }
      }
      std::sort(result[id].begin(), result[id].end());
    }
    return result;
  }

  bool connected() const { return n_ <= 1 || components().size() == 1; }

  bool operator==(const SemisimpleGraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("SemisimpleGraph: vertex index out of range");
  }

  int n_;
  EdgeList edges_;
};

inline SemisimpleGraph add_loops(const SemisimpleGraph& g) {
  EdgeList edges = g.edges();
  for (int v = 0; v < g.vertex_count(); ++v) edges.emplace_back(v, v);
  return SemisimpleGraph(g.vertex_count(), std::move(edges));
}

// Bipartite graph with colour classes X (left, size a) and Y (right, size b).
// The constructor takes class-local pairs (i, j); every other member works
// with flat vertex ids, where X occupies 0..a-1 and Y occupies a..a+b-1.
class BipartiteGraph {
 public:
  BipartiteGraph() : a_(0), b_(0) {}

  BipartiteGraph(int a, int b) : a_(a), b_(b) {
    if (a < 0 || b < 0) throw std::invalid_argument("BipartiteGraph: negative class size");
  }

  BipartiteGraph(int a, int b, EdgeList class_edges) : BipartiteGraph(a, b) {
    for (const auto& [i, j] : class_edges) {
      if (i < 0 || i >= a_ || j < 0 || j >= b_) {
        throw std::invalid_argument("BipartiteGraph: vertex index out of range");
      }
    }
    std::sort(class_edges.begin(), class_edges.end());
    class_edges.erase(std::unique(class_edges.begin(), class_edges.end()), class_edges.end());
    edges_ = std::move(class_edges);
  }

  int left_count() const { return a_; }
  int right_count() const { return b_; }
  int vertex_count() const { return a_ + b_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Class-local edge pairs (i in X, j in Y), lexicographically sorted.
  const EdgeList& edges() const { return edges_; }

  // Same edges as flat pairs (i, a + j); this is the canonical edge order.
  EdgeList flat_edges() const {
    EdgeList result;
    result.reserve(edges_.size());
    for (const auto& [i, j] : edges_) result.emplace_back(i, a_ + j);
    return result;
  }

  bool is_left(int v) const {
    check_vertex(v);
    return v < a_;
  }

  int flat_left(int i) const { return i; }
  int flat_right(int j) const { return a_ + j; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u > v) std::swap(u, v);
    if (u >= a_ || v < a_) return false;
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v - a_));
  }

  bool has_loop(int) const { return false; }
  bool is_simple() const { return true; }

  std::vector<int> neighbors(int v) const {
    check_vertex(v);
    std::vector<int> result;
    if (v < a_) {
      for (const auto& [i, j] : edges_)
        if (i == v) result.push_back(a_ + j);
    } else {
      for (const auto& [i, j] : edges_)
        if (a_ + j == v) result.push_back(i);
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  int min_degree() const {
    if (vertex_count() == 0) return 0;
    std::vector<int> deg(vertex_count(), 0);
    for (const auto& [i, j] : edges_) {
      ++deg[i];
      ++deg[a_ + j];
    }
    return *std::min_element(deg.begin(), deg.end());
  }

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(vertex_count());
    for (const auto& [i, j] : edges_) {
      adj[i].push_back(a_ + j);
      adj[a_ + j].push_back(i);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    return adj;
  }

  BipartiteGraph add_edge(int u, int v) const {  // flat ids; no-op if present
    check_cross(u, v);
    if (has_edge(u, v)) return *this;
    if (u > v) std::swap(u, v);
    EdgeList edges = edges_;
    edges.emplace_back(u, v - a_);
    return BipartiteGraph(a_, b_, std::move(edges));
  }

  BipartiteGraph delete_edge(int u, int v) const {
    check_cross(u, v);
    if (!has_edge(u, v)) throw std::invalid_argument("BipartiteGraph: delete_edge on absent edge");
    if (u > v) std::swap(u, v);
    EdgeList edges;
    for (const auto& e : edges_)
      if (e != std::make_pair(u, v - a_)) edges.push_back(e);
    return BipartiteGraph(a_, b_, std::move(edges));
  }

  // Removes flat vertex v; later vertices of its class shift down by one.
  BipartiteGraph delete_vertex(int v) const {
    check_vertex(v);
    EdgeList edges;
    if (v < a_) {
      for (const auto& [i, j] : edges_) {
        if (i == v) continue;
        edges.emplace_back(i > v ? i - 1 : i, j);
      }
      return BipartiteGraph(a_ - 1, b_, std::move(edges));
    }
    int jv = v - a_;
    for (const auto& [i, j] : edges_) {
      if (j == jv) continue;
      edges.emplace_back(i, j > jv ? j - 1 : j);
    }
    return BipartiteGraph(a_, b_ - 1, std::move(edges));
  }

  // Subgraph on the given flat vertices; each class is renumbered in
  // ascending order.
  BipartiteGraph induced_subgraph(std::vector<int> keep) const {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<int> index(vertex_count(), -1);
    int new_a = 0, new_b = 0;
    for (int v : keep) {
      check_vertex(v);
      index[v] = v < a_ ? new_a++ : new_b++;
    }
    EdgeList edges;
    for (const auto& [i, j] : edges_) {
      if (index[i] >= 0 && index[a_ + j] >= 0) edges.emplace_back(index[i], index[a_ + j]);
    }
    return BipartiteGraph(new_a, new_b, std::move(edges));
  }

  // Forgets the bipartition; flat vertex ids are preserved.
  SemisimpleGraph to_semisimple() const {
    return SemisimpleGraph(vertex_count(), flat_edges());
  }

  std::vector<std::vector<int>> components() const { return to_semisimple().components(); }
  bool connected() const { return to_semisimple().connected(); }

  bool operator==(const BipartiteGraph& other) const {
    return a_ == other.a_ && b_ == other.b_ && edges_ == other.edges_;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= vertex_count()) {
      throw std::invalid_argument("BipartiteGraph: vertex index out of range");
    }
  }

  void check_cross(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if ((u < a_) == (v < a_)) {
      throw std::invalid_argument("BipartiteGraph: edge endpoints must lie in different classes");
    }
  }

  int a_, b_;
  EdgeList edges_;  // class-local pairs
};

}  // namespace genmat
