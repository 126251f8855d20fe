#pragma once

#include <stdexcept>
#include <vector>

#include "genmat/graph.hpp"

namespace genmat {

// K_n with a loop at every vertex.
inline SemisimpleGraph complete_semisimple(int n) {
  EdgeList edges;
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v) edges.emplace_back(u, v);
  return SemisimpleGraph(n, std::move(edges));
}

inline SemisimpleGraph complete_graph(int n) {
  EdgeList edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return SemisimpleGraph(n, std::move(edges));
}

inline BipartiteGraph complete_bipartite(int m, int n) {
  EdgeList edges;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) edges.emplace_back(i, j);
  return BipartiteGraph(m, n, std::move(edges));
}

// Classes occupy 0..n1-1, n1..n1+n2-1, n1+n2..n1+n2+n3-1. Empty classes are
// allowed, so complete_tripartite(m, m, 0) is K_{m,m} as a semisimple graph.
inline SemisimpleGraph complete_tripartite(int n1, int n2, int n3) {
  if (n1 < 0 || n2 < 0 || n3 < 0) throw std::invalid_argument("complete_tripartite: negative class size");
  int n = n1 + n2 + n3;
  auto cls = [&](int v) { return v < n1 ? 0 : (v < n1 + n2 ? 1 : 2); };
  EdgeList edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (cls(u) != cls(v)) edges.emplace_back(u, v);
  return SemisimpleGraph(n, std::move(edges));
}

// Bipartite circulant on classes x_0..x_{s-1} and y_0..y_{s-1}: x_i is joined
// to y_i, y_{i+1}, ..., y_{i+k-1}, indices mod s. The result is k-regular and,
// for k >= 2, k-connected.
inline BipartiteGraph circulant_bipartite(int s, int k) {
  if (s < 1 || k < 1 || k > s) throw std::invalid_argument("circulant_bipartite: need 1 <= k <= s");
  EdgeList edges;
  for (int i = 0; i < s; ++i)
    for (int t = 0; t < k; ++t) edges.emplace_back(i, (i + t) % s);
  return BipartiteGraph(s, s, std::move(edges));
}

// Split family witnessing that high connectivity does not force
// (a,b)-birigidity. Starting from the bipartite circulant with degree
// k = 2ab - 1 on classes X0, Y0 of size s, every vertex v is split into a set
// A_v of k degree-one vertices, one per original edge at v, and a set B_v of
// k fresh vertices, and all A_v x B_v edges are added. The output classes are
//   X = (union of A_v for v in X0) + (union of B_v for v in Y0),
//   Y = (union of B_v for v in X0) + (union of A_v for v in Y0),
// each of size 2sk, laid out block by block in that order. The graph is
// k-connected, yet its generic (a,b)-birigidity matrix has rank at most
// a|X| + b|Y| - s < a|X| + b|Y| - ab.
inline BipartiteGraph ly_split_family(int a, int b, int s) {
  if (a < 1 || b < 1) throw std::invalid_argument("ly_split_family: need a, b >= 1");
  int k = 2 * a * b - 1;
  if (s <= k || s % 2 != 0) {
    throw std::invalid_argument("ly_split_family: need s even and s > 2ab - 1");
  }
  BipartiteGraph base = circulant_bipartite(s, k);

  // Left class: s blocks A_{x_i} then s blocks B_{y_j}; right class: s blocks
  // B_{x_i} then s blocks A_{y_j}; every block has k vertices.
  auto left_a = [&](int i, int slot) { return i * k + slot; };       // A_v, v = x_i
  auto right_b = [&](int i, int slot) { return i * k + slot; };      // B_v, v = x_i
  auto left_b = [&](int j, int slot) { return (s + j) * k + slot; }; // B_v, v = y_j
  auto right_a = [&](int j, int slot) { return (s + j) * k + slot; };// A_v, v = y_j

  EdgeList edges;
  std::vector<int> used_x(s, 0), used_y(s, 0);  // next free A_v slot
  for (const auto& [i, j] : base.edges()) {
    edges.emplace_back(left_a(i, used_x[i]++), right_a(j, used_y[j]++));
  }
  for (int i = 0; i < s; ++i)
    for (int p = 0; p < k; ++p)
      for (int q = 0; q < k; ++q) edges.emplace_back(left_a(i, p), right_b(i, q));
  for (int j = 0; j < s; ++j)
    for (int p = 0; p < k; ++p)
      for (int q = 0; q < k; ++q) edges.emplace_back(left_b(j, q), right_a(j, p));
  return BipartiteGraph(2 * s * k, 2 * s * k, std::move(edges));
}

// Glues p copies of K_{k,k}: copy i lives on (A_i, B_i) with marked vertices
// a_i, b_i; the sets B_i - b_i are identified across copies and a_1..a_p are
// merged into one vertex. |V| = k(p+1); the merged apex keeps only one copy
// of its k-1 edges into the shared set, so |E| = p k^2 - (p-1)(k-1). The
// result is critically k-connected with vertex cover number at most k + p.
inline BipartiteGraph critical_family(int k, int p) {
  if (k < 1 || p < 1) throw std::invalid_argument("critical_family: need k, p >= 1");
  // Left class: apex 0, then A_i - a_i as blocks of k-1 (copy i from 1).
  // Right class: shared B* = 0..k-2, then b_1..b_p = k-1..k-2+p.
  auto left_rest = [&](int copy, int slot) { return 1 + copy * (k - 1) + slot; };
  EdgeList edges;
  for (int copy = 0; copy < p; ++copy) {
    int bi = k - 1 + copy;
    edges.emplace_back(0, bi);
    for (int q = 0; q < k - 1; ++q) edges.emplace_back(0, q);  // deduplicated
    for (int slot = 0; slot < k - 1; ++slot) {
      edges.emplace_back(left_rest(copy, slot), bi);
      for (int q = 0; q < k - 1; ++q) edges.emplace_back(left_rest(copy, slot), q);
    }
  }
  return BipartiteGraph(1 + p * (k - 1), k - 1 + p, std::move(edges));
}

}  // namespace genmat
