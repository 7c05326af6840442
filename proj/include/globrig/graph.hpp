#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace globrig {

using Vertex = int;

/// Largest order the readers accept; adjacency is a dense n x n matrix.
inline constexpr int kMaxReadableOrder = 1 << 14;

/// Canonical undirected edge key: always u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr bool contains(Vertex x) const { return u == x || v == x; }
  constexpr Vertex other(Vertex x) const { return x == u ? v : u; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable finite simple undirected graph on vertices 0..n-1.
///
/// Neighbour lists are kept sorted and an n*n adjacency matrix backs
/// `adjacent()`. Build one with `Graph::from_edges` or a `Graph(n)` edgeless
/// graph; everything else derives new values.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n), adj_(checked_order(n)), matrix_(std::size_t(n) * std::size_t(n), 0) {}

  /// Throws std::invalid_argument on self-loops, duplicate edges or
  /// out-of-range endpoints.
  static Graph from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (const Edge& e : edges) {
      if (e.u < 0 || e.v >= n) {
        throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) + " " +
                                    std::to_string(e.v));
      }
      if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
      if (g.adjacent(e.u, e.v)) {
        throw std::invalid_argument("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
      }
      g.link(e.u, e.v);
    }
    g.finish();
    return g;
  }

  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  std::size_t size() const { return m_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[std::size_t(v)]; }
  int degree(Vertex v) const { return int(adj_[std::size_t(v)].size()); }

  bool adjacent(Vertex u, Vertex v) const {
    return matrix_[std::size_t(u) * std::size_t(n_) + std::size_t(v)] != 0;
  }
  bool has_edge(Edge e) const { return adjacent(e.u, e.v); }

  int min_degree() const {
    int d = n_ == 0 ? 0 : degree(0);
    for (Vertex v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
  }
  int max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  bool is_regular() const { return min_degree() == max_degree(); }
  bool is_complete() const { return 2 * m_ == std::size_t(n_) * std::size_t(std::max(n_ - 1, 0)); }

  /// Edges in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : adj_[std::size_t(u)]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  std::vector<int> degree_sequence() const {
    std::vector<int> d(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) d[std::size_t(v)] = degree(v);
    std::sort(d.begin(), d.end());
    return d;
  }

  Graph without_edge(Edge e) const {
    auto es = edges();
    std::erase(es, e);
    return from_edges(n_, es);
  }

  Graph with_edge(Edge e) const {
    auto es = edges();
    es.push_back(e);
    return from_edges(n_, es);
  }

  /// Subgraph induced on `keep`; vertex keep[i] becomes i.
  Graph induced(std::span<const Vertex> keep) const {
    std::vector<int> index(std::size_t(n_), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) index[std::size_t(keep[i])] = int(i);
    std::vector<Edge> es;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      for (Vertex w : neighbors(keep[i])) {
        int j = index[std::size_t(w)];
        if (j > int(i)) es.emplace_back(int(i), j);
      }
    }
    return from_edges(int(keep.size()), es);
  }

  /// Relabel so that vertex v becomes perm[v].
  Graph permuted(std::span<const Vertex> perm) const {
    std::vector<Edge> es;
    es.reserve(m_);
    for (const Edge& e : edges()) es.emplace_back(perm[std::size_t(e.u)], perm[std::size_t(e.v)]);
    return from_edges(n_, es);
  }

  Graph complement() const {
    std::vector<Edge> es;
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = u + 1; v < n_; ++v) {
        if (!adjacent(u, v)) es.emplace_back(u, v);
      }
    }
    return from_edges(n_, es);
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.matrix_ == b.matrix_; }

 private:
  static std::size_t checked_order(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    return std::size_t(n);
  }

  void link(Vertex u, Vertex v) {
    adj_[std::size_t(u)].push_back(v);
    adj_[std::size_t(v)].push_back(u);
    matrix_[std::size_t(u) * std::size_t(n_) + std::size_t(v)] = 1;
    matrix_[std::size_t(v) * std::size_t(n_) + std::size_t(u)] = 1;
    ++m_;
  }

  void finish() {
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint8_t> matrix_;
};

/// Disjoint union; vertices of `b` are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  auto es = a.edges();
  for (const Edge& e : b.edges()) es.emplace_back(e.u + a.order(), e.v + a.order());
  return Graph::from_edges(a.order() + b.order(), es);
}

}  // namespace globrig
