#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <queue>
#include <vector>

#include "globrig/graph.hpp"

namespace globrig {

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Row-major n*n matrix of BFS distances; kUnreachable between components.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(int n) : n_(n), d_(std::size_t(n) * std::size_t(n), kUnreachable) {}

  int order() const { return n_; }
  int operator()(Vertex x, Vertex y) const { return d_[index(x, y)]; }
  int& at(Vertex x, Vertex y) { return d_[index(x, y)]; }

  /// Largest finite distance.
  int max_finite() const {
    int best = 0;
    for (int d : d_) {
      if (d != kUnreachable) best = std::max(best, d);
    }
    return best;
  }

  bool all_finite() const {
    return std::none_of(d_.begin(), d_.end(), [](int d) { return d == kUnreachable; });
  }

 private:
  std::size_t index(Vertex x, Vertex y) const { return std::size_t(x) * std::size_t(n_) + std::size_t(y); }

  int n_;
  std::vector<int> d_;
};

inline std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(std::size_t(g.order()), kUnreachable);
  std::queue<Vertex> frontier;
  dist[std::size_t(source)] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex x = frontier.front();
    frontier.pop();
    for (Vertex y : g.neighbors(x)) {
      if (dist[std::size_t(y)] == kUnreachable) {
        dist[std::size_t(y)] = dist[std::size_t(x)] + 1;
        frontier.push(y);
      }
    }
  }
  return dist;
}

inline DistanceMatrix distance_matrix(const Graph& g) {
  DistanceMatrix d(g.order());
  for (Vertex x = 0; x < g.order(); ++x) {
    const auto row = bfs_distances(g, x);
    for (Vertex y = 0; y < g.order(); ++y) d.at(x, y) = row[std::size_t(y)];
  }
  return d;
}

/// Diameter of a connected graph; nullopt when disconnected.
inline std::optional<int> diameter(const Graph& g) {
  const auto d = distance_matrix(g);
  if (!d.all_finite()) return std::nullopt;
  return d.max_finite();
}

/// Component label per vertex, labels 0.. in order of first vertex.
inline std::vector<int> component_labels(const Graph& g, int* count = nullptr) {
  std::vector<int> label(std::size_t(g.order()), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[std::size_t(s)] >= 0) continue;
    label[std::size_t(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (label[std::size_t(y)] < 0) {
          label[std::size_t(y)] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  if (count != nullptr) *count = next;
  return label;
}

/// The empty graph counts as connected.
inline bool is_connected(const Graph& g) {
  int count = 0;
  component_labels(g, &count);
  return count <= 1;
}

/// Proper 2-colouring (colour of vertex 0 in each component is 0), or
/// nullopt if g has an odd cycle.
inline std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> colour(std::size_t(g.order()), -1);
  std::queue<Vertex> frontier;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (colour[std::size_t(s)] >= 0) continue;
    colour[std::size_t(s)] = 0;
    frontier.push(s);
    while (!frontier.empty()) {
      const Vertex x = frontier.front();
      frontier.pop();
      for (Vertex y : g.neighbors(x)) {
        if (colour[std::size_t(y)] < 0) {
          colour[std::size_t(y)] = 1 - colour[std::size_t(x)];
          frontier.push(y);
        } else if (colour[std::size_t(y)] == colour[std::size_t(x)]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

inline int common_neighbors(const Graph& g, Vertex x, Vertex y) {
  int count = 0;
  for (Vertex z : g.neighbors(x)) {
    if (g.adjacent(y, z)) ++count;
  }
  return count;
}

namespace detail {

// Branch and bound over candidate sets ordered by a greedy colouring; the
// colour index of a vertex bounds the clique that can still be built.
class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  int run() {
    std::vector<Vertex> all(std::size_t(g_.order()));
    for (Vertex v = 0; v < g_.order(); ++v) all[std::size_t(v)] = v;
    std::sort(all.begin(), all.end(), [&](Vertex a, Vertex b) { return g_.degree(a) > g_.degree(b); });
    expand(all, 0);
    return best_;
  }

 private:
  void colour_sort(std::vector<Vertex>& cand, std::vector<int>& bound) const {
    std::vector<std::vector<Vertex>> classes;
    for (Vertex v : cand) {
      std::size_t k = 0;
      while (k < classes.size() &&
             std::any_of(classes[k].begin(), classes[k].end(), [&](Vertex w) { return g_.adjacent(v, w); })) {
        ++k;
      }
      if (k == classes.size()) classes.emplace_back();
      classes[k].push_back(v);
    }
    cand.clear();
    bound.clear();
    for (std::size_t k = 0; k < classes.size(); ++k) {
      for (Vertex v : classes[k]) {
        cand.push_back(v);
        bound.push_back(int(k) + 1);
      }
    }
  }

  void expand(std::vector<Vertex> cand, int size) {
    std::vector<int> bound;
    colour_sort(cand, bound);
    for (std::size_t i = cand.size(); i-- > 0;) {
      if (size + bound[i] <= best_) return;
      const Vertex v = cand[i];
      std::vector<Vertex> next;
      for (std::size_t j = 0; j < i; ++j) {
        if (g_.adjacent(v, cand[j])) next.push_back(cand[j]);
      }
      if (next.empty()) {
        best_ = std::max(best_, size + 1);
      } else {
        expand(std::move(next), size + 1);
      }
    }
  }

  const Graph& g_;
  int best_ = 0;
};

}  // namespace detail

/// Size of a largest complete subgraph (0 for the empty graph).
inline int clique_number(const Graph& g) { return detail::CliqueSearch(g).run(); }

}  // namespace globrig
