#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "globrig/errors.hpp"
#include "globrig/graph.hpp"
#include "globrig/metrics.hpp"

namespace globrig {

/// Intersection array {b_0, ..., b_{d-1}; c_1, ..., c_d}. For x, y at
/// distance i, b_i counts neighbours of y at distance i+1 from x and c_i
/// those at distance i-1.
struct IntersectionArray {
  int diameter = 0;
  std::vector<int> b;
  std::vector<int> c;
  /// a(i, j, k) = |{z : d(x,z) = i, d(y,z) = j}| for any x, y at distance k.
  /// Empty when produced by the reduced check.
  std::vector<int> table;

  int a(int i, int j, int k) const {
    const auto side = std::size_t(diameter) + 1;
    return table[(std::size_t(i) * side + std::size_t(j)) * side + std::size_t(k)];
  }

  std::string to_string() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < b.size(); ++i) out << (i ? "," : "") << b[i];
    out << ';';
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
    out << '}';
    return out.str();
  }

  friend bool operator==(const IntersectionArray& x, const IntersectionArray& y) {
    return x.diameter == y.diameter && x.b == y.b && x.c == y.c;
  }
};

namespace detail {

inline DistanceMatrix connected_distances(const Graph& g, const char* who) {
  auto d = distance_matrix(g);
  if (g.order() == 0 || !d.all_finite()) throw PreconditionError(std::string(who) + ": graph must be connected and nonempty");
  return d;
}

}  // namespace detail

/// Checks the three-index definition directly: for every k and every pair at
/// distance k the counts |D_{i,j}(x,y)| must agree. Returns the intersection
/// array (with the full table) on success. Throws PreconditionError on
/// disconnected input.
inline std::optional<IntersectionArray> is_distance_regular(const Graph& g) {
  const auto dist = detail::connected_distances(g, "is_distance_regular");
  const int n = g.order();
  const int d = dist.max_finite();
  const auto side = std::size_t(d) + 1;
  std::vector<int> table(side * side * side, -1);
  std::vector<int> counts(side * side);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      std::fill(counts.begin(), counts.end(), 0);
      for (Vertex z = 0; z < n; ++z) ++counts[std::size_t(dist(x, z)) * side + std::size_t(dist(y, z))];
      const auto k = std::size_t(dist(x, y));
      for (std::size_t ij = 0; ij < counts.size(); ++ij) {
        int& slot = table[ij * side + k];
        if (slot < 0) {
          slot = counts[ij];
        } else if (slot != counts[ij]) {
          return std::nullopt;
        }
      }
    }
  }
  IntersectionArray out;
  out.diameter = d;
  out.table = std::move(table);
  for (int i = 0; i < d; ++i) out.b.push_back(out.a(i + 1, 1, i));
  for (int i = 1; i <= d; ++i) out.c.push_back(out.a(i - 1, 1, i));
  return out;
}

/// Cheaper equivalent test: only b_i and c_i must be constant over pairs at
/// distance i. `table` stays empty.
inline std::optional<IntersectionArray> intersection_array(const Graph& g) {
  const auto dist = detail::connected_distances(g, "intersection_array");
  const int n = g.order();
  const int d = dist.max_finite();
  std::vector<int> b(std::size_t(d) + 1, -1);
  std::vector<int> c(std::size_t(d) + 1, -1);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      const int i = dist(x, y);
      int up = 0;
      int down = 0;
      for (Vertex z : g.neighbors(y)) {
        up += dist(x, z) == i + 1 ? 1 : 0;
        down += dist(x, z) == i - 1 ? 1 : 0;
      }
      for (auto [slot, value] : {std::pair{&b[std::size_t(i)], up}, std::pair{&c[std::size_t(i)], down}}) {
        if (*slot < 0) {
          *slot = value;
        } else if (*slot != value) {
          return std::nullopt;
        }
      }
    }
  }
  IntersectionArray out;
  out.diameter = d;
  out.b.assign(b.begin(), b.begin() + d);
  out.c.assign(c.begin() + 1, c.end());
  return out;
}

}  // namespace globrig
