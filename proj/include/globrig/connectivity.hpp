#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "globrig/graph.hpp"
#include "globrig/metrics.hpp"

namespace globrig {

/// A vertex separation: no edge joins side_a to side_b, both nonempty,
/// and separator + side_a + side_b = V.
struct Separation {
  std::vector<Vertex> separator;
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
};

namespace detail {

// Unit-capacity style max-flow (BFS augmenting paths); values stay below n.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : head_(std::size_t(nodes), -1) {}

  void add_arc(int from, int to, int capacity) {
    arcs_.push_back({to, head_[std::size_t(from)], capacity});
    head_[std::size_t(from)] = int(arcs_.size()) - 1;
    arcs_.push_back({from, head_[std::size_t(to)], 0});
    head_[std::size_t(to)] = int(arcs_.size()) - 1;
  }

  /// Max flow from source to sink, stopping early once `limit` is reached.
  int max_flow(int source, int sink, int limit = std::numeric_limits<int>::max()) {
    int flow = 0;
    std::vector<int> via(head_.size());
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> frontier;
      frontier.push(source);
      via[std::size_t(source)] = -2;
      while (!frontier.empty() && via[std::size_t(sink)] == -1) {
        const int x = frontier.front();
        frontier.pop();
        for (int a = head_[std::size_t(x)]; a >= 0; a = arcs_[std::size_t(a)].next) {
          const auto& arc = arcs_[std::size_t(a)];
          if (arc.capacity > 0 && via[std::size_t(arc.to)] == -1) {
            via[std::size_t(arc.to)] = a;
            frontier.push(arc.to);
          }
        }
      }
      if (via[std::size_t(sink)] == -1) break;
      for (int x = sink; x != source;) {
        const int a = via[std::size_t(x)];
        --arcs_[std::size_t(a)].capacity;
        ++arcs_[std::size_t(a ^ 1)].capacity;
        x = arcs_[std::size_t(a ^ 1)].to;
      }
      ++flow;
    }
    return flow;
  }

 private:
  struct Arc {
    int to;
    int next;
    int capacity;
  };
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

// Calls visit(subset) for every k-subset of 0..n-1 in lexicographic order;
// stops early when visit returns true. Returns whether it stopped early.
template <typename Visit>
bool for_each_subset(int n, int k, Visit&& visit) {
  if (k < 0 || k > n) return false;
  std::vector<Vertex> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[std::size_t(i)] = i;
  while (true) {
    if (visit(static_cast<const std::vector<Vertex>&>(pick))) return true;
    int i = k - 1;
    while (i >= 0 && pick[std::size_t(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++pick[std::size_t(i)];
    for (int j = i + 1; j < k; ++j) pick[std::size_t(j)] = pick[std::size_t(j - 1)] + 1;
  }
}

// Connected components of g - removed, as vertex lists.
inline std::vector<std::vector<Vertex>> components_without(const Graph& g, const std::vector<Vertex>& removed) {
  std::vector<int> label(std::size_t(g.order()), -1);
  for (Vertex r : removed) label[std::size_t(r)] = -2;
  std::vector<std::vector<Vertex>> comps;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[std::size_t(s)] != -1) continue;
    comps.emplace_back();
    label[std::size_t(s)] = int(comps.size()) - 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      comps.back().push_back(x);
      for (Vertex y : g.neighbors(x)) {
        if (label[std::size_t(y)] == -1) {
          label[std::size_t(y)] = label[std::size_t(s)];
          stack.push_back(y);
        }
      }
    }
    std::sort(comps.back().begin(), comps.back().end());
  }
  return comps;
}

inline Separation split_off_first(const std::vector<Vertex>& separator, const std::vector<std::vector<Vertex>>& comps) {
  Separation sep{separator, comps.front(), {}};
  for (std::size_t c = 1; c < comps.size(); ++c) sep.side_b.insert(sep.side_b.end(), comps[c].begin(), comps[c].end());
  std::sort(sep.side_b.begin(), sep.side_b.end());
  return sep;
}

}  // namespace detail

/// Maximum number of internally vertex-disjoint s-t paths for nonadjacent
/// s, t (vertex-split unit-capacity max-flow).
inline int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, int limit = std::numeric_limits<int>::max()) {
  if (s == t || g.adjacent(s, t)) throw std::invalid_argument("local_vertex_connectivity: s, t must be distinct and nonadjacent");
  const int n = g.order();
  detail::FlowNetwork net(2 * n);
  for (Vertex v = 0; v < n; ++v) net.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? n : 1);
  for (const Edge& e : g.edges()) {
    net.add_arc(2 * e.u + 1, 2 * e.v, n);
    net.add_arc(2 * e.v + 1, 2 * e.u, n);
  }
  return net.max_flow(2 * s + 1, 2 * t, limit);
}

/// Vertex connectivity; n - 1 for complete graphs, 0 for disconnected
/// graphs and for n <= 1. Even's scheme: a minimum separator misses one of
/// the first kappa + 1 vertices, so only those serve as flow sources.
inline int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  if (g.is_complete()) return n - 1;
  if (!is_connected(g)) return 0;
  int best = g.min_degree();
  for (Vertex s = 0; s <= best && s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (!g.adjacent(s, t)) best = std::min(best, local_vertex_connectivity(g, s, t, best));
    }
  }
  return best;
}

/// k-connected: more than k vertices and no separator of fewer than k.
inline bool is_k_connected(const Graph& g, int k) {
  return g.order() > k && vertex_connectivity(g) >= k;
}

/// Some separation with a separator of size kappa(g), or nullopt for
/// complete graphs. Separator sets are tried in lexicographic order.
inline std::optional<Separation> minimum_separation(const Graph& g) {
  if (g.is_complete() || g.order() < 2) return std::nullopt;
  const int kappa = vertex_connectivity(g);
  std::optional<Separation> found;
  detail::for_each_subset(g.order(), kappa, [&](const std::vector<Vertex>& s) {
    auto comps = detail::components_without(g, s);
    if (comps.size() < 2) return false;
    found = detail::split_off_first(s, comps);
    return true;
  });
  return found;
}

/// Every vertex set of size kappa(g) whose removal disconnects g.
inline std::vector<std::vector<Vertex>> minimum_separators(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  if (g.is_complete() || g.order() < 2) return out;
  detail::for_each_subset(g.order(), vertex_connectivity(g), [&](const std::vector<Vertex>& s) {
    if (detail::components_without(g, s).size() >= 2) out.push_back(s);
    return false;
  });
  return out;
}

/// A separation witnessing that g is not essentially 6-connected, or
/// nullopt if it is. Violations are: kappa < 4; a separator of size <= 4
/// whose components group into two sides of >= 3 vertices; a separator of
/// size <= 5 with sides of >= 4 vertices.
inline std::optional<Separation> essential_6_violation(const Graph& g) {
  if (!is_k_connected(g, 4)) {
    if (auto sep = minimum_separation(g)) return sep;
    return Separation{};  // too few vertices to be 4-connected
  }
  std::optional<Separation> found;
  for (int size = 4; size <= 5 && !found; ++size) {
    const int need = size <= 4 ? 3 : 4;
    detail::for_each_subset(g.order(), size, [&](const std::vector<Vertex>& s) {
      auto comps = detail::components_without(g, s);
      if (comps.size() < 2) return false;
      const int total = g.order() - size;
      // reachable[a] = index mask of a component subset summing to a
      std::vector<std::optional<std::vector<char>>> reachable(std::size_t(total) + 1);
      reachable[0] = std::vector<char>(comps.size(), 0);
      for (std::size_t c = 0; c < comps.size(); ++c) {
        const int w = int(comps[c].size());
        for (int a = total; a >= w; --a) {
          if (!reachable[std::size_t(a)] && reachable[std::size_t(a - w)]) {
            auto pick = *reachable[std::size_t(a - w)];
            pick[c] = 1;
            reachable[std::size_t(a)] = std::move(pick);
          }
        }
      }
      for (int a = need; a <= total - need; ++a) {
        if (!reachable[std::size_t(a)]) continue;
        Separation sep{s, {}, {}};
        for (std::size_t c = 0; c < comps.size(); ++c) {
          auto& side = (*reachable[std::size_t(a)])[c] ? sep.side_a : sep.side_b;
          side.insert(side.end(), comps[c].begin(), comps[c].end());
        }
        std::sort(sep.side_a.begin(), sep.side_a.end());
        std::sort(sep.side_b.begin(), sep.side_b.end());
        found = std::move(sep);
        return true;
      }
      return false;
    });
  }
  return found;
}

inline bool is_essentially_6_connected(const Graph& g) { return !essential_6_violation(g).has_value(); }

/// Induced subgraph on `side` contains a cycle (some component has at least
/// as many edges as vertices).
inline bool side_has_cycle(const Graph& g, const std::vector<Vertex>& side) {
  std::vector<char> in(std::size_t(g.order()), 0);
  for (Vertex v : side) in[std::size_t(v)] = 1;
  std::size_t edges = 0;
  for (Vertex v : side) {
    for (Vertex w : g.neighbors(v)) edges += (v < w && in[std::size_t(w)]) ? 1 : 0;
  }
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!in[std::size_t(v)]) rest.push_back(v);
  }
  const auto comps = detail::components_without(g, rest);
  return edges + comps.size() > side.size();
}

/// All chordless cycles, each as its vertex sequence starting at its
/// smallest vertex (one orientation only).
inline std::vector<std::vector<Vertex>> chordless_cycles(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  std::vector<char> on_path(std::size_t(g.order()), 0);
  // path is an induced path whose first vertex is the smallest of the cycle
  auto extend = [&](auto&& self) -> void {
    const Vertex s = path.front();
    for (Vertex y : g.neighbors(path.back())) {
      if (y <= s || on_path[std::size_t(y)]) continue;
      bool closes = false;
      bool chord = false;
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (g.adjacent(y, path[i])) (i == 0 ? closes : chord) = true;
      }
      if (chord) continue;
      if (closes) {
        if (path[1] < y) {
          out.push_back(path);
          out.back().push_back(y);
        }
        continue;
      }
      path.push_back(y);
      on_path[std::size_t(y)] = 1;
      self(self);
      on_path[std::size_t(y)] = 0;
      path.pop_back();
    }
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    path.assign(1, s);
    on_path[std::size_t(s)] = 1;
    extend(extend);
    on_path[std::size_t(s)] = 0;
  }
  return out;
}

enum class CyclicCutMethod { automatic, bipartitions, cycle_flows };

/// Every vertex bipartition whose two induced sides both contain a cycle
/// has at least k crossing edges. `automatic` enumerates bipartitions for
/// n <= 20 and otherwise takes min cuts between pairs of disjoint
/// chordless cycles (each side of a cyclic cut holds one).
inline bool cyclic_edge_connectivity_at_least(const Graph& g, int k,
                                              CyclicCutMethod method = CyclicCutMethod::automatic) {
  const int n = g.order();
  if (method == CyclicCutMethod::automatic) {
    method = n <= 20 ? CyclicCutMethod::bipartitions : CyclicCutMethod::cycle_flows;
  }
  if (method == CyclicCutMethod::bipartitions) {
    if (n > 26) throw std::invalid_argument("bipartition enumeration limited to 26 vertices");
    if (n < 6) return true;  // two disjoint cycles need 6 vertices
    std::vector<std::uint32_t> row(std::size_t(n), 0);
    for (const Edge& e : g.edges()) {
      row[std::size_t(e.u)] |= 1u << e.v;
      row[std::size_t(e.v)] |= 1u << e.u;
    }
    auto cyclic = [&](std::uint32_t side) {
      int edges = 0;
      for (std::uint32_t rest = side; rest; rest &= rest - 1) edges += std::popcount(row[std::size_t(std::countr_zero(rest))] & side);
      edges /= 2;
      int comps = 0;
      for (std::uint32_t left = side; left;) {
        std::uint32_t reach = left & (~left + 1);
        for (std::uint32_t grow = reach; grow;) {
          std::uint32_t next = 0;
          for (std::uint32_t r = grow; r; r &= r - 1) next |= row[std::size_t(std::countr_zero(r))];
          next &= side & ~reach;
          reach |= next;
          grow = next;
        }
        left &= ~reach;
        ++comps;
      }
      return edges + comps > std::popcount(side);
    };
    const std::uint32_t all = (1u << n) - 1;
    // the last vertex always sits on the complement side
    for (std::uint32_t x = 1; x < (1u << (n - 1)); ++x) {
      int crossing = 0;
      for (std::uint32_t r = x; r; r &= r - 1) crossing += std::popcount(row[std::size_t(std::countr_zero(r))] & ~x & all);
      if (crossing >= k) continue;
      if (cyclic(x) && cyclic(all & ~x)) return false;
    }
    return true;
  }

  const auto cycles = chordless_cycles(g);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      const auto& a = cycles[i];
      const auto& b = cycles[j];
      const bool disjoint = std::none_of(a.begin(), a.end(), [&](Vertex v) {
        return std::find(b.begin(), b.end(), v) != b.end();
      });
      if (!disjoint) continue;
      detail::FlowNetwork net(n + 2);
      const int source = n;
      const int sink = n + 1;
      for (Vertex v : a) net.add_arc(source, v, n * n);
      for (Vertex v : b) net.add_arc(v, sink, n * n);
      for (const Edge& e : g.edges()) {
        net.add_arc(e.u, e.v, 1);
        net.add_arc(e.v, e.u, 1);
      }
      if (net.max_flow(source, sink, k) < k) return false;
    }
  }
  return true;
}

}  // namespace globrig
