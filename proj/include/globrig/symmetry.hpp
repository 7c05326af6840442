#pragma once

// Automorphism groups and canonical forms by individualisation-refinement.
//
// Nodes of the search tree are ordered partitions refined to equitability;
// children individualise one vertex of the first non-singleton cell. The
// first leaf found and the best leaf so far are compared against every new
// leaf; equal certificates yield automorphisms, which prune sibling subtrees
// by orbits and let the search jump back to the common ancestor. The group
// order is the product of the stabiliser orbit lengths along the first path.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "globrig/graph.hpp"
#include "globrig/io.hpp"
#include "globrig/metrics.hpp"

namespace globrig {

/// perm[v] is the image of v.
using Permutation = std::vector<Vertex>;

inline bool is_automorphism(const Graph& g, const Permutation& perm) {
  if (int(perm.size()) != g.order()) return false;
  std::vector<char> hit(perm.size(), 0);
  for (Vertex p : perm) {
    if (p < 0 || p >= g.order() || hit[std::size_t(p)]) return false;
    hit[std::size_t(p)] = 1;
  }
  for (const Edge& e : g.edges()) {
    if (!g.adjacent(perm[std::size_t(e.u)], perm[std::size_t(e.v)])) return false;
  }
  return true;
}

struct SymmetryReport {
  std::uint64_t aut_order = 1;
  std::vector<Permutation> generators;
  std::vector<std::vector<Vertex>> vertex_orbits;  // each ascending, ordered by first vertex
  std::vector<std::vector<Edge>> edge_orbits;      // each ascending, ordered by first edge
  bool vertex_transitive = true;
  bool edge_transitive = true;
};

struct CanonicalForm {
  Graph graph;
  Permutation labeling;  // labeling[v] = position of v in `graph`
};

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

template <typename Item>
std::vector<std::vector<Item>> group_classes(DisjointSets& sets, const std::vector<Item>& items) {
  std::vector<std::vector<Item>> out;
  std::vector<int> slot(items.size(), -1);
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::size_t root = sets.find(i);
    if (slot[root] < 0) {
      slot[root] = int(out.size());
      out.emplace_back();
    }
    out[std::size_t(slot[root])].push_back(items[i]);
  }
  return out;
}

class SearchTree {
 public:
  using Cells = std::vector<std::vector<Vertex>>;

  explicit SearchTree(const Graph& g) : g_(g), n_(g.order()) {}

  void run() {
    Cells root = initial_partition();
    refine(root);
    std::vector<Vertex> path;
    std::vector<std::vector<int>> shape{cell_sizes(root)};
    explore(root, path, shape, true);
  }

  const std::vector<Permutation>& generators() const { return generators_; }
  std::uint64_t order() const { return order_; }
  const std::vector<Vertex>& best_leaf() const { return best_.labels; }

 private:
  struct Leaf {
    std::vector<Vertex> labels;  // position -> vertex
    std::vector<Vertex> path;
    std::vector<std::vector<int>> shape;
    std::vector<std::uint64_t> cert;
  };

  Cells initial_partition() const {
    // key: degree, then the sorted histogram of distances to all vertices
    std::vector<std::vector<int>> key(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) {
      auto dist = bfs_distances(g_, v);
      std::sort(dist.begin(), dist.end());
      key[std::size_t(v)] = {g_.degree(v)};
      key[std::size_t(v)].insert(key[std::size_t(v)].end(), dist.begin(), dist.end());
    }
    std::vector<Vertex> order(static_cast<std::size_t>(n_));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return key[std::size_t(a)] < key[std::size_t(b)]; });
    Cells cells;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i == 0 || key[std::size_t(order[i])] != key[std::size_t(order[i - 1])]) cells.emplace_back();
      cells.back().push_back(order[i]);
    }
    return cells;
  }

  // Split cells by neighbour counts into each splitter cell until equitable.
  // Fragments keep count order, so the result commutes with automorphisms.
  void refine(Cells& cells) const {
    std::vector<int> count(static_cast<std::size_t>(n_));
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t w = 0; w < cells.size() && !changed; ++w) {
        std::fill(count.begin(), count.end(), 0);
        for (Vertex s : cells[w]) {
          for (Vertex x : g_.neighbors(s)) ++count[std::size_t(x)];
        }
        for (std::size_t c = 0; c < cells.size(); ++c) {
          auto& cell = cells[c];
          if (cell.size() == 1) continue;
          const int first = count[std::size_t(cell.front())];
          if (std::all_of(cell.begin(), cell.end(), [&](Vertex x) { return count[std::size_t(x)] == first; })) continue;
          std::stable_sort(cell.begin(), cell.end(), [&](Vertex a, Vertex b) { return count[std::size_t(a)] < count[std::size_t(b)]; });
          Cells fragments;
          for (std::size_t i = 0; i < cell.size(); ++i) {
            if (i == 0 || count[std::size_t(cell[i])] != count[std::size_t(cell[i - 1])]) fragments.emplace_back();
            fragments.back().push_back(cell[i]);
          }
          cells.erase(cells.begin() + std::ptrdiff_t(c));
          cells.insert(cells.begin() + std::ptrdiff_t(c), fragments.begin(), fragments.end());
          changed = true;
          break;
        }
      }
    }
  }

  static std::vector<int> cell_sizes(const Cells& cells) {
    std::vector<int> sizes;
    sizes.reserve(cells.size());
    for (const auto& c : cells) sizes.push_back(int(c.size()));
    return sizes;
  }

  std::vector<std::uint64_t> certificate(const std::vector<Vertex>& labels) const {
    std::vector<std::uint64_t> bits((std::size_t(n_) * std::size_t(n_) + 63) / 64, 0);
    std::size_t k = 0;
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j, ++k) {
        if (g_.adjacent(labels[std::size_t(i)], labels[std::size_t(j)])) bits[k / 64] |= std::uint64_t{1} << (63 - k % 64);
      }
    }
    return bits;
  }

  static std::size_t common_prefix(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return i;
  }

  // Orbits of the group generated by the generators fixing `path` pointwise.
  DisjointSets stabiliser_orbits(const std::vector<Vertex>& path) const {
    DisjointSets sets{std::size_t(n_)};
    for (const auto& gen : generators_) {
      if (std::any_of(path.begin(), path.end(), [&](Vertex v) { return gen[std::size_t(v)] != v; })) continue;
      for (Vertex v = 0; v < n_; ++v) sets.unite(std::size_t(v), std::size_t(gen[std::size_t(v)]));
    }
    return sets;
  }

  void add_generator(const Leaf& from, const std::vector<Vertex>& to_labels) {
    Permutation gamma(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) gamma[std::size_t(from.labels[std::size_t(i)])] = to_labels[std::size_t(i)];
    bool identity = true;
    for (Vertex v = 0; v < n_; ++v) identity = identity && gamma[std::size_t(v)] == v;
    if (!identity) generators_.push_back(std::move(gamma));
  }

  // Returns the depth to resume at: path.size() (or larger) means carry on,
  // anything smaller unwinds to that ancestor.
  std::size_t leaf(const Cells& cells, const std::vector<Vertex>& path, const std::vector<std::vector<int>>& shape) {
    std::vector<Vertex> labels;
    labels.reserve(std::size_t(n_));
    for (const auto& c : cells) labels.push_back(c.front());
    auto cert = certificate(labels);
    if (!have_leaf_) {
      have_leaf_ = true;
      first_ = Leaf{labels, path, shape, cert};
      best_ = first_;
      return path.size();
    }
    if (cert == first_.cert) {
      add_generator(first_, labels);
      return common_prefix(first_.path, path);
    }
    const auto mine = std::tie(shape, cert);
    const auto theirs = std::tie(best_.shape, best_.cert);
    if (mine < theirs) {
      best_ = Leaf{labels, path, shape, std::move(cert)};
    } else if (mine == theirs) {
      add_generator(best_, labels);
      return common_prefix(best_.path, path);
    }
    return path.size();
  }

  bool prefix_equal(const std::vector<std::vector<int>>& shape, const std::vector<std::vector<int>>& ref) const {
    if (ref.size() < shape.size()) return false;
    return std::equal(shape.begin(), shape.end(), ref.begin());
  }

  // Lexicographic comparison of the shape prefix against a leaf's shape.
  bool prefix_worse(const std::vector<std::vector<int>>& shape, const std::vector<std::vector<int>>& ref) const {
    for (std::size_t i = 0; i < shape.size() && i < ref.size(); ++i) {
      if (shape[i] != ref[i]) return ref[i] < shape[i];
    }
    return false;
  }

  std::size_t explore(const Cells& cells, std::vector<Vertex>& path, std::vector<std::vector<int>>& shape, bool first_path) {
    if (cells.size() == std::size_t(n_)) return leaf(cells, path, shape);
    if (have_leaf_ && !prefix_equal(shape, first_.shape) && prefix_worse(shape, best_.shape)) return path.size();

    std::size_t target = 0;
    while (cells[target].size() == 1) ++target;
    std::vector<Vertex> members = cells[target];
    std::sort(members.begin(), members.end());
    const std::size_t depth = path.size();

    std::vector<Vertex> tried;
    for (std::size_t i = 0; i < members.size(); ++i) {
      const Vertex w = members[i];
      if (!tried.empty()) {
        auto orbits = stabiliser_orbits(path);
        const bool seen = std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return orbits.find(std::size_t(t)) == orbits.find(std::size_t(w)); });
        if (seen) continue;
      }
      tried.push_back(w);

      Cells child = cells;
      auto& cell = child[target];
      cell.erase(std::find(cell.begin(), cell.end(), w));
      child.insert(child.begin() + std::ptrdiff_t(target), std::vector<Vertex>{w});
      refine(child);

      path.push_back(w);
      shape.push_back(cell_sizes(child));
      const std::size_t resume = explore(child, path, shape, first_path && i == 0);
      shape.pop_back();
      path.pop_back();
      if (resume < depth) return resume;
    }

    if (first_path) {
      auto orbits = stabiliser_orbits(path);
      std::uint64_t orbit = 0;
      for (Vertex w : members) orbit += orbits.find(std::size_t(w)) == orbits.find(std::size_t(members.front())) ? 1 : 0;
      if (order_ > std::numeric_limits<std::uint64_t>::max() / orbit) throw std::overflow_error("automorphism group order exceeds 64 bits");
      order_ *= orbit;
    }
    return depth;
  }

  const Graph& g_;
  int n_;
  bool have_leaf_ = false;
  Leaf first_;
  Leaf best_;
  std::vector<Permutation> generators_;
  std::uint64_t order_ = 1;
};

}  // namespace detail

/// Full automorphism group: exact order, a generating set, and the vertex
/// and (unordered) edge orbits.
inline SymmetryReport automorphism_group(const Graph& g) {
  detail::SearchTree tree(g);
  tree.run();
  SymmetryReport report;
  report.aut_order = tree.order();
  report.generators = tree.generators();

  std::vector<Vertex> vertices(std::size_t(g.order()));
  std::iota(vertices.begin(), vertices.end(), 0);
  detail::DisjointSets vsets{vertices.size()};
  const auto edges = g.edges();
  detail::DisjointSets esets{edges.size()};
  for (const auto& gen : report.generators) {
    for (Vertex v : vertices) vsets.unite(std::size_t(v), std::size_t(gen[std::size_t(v)]));
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Edge image(gen[std::size_t(edges[i].u)], gen[std::size_t(edges[i].v)]);
      const auto j = std::size_t(std::lower_bound(edges.begin(), edges.end(), image) - edges.begin());
      esets.unite(i, j);
    }
  }
  report.vertex_orbits = detail::group_classes(vsets, vertices);
  report.edge_orbits = detail::group_classes(esets, edges);
  report.vertex_transitive = report.vertex_orbits.size() <= 1;
  report.edge_transitive = report.edge_orbits.size() <= 1;
  return report;
}

inline bool is_vertex_transitive(const Graph& g) { return automorphism_group(g).vertex_transitive; }

/// Vacuously true for edgeless graphs.
inline bool is_edge_transitive(const Graph& g) { return automorphism_group(g).edge_transitive; }

/// Isomorphism-invariant relabelling: isomorphic inputs give identical
/// `graph` members.
inline CanonicalForm canonical_form(const Graph& g) {
  detail::SearchTree tree(g);
  tree.run();
  Permutation labeling(std::size_t(g.order()));
  const auto& best = tree.best_leaf();
  for (std::size_t i = 0; i < best.size(); ++i) labeling[std::size_t(best[i])] = Vertex(i);
  return CanonicalForm{g.permuted(labeling), std::move(labeling)};
}

inline std::string canonical_graph6(const Graph& g) { return to_graph6(canonical_form(g).graph); }

inline bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size() || a.degree_sequence() != b.degree_sequence()) return false;
  return canonical_form(a).graph == canonical_form(b).graph;
}

/// The two sides of a connected edge-transitive, non-vertex-transitive graph:
/// `low` holds the degree-delta vertices, `high` the degree-Delta ones.
struct DegreeBipartition {
  std::vector<Vertex> low;
  std::vector<Vertex> high;
  int low_degree = 0;
  int high_degree = 0;
};

/// Throws PreconditionError unless g is connected, edge-transitive and not
/// vertex-transitive. Returns nullopt if the graph is not bipartite with
/// degree-homogeneous sides (which no such graph should be).
inline std::optional<DegreeBipartition> degree_bipartition(const Graph& g, const SymmetryReport& sym) {
  if (!is_connected(g) || !sym.edge_transitive || sym.vertex_transitive) {
    throw PreconditionError("degree_bipartition: needs a connected edge-transitive, non-vertex-transitive graph");
  }
  const auto colour = two_coloring(g);
  if (!colour) return std::nullopt;
  std::vector<Vertex> side[2];
  for (Vertex v = 0; v < g.order(); ++v) side[(*colour)[std::size_t(v)]].push_back(v);
  int degree[2];
  for (int s = 0; s < 2; ++s) {
    degree[s] = g.degree(side[s].front());
    for (Vertex v : side[s]) {
      if (g.degree(v) != degree[s]) return std::nullopt;
    }
  }
  const int lo = degree[0] <= degree[1] ? 0 : 1;
  return DegreeBipartition{side[lo], side[1 - lo], degree[lo], degree[1 - lo]};
}

inline std::optional<DegreeBipartition> degree_bipartition(const Graph& g) {
  return degree_bipartition(g, automorphism_group(g));
}

}  // namespace globrig
