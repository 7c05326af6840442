#pragma once

// Generic 2D rigidity through the (2,3)-pebble game.
//
// Every vertex starts with two pebbles. An edge uv is accepted when four
// pebbles can be collected on u and v; one of them is then spent to orient
// the edge out of u. Pebbles move by reversing directed paths that end at a
// vertex holding a free pebble. The accepted edges form a maximal
// (2,3)-sparse subgraph, so their number is the rank of the generic 2D
// rigidity matroid.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "globrig/graph.hpp"

namespace globrig {

/// Orientation of the accepted edges plus the free pebbles per vertex.
/// Invariant: pebbles[v] + out[v].size() == 2 for every v.
struct PebbleState {
  std::vector<std::vector<Vertex>> out;  // sorted heads of out-edges
  std::vector<int> pebbles;

  explicit PebbleState(int n = 0) : out(std::size_t(n)), pebbles(std::size_t(n), 2) {}

  int order() const { return int(pebbles.size()); }
  int outdegree(Vertex v) const { return int(out[std::size_t(v)].size()); }

  int free_pebbles() const {
    int total = 0;
    for (int p : pebbles) total += p;
    return total;
  }

  /// Accepted edges, recovered from the orientation.
  std::vector<Edge> edges() const {
    std::vector<Edge> es;
    for (Vertex v = 0; v < order(); ++v) {
      for (Vertex w : out[std::size_t(v)]) es.emplace_back(v, w);
    }
    std::sort(es.begin(), es.end());
    return es;
  }
};

class PebbleGame {
 public:
  explicit PebbleGame(int n) : state_(n), seen_(std::size_t(n)), parent_(std::size_t(n)) {}

  const PebbleState& state() const { return state_; }
  int order() const { return state_.order(); }
  std::size_t accepted() const { return accepted_; }

  /// Offers edge e. Returns true if it is independent of the edges accepted
  /// so far (and accepts it), false otherwise. After a rejection,
  /// `blocking_set()` holds the critical vertex set that spans e.
  bool insert(Edge e) {
    if (e.u == e.v || e.u < 0 || e.v >= order()) throw std::invalid_argument("pebble game: bad edge");
    if (!gather(e.u, e.v)) {
      blocking_ = reach(e.u, e.v);
      return false;
    }
    blocking_.clear();
    --state_.pebbles[std::size_t(e.u)];
    add_arc(e.u, e.v);
    ++accepted_;
    return true;
  }

  const std::vector<Vertex>& blocking_set() const { return blocking_; }

  /// True iff e lies in the closure of the accepted edges, i.e. inserting it
  /// would be rejected. Does not modify this game.
  bool spans(Edge e) const {
    if (e.u == e.v) return true;
    PebbleGame probe = *this;
    return !probe.gather(e.u, e.v);
  }

 private:
  void add_arc(Vertex from, Vertex to) {
    auto& list = state_.out[std::size_t(from)];
    list.insert(std::lower_bound(list.begin(), list.end(), to), to);
  }

  void remove_arc(Vertex from, Vertex to) {
    auto& list = state_.out[std::size_t(from)];
    list.erase(std::lower_bound(list.begin(), list.end(), to));
  }

  // Collect pebbles until u and v hold two each. Searches from u never pass
  // through v and vice versa, so pebbles already gathered stay put.
  bool gather(Vertex u, Vertex v) {
    auto& peb = state_.pebbles;
    while (peb[std::size_t(u)] + peb[std::size_t(v)] < 4) {
      const bool moved = (peb[std::size_t(u)] < 2 && fetch(u, v)) || (peb[std::size_t(v)] < 2 && fetch(v, u));
      if (!moved) return false;
    }
    return true;
  }

  // Depth-first search from root along out-edges for a free pebble on some
  // other vertex (never entering `blocked`); on success the path is reversed
  // and the pebble ends up on root. Neighbours are tried lowest first.
  bool fetch(Vertex root, Vertex blocked) {
    std::fill(seen_.begin(), seen_.end(), 0);
    seen_[std::size_t(root)] = 1;
    seen_[std::size_t(blocked)] = 1;
    stack_.assign(1, root);
    while (!stack_.empty()) {
      const Vertex x = stack_.back();
      stack_.pop_back();
      for (Vertex y : state_.out[std::size_t(x)]) {
        if (seen_[std::size_t(y)]) continue;
        seen_[std::size_t(y)] = 1;
        parent_[std::size_t(y)] = x;
        if (state_.pebbles[std::size_t(y)] > 0) {
          --state_.pebbles[std::size_t(y)];
          for (Vertex c = y; c != root;) {
            const Vertex p = parent_[std::size_t(c)];
            remove_arc(p, c);
            add_arc(c, p);
            c = p;
          }
          ++state_.pebbles[std::size_t(root)];
          return true;
        }
        stack_.push_back(y);
      }
    }
    return false;
  }

  std::vector<Vertex> reach(Vertex u, Vertex v) const {
    std::vector<char> seen(std::size_t(order()), 0);
    std::vector<Vertex> todo{u, v};
    seen[std::size_t(u)] = seen[std::size_t(v)] = 1;
    std::vector<Vertex> found;
    while (!todo.empty()) {
      const Vertex x = todo.back();
      todo.pop_back();
      found.push_back(x);
      for (Vertex y : state_.out[std::size_t(x)]) {
        if (!seen[std::size_t(y)]) {
          seen[std::size_t(y)] = 1;
          todo.push_back(y);
        }
      }
    }
    std::sort(found.begin(), found.end());
    return found;
  }

  PebbleState state_;
  std::size_t accepted_ = 0;
  std::vector<Vertex> blocking_;
  std::vector<char> seen_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> stack_;
};

struct SparseSubgraph {
  std::vector<Edge> accepted;  // a maximal (2,3)-sparse edge set F
  std::vector<Edge> rejected;
  PebbleState state;
};

/// Runs the pebble game over `order` (every entry must be an edge of g).
inline SparseSubgraph max_sparse_subgraph(const Graph& g, std::span<const Edge> order) {
  PebbleGame game(g.order());
  SparseSubgraph out;
  for (const Edge& e : order) {
    if (!g.has_edge(e)) throw std::invalid_argument("edge order contains a non-edge");
    (game.insert(e) ? out.accepted : out.rejected).push_back(e);
  }
  out.state = game.state();
  return out;
}

/// Edges are offered in lexicographic order.
inline SparseSubgraph max_sparse_subgraph(const Graph& g) {
  const auto es = g.edges();
  return max_sparse_subgraph(g, es);
}

inline std::size_t rigidity_rank(const Graph& g) {
  PebbleGame game(g.order());
  for (const Edge& e : g.edges()) game.insert(e);
  return game.accepted();
}

/// True iff |edges| <= 2|X| - 3 for every vertex subset X with |X| >= 2.
inline bool is_sparse(int n, std::span<const Edge> edges) {
  PebbleGame game(n);
  return std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return game.insert(e); });
}

/// Rigid in the plane: n <= 1, or rank 2n - 3.
inline bool is_rigid(const Graph& g) {
  if (g.order() <= 1) return true;
  return rigidity_rank(g) == std::size_t(2 * g.order() - 3);
}

/// Maximal rigid vertex sets X_1..X_t; every edge lies in exactly one and
/// rank == sum(2|X_i| - 3).
struct RigidDecomposition {
  std::vector<std::vector<Vertex>> components;
  std::size_t rank = 0;
};

/// Components come out sorted (each vertex set ascending, the family
/// lexicographically). A vertex w joins the component of edge uv exactly
/// when uw and vw both lie in the matroid closure of the graph.
inline RigidDecomposition rigid_components(const Graph& g) {
  if (g.size() == 0) throw std::invalid_argument("rigid_components: graph has no edges");
  PebbleGame game(g.order());
  for (const Edge& e : g.edges()) game.insert(e);

  RigidDecomposition out;
  out.rank = game.accepted();
  const int n = g.order();
  std::vector<char> covered(std::size_t(n) * std::size_t(n), 0);
  for (const Edge& e : g.edges()) {
    if (covered[std::size_t(e.u) * std::size_t(n) + std::size_t(e.v)]) continue;
    std::vector<Vertex> block{e.u, e.v};
    for (Vertex w = 0; w < n; ++w) {
      if (w == e.u || w == e.v) continue;
      if (game.spans(Edge(e.u, w)) && game.spans(Edge(e.v, w))) block.push_back(w);
    }
    std::sort(block.begin(), block.end());
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = i + 1; j < block.size(); ++j) {
        covered[std::size_t(block[i]) * std::size_t(n) + std::size_t(block[j])] = 1;
      }
    }
    out.components.push_back(std::move(block));
  }
  std::sort(out.components.begin(), out.components.end());
  return out;
}

/// e lies in some (2,3)-circuit, i.e. deleting it keeps the rank.
inline bool edge_in_circuit(const Graph& g, Edge e) {
  if (!g.has_edge(e)) throw std::invalid_argument("edge_in_circuit: not an edge of the graph");
  return rigidity_rank(g) == rigidity_rank(g.without_edge(e));
}

/// Rigid after deleting any single edge. One pebble game per edge, so
/// O(|E| * n^2) overall.
inline bool is_redundantly_rigid(const Graph& g) {
  if (!is_rigid(g)) return false;
  const auto es = g.edges();
  return std::all_of(es.begin(), es.end(), [&](const Edge& e) { return is_rigid(g.without_edge(e)); });
}

/// Fundamental circuit of the first edge (lexicographic order) the pebble
/// game rejects, or nullopt if g is (2,3)-sparse. The result satisfies
/// |E(C)| = 2|V(C)| - 2 and C - f is (2,3)-tight for each f in C.
inline std::optional<std::vector<Edge>> find_circuit(const Graph& g) {
  PebbleGame game(g.order());
  std::vector<Edge> accepted;
  for (const Edge& e : g.edges()) {
    if (game.insert(e)) {
      accepted.push_back(e);
      continue;
    }
    const auto& block = game.blocking_set();
    std::vector<Edge> inside;
    for (const Edge& f : accepted) {
      if (std::binary_search(block.begin(), block.end(), f.u) && std::binary_search(block.begin(), block.end(), f.v)) {
        inside.push_back(f);
      }
    }
    // f belongs to the circuit iff swapping it for e keeps independence.
    std::vector<Edge> circuit{e};
    for (const Edge& f : inside) {
      std::vector<Edge> swapped;
      for (const Edge& h : inside) {
        if (h != f) swapped.push_back(h);
      }
      swapped.push_back(e);
      if (is_sparse(g.order(), swapped)) circuit.push_back(f);
    }
    std::sort(circuit.begin(), circuit.end());
    return circuit;
  }
  return std::nullopt;
}

}  // namespace globrig
