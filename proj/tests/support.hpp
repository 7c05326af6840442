#pragma once

// Slow, definition-level reference implementations used as oracles by the
// tests. None of them call into the library's algorithms.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "globrig/graph.hpp"

namespace ref {

using globrig::Edge;
using globrig::Graph;
using globrig::Vertex;

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) es.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, es);
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Straight transcription of the published graph6 layout.
inline std::string encode_graph6(const Graph& g) {
  const std::uint64_t n = std::uint64_t(g.order());
  std::string out;
  if (n <= 62) {
    out += char(n + 63);
  } else if (n <= 258047) {
    out += char(126);
    for (int shift = 12; shift >= 0; shift -= 6) out += char(((n >> shift) & 63) + 63);
  } else {
    out += char(126);
    out += char(126);
    for (int shift = 30; shift >= 0; shift -= 6) out += char(((n >> shift) & 63) + 63);
  }
  std::vector<int> bits;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
  }
  while (bits.size() % 6) bits.push_back(0);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int v = 0;
    for (int b = 0; b < 6; ++b) v = (v << 1) | bits[k + std::size_t(b)];
    out += char(v + 63);
  }
  return out;
}

inline int edges_inside(const std::vector<Edge>& es, std::uint32_t mask) {
  int c = 0;
  for (const Edge& e : es) c += ((mask >> e.u) & 1u) && ((mask >> e.v) & 1u) ? 1 : 0;
  return c;
}

/// |E(X)| <= 2|X| - 3 for every X with |X| >= 2.
inline bool sparse(int n, const std::vector<Edge>& es) {
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int k = std::popcount(mask);
    if (k >= 2 && edges_inside(es, mask) > 2 * k - 3) return false;
  }
  return true;
}

/// Largest sparse edge subset, by exhaustive search over subsets (small m only).
inline int max_sparse_size(int n, const std::vector<Edge>& es) {
  const std::size_t m = es.size();
  int best = 0;
  for (std::uint32_t pick = 0; pick < (1u << m); ++pick) {
    const int size = std::popcount(pick);
    if (size <= best) continue;
    std::vector<Edge> sub;
    for (std::size_t i = 0; i < m; ++i) {
      if ((pick >> i) & 1u) sub.push_back(es[i]);
    }
    if (sparse(n, sub)) best = size;
  }
  return best;
}

/// Rank via greedy selection with the definitional independence test.
inline int greedy_rank(int n, const std::vector<Edge>& es) {
  std::vector<Edge> kept;
  for (const Edge& e : es) {
    kept.push_back(e);
    if (!sparse(n, kept)) kept.pop_back();
  }
  return int(kept.size());
}

/// Rigid iff some 2n-3 edges form a sparse set (n >= 2).
inline bool rigid(const Graph& g) {
  if (g.order() <= 1) return true;
  return greedy_rank(g.order(), g.edges()) == 2 * g.order() - 3;
}

inline int components(const Graph& g, std::uint32_t alive) {
  std::uint32_t seen = 0;
  int count = 0;
  for (int s = 0; s < g.order(); ++s) {
    if (!((alive >> s) & 1u) || ((seen >> s) & 1u)) continue;
    ++count;
    std::vector<int> stack{s};
    seen |= 1u << s;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (((alive >> w) & 1u) && !((seen >> w) & 1u)) {
          seen |= 1u << w;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

inline std::uint32_t all_vertices(const Graph& g) { return g.order() == 32 ? ~0u : (1u << g.order()) - 1; }

/// Smallest S with G - S disconnected or trivial.
inline int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  int best = n - 1;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    const int k = std::popcount(s);
    if (k >= best) continue;
    const std::uint32_t rest = all_vertices(g) & ~s;
    if (std::popcount(rest) >= 2 && components(g, rest) >= 2) best = k;
  }
  return best;
}

/// Vertex sets of size k whose removal disconnects g.
inline std::set<std::vector<int>> separators_of_size(const Graph& g, int k) {
  std::set<std::vector<int>> out;
  for (std::uint32_t s = 0; s < (1u << g.order()); ++s) {
    if (std::popcount(s) != k) continue;
    const std::uint32_t rest = all_vertices(g) & ~s;
    if (components(g, rest) >= 2) {
      std::vector<int> vs;
      for (int v = 0; v < g.order(); ++v) {
        if ((s >> v) & 1u) vs.push_back(v);
      }
      out.insert(vs);
    }
  }
  return out;
}

inline std::vector<std::uint32_t> component_masks(const Graph& g, std::uint32_t alive) {
  std::vector<std::uint32_t> out;
  std::uint32_t seen = 0;
  for (int s = 0; s < g.order(); ++s) {
    if (!((alive >> s) & 1u) || ((seen >> s) & 1u)) continue;
    std::uint32_t comp = 1u << s;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (((alive >> w) & 1u) && !((comp >> w) & 1u)) {
          comp |= 1u << w;
          stack.push_back(w);
        }
      }
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

/// The three-condition definition, by enumerating every S with |S| <= 5
/// and every grouping of the components of G - S into two sides.
inline bool essentially_6_connected(const Graph& g) {
  if (ref::vertex_connectivity(g) < 4) return false;
  const int n = g.order();
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    const int k = std::popcount(s);
    if (k > 5) continue;
    const auto comps = component_masks(g, all_vertices(g) & ~s);
    if (comps.size() < 2) continue;
    for (std::uint32_t pick = 1; pick + 1 < (1u << comps.size()); ++pick) {
      int a = 0;
      int b = 0;
      for (std::size_t i = 0; i < comps.size(); ++i) ((pick >> i) & 1u ? a : b) += std::popcount(comps[i]);
      if (k <= 4 && a >= 3 && b >= 3) return false;
      if (k <= 5 && a >= 4 && b >= 4) return false;
    }
  }
  return true;
}

inline bool has_cycle(const Graph& g, std::uint32_t side) {
  return edges_inside(g.edges(), side) > std::popcount(side) - components(g, side);
}

/// Every bipartition with a cycle on both sides has at least k crossing edges.
inline bool cyclically_edge_connected(const Graph& g, int k) {
  const auto es = g.edges();
  const std::uint32_t all = all_vertices(g);
  for (std::uint32_t x = 1; x < all; ++x) {
    if (!has_cycle(g, x) || !has_cycle(g, all & ~x)) continue;
    int crossing = 0;
    for (const Edge& e : es) crossing += ((x >> e.u) & 1u) != ((x >> e.v) & 1u) ? 1 : 0;
    if (crossing < k) return false;
  }
  return true;
}

inline bool is_automorphism(const Graph& g, const std::vector<int>& p) {
  for (const Edge& e : g.edges()) {
    if (!g.adjacent(p[std::size_t(e.u)], p[std::size_t(e.v)])) return false;
  }
  return true;
}

/// All automorphisms, by trying every permutation.
inline std::vector<std::vector<int>> automorphisms(const Graph& g) {
  std::vector<int> p(static_cast<std::size_t>(g.order()));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    if (ref::is_automorphism(g, p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline int clique_number(const Graph& g) {
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << g.order()); ++s) {
    const int k = std::popcount(s);
    if (k > best && edges_inside(g.edges(), s) == k * (k - 1) / 2) best = k;
  }
  return best;
}

inline std::vector<std::vector<int>> distances(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> d(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int s = 0; s < n; ++s) {
    std::queue<int> q;
    d[std::size_t(s)][std::size_t(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (d[std::size_t(s)][std::size_t(w)] < 0) {
          d[std::size_t(s)][std::size_t(w)] = d[std::size_t(s)][std::size_t(v)] + 1;
          q.push(w);
        }
      }
    }
  }
  return d;
}

/// Non-empty lines of a text fixture.
inline std::vector<std::string> corpus_lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

}  // namespace ref
