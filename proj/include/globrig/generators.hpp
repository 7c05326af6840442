#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "globrig/graph.hpp"

namespace globrig::gen {

inline Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete(n) needs n >= 1");
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) es.emplace_back(u, v);
  }
  return Graph::from_edges(n, es);
}

/// Parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite(a,b) needs a, b >= 1");
  std::vector<Edge> es;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = a; v < a + b; ++v) es.emplace_back(u, v);
  }
  return Graph::from_edges(a + b, es);
}

inline Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle(n) needs n >= 3");
  std::vector<Edge> es;
  for (Vertex v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, es);
}

inline Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path(n) needs n >= 1");
  std::vector<Edge> es;
  for (Vertex v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
  return Graph::from_edges(n, es);
}

/// K2 x K3: triangles {0,1,2} and {3,4,5}, rungs i -- i+3.
inline Graph prism() {
  return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

/// K6 minus the perfect matching {i, i+3}.
inline Graph octahedron() {
  std::vector<Edge> es;
  for (Vertex u = 0; u < 6; ++u) {
    for (Vertex v = u + 1; v < 6; ++v) {
      if (v != u + 3) es.emplace_back(u, v);
    }
  }
  return Graph::from_edges(6, es);
}

/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
inline Graph petersen() {
  std::vector<Edge> es;
  for (Vertex i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(i, i + 5);
    es.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, es);
}

/// The 16-vertex edge-transitive bipartite graph with parts {0..5}
/// (degree 5) and {6..15} (degree 3), labelled exactly as its published
/// adjacency list.
inline Graph h_6_10() {
  static constexpr std::array<std::array<Vertex, 5>, 6> kHubs = {{
      {6, 8, 9, 10, 15},
      {7, 9, 10, 12, 13},
      {6, 8, 11, 12, 13},
      {6, 7, 10, 11, 14},
      {9, 11, 12, 14, 15},
      {7, 8, 13, 14, 15},
  }};
  std::vector<Edge> es;
  for (Vertex u = 0; u < 6; ++u) {
    for (Vertex v : kHubs[std::size_t(u)]) es.emplace_back(u, v);
  }
  return Graph::from_edges(16, es);
}

/// k-regular, not globally rigid: two copies of K_{k+1} (on 0..k and
/// k+1..2k+1), each missing the edge between its two lowest vertices, joined
/// by the cross edges 0 -- k+1 and 1 -- k+2.
inline Graph jss_counterexample(int k) {
  if (k < 3) throw std::invalid_argument("jss_counterexample(k) needs k >= 3");
  const int block = k + 1;
  std::vector<Edge> es;
  for (int copy = 0; copy < 2; ++copy) {
    const Vertex off = copy * block;
    for (Vertex u = 0; u < block; ++u) {
      for (Vertex v = u + 1; v < block; ++v) {
        if (u == 0 && v == 1) continue;
        es.emplace_back(off + u, off + v);
      }
    }
  }
  es.emplace_back(0, block);
  es.emplace_back(1, block + 1);
  return Graph::from_edges(2 * block, es);
}

struct CatalogEntry {
  std::string_view name;
  int arity;
  std::string_view usage;
};

inline constexpr std::array<CatalogEntry, 9> kCatalog = {{
    {"complete", 1, "complete,N"},
    {"complete_bipartite", 2, "complete_bipartite,A,B"},
    {"cycle", 1, "cycle,N"},
    {"path", 1, "path,N"},
    {"prism", 0, "prism"},
    {"octahedron", 0, "octahedron"},
    {"petersen", 0, "petersen"},
    {"h_6_10", 0, "h_6_10"},
    {"jss_counterexample", 1, "jss_counterexample,K"},
}};

/// Named construction lookup. Throws std::invalid_argument on unknown names
/// or a wrong parameter count / value.
inline Graph generate(std::string_view name, std::span<const int> params = {}) {
  const CatalogEntry* entry = nullptr;
  for (const auto& c : kCatalog) {
    if (c.name == name) entry = &c;
  }
  if (entry == nullptr) throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
  if (int(params.size()) != entry->arity) {
    throw std::invalid_argument("generator '" + std::string(name) + "' takes " + std::to_string(entry->arity) +
                                " parameter(s), usage: " + std::string(entry->usage));
  }
  if (name == "complete") return complete(params[0]);
  if (name == "complete_bipartite") return complete_bipartite(params[0], params[1]);
  if (name == "cycle") return cycle(params[0]);
  if (name == "path") return path(params[0]);
  if (name == "prism") return prism();
  if (name == "octahedron") return octahedron();
  if (name == "petersen") return petersen();
  if (name == "h_6_10") return h_6_10();
  return jss_counterexample(params[0]);
}

inline Graph generate(std::string_view name, std::initializer_list<int> params) {
  return generate(name, std::span<const int>(params.begin(), params.size()));
}

/// Parses "NAME" or "NAME,P1,P2,...".
inline Graph generate_from_spec(std::string_view spec) {
  std::vector<std::string_view> fields;
  for (std::size_t start = 0;;) {
    const auto comma = spec.find(',', start);
    fields.push_back(spec.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  std::vector<int> params;
  for (std::size_t i = 1; i < fields.size(); ++i) {
    const std::string token(fields[i]);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (token.empty() || used != token.size()) {
      throw std::invalid_argument("bad generator parameter '" + token + "'");
    }
    params.push_back(value);
  }
  return generate(fields[0], params);
}

}  // namespace globrig::gen
