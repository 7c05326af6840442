#pragma once

// Global rigidity in the plane, decided two ways: the general combinatorial
// test (complete, or 3-connected and redundantly rigid) and degree-based
// rules for vertex-transitive, edge-transitive and distance-regular graphs.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "globrig/connectivity.hpp"
#include "globrig/distance_regular.hpp"
#include "globrig/errors.hpp"
#include "globrig/generators.hpp"
#include "globrig/graph.hpp"
#include "globrig/metrics.hpp"
#include "globrig/rigidity.hpp"
#include "globrig/symmetry.hpp"

namespace globrig {

enum class Route { general, vertex_transitive, edge_transitive, distance_regular };

inline std::string_view to_string(Route r) {
  switch (r) {
    case Route::general: return "general";
    case Route::vertex_transitive: return "vertex-transitive";
    case Route::edge_transitive: return "edge-transitive";
    case Route::distance_regular: return "distance-regular";
  }
  return "?";
}

inline std::optional<Route> parse_route(std::string_view s) {
  for (Route r : {Route::general, Route::vertex_transitive, Route::edge_transitive, Route::distance_regular}) {
    if (s == to_string(r)) return r;
  }
  return std::nullopt;
}

/// Verdicts plus the rule that produced them. The family routes only fill
/// `globally_rigid`; the general route fills every flag.
struct ClassificationReport {
  Route route = Route::general;
  bool globally_rigid = false;
  std::optional<bool> complete;
  std::optional<bool> rigid;
  std::optional<bool> redundantly_rigid;
  std::optional<bool> three_connected;
  std::string reason;

  std::optional<Separation> separation;      // separator of size < 3, or the components of a disconnected graph
  std::optional<Edge> non_redundant_edge;    // deleting it leaves a flexible graph
  std::optional<std::string> matched_graph;  // named special case
};

namespace detail {

struct NamedGraph {
  std::string_view name;
  Graph graph;
};

inline const std::array<NamedGraph, 3>& globally_rigid_specials() {
  static const std::array<NamedGraph, 3> specials = {{
      {"K3,4", gen::complete_bipartite(3, 4)},
      {"K3,5", gen::complete_bipartite(3, 5)},
      {"H6,10", gen::h_6_10()},
  }};
  return specials;
}

inline const std::array<NamedGraph, 2>& rigid_cubic_specials() {
  static const std::array<NamedGraph, 2> specials = {{
      {"K3,3", gen::complete_bipartite(3, 3)},
      {"prism", gen::prism()},
  }};
  return specials;
}

template <std::size_t N>
std::optional<std::string> match_special(const Graph& g, const std::array<NamedGraph, N>& specials) {
  for (const auto& s : specials) {
    if (is_isomorphic(g, s.graph)) return std::string(s.name);
  }
  return std::nullopt;
}

}  // namespace detail

/// Complete, or 3-connected and redundantly rigid. Disconnected graphs on
/// two or more vertices are reported as not globally rigid, with their
/// components as the witness.
inline ClassificationReport decide_global_rigidity(const Graph& g) {
  ClassificationReport r;
  r.route = Route::general;
  r.complete = g.is_complete();
  r.rigid = is_rigid(g);

  if (!is_connected(g)) {
    r.redundantly_rigid = false;
    r.three_connected = false;
    r.globally_rigid = false;
    r.reason = "disconnected";
    r.separation = detail::split_off_first({}, detail::components_without(g, {}));
    return r;
  }

  r.redundantly_rigid = *r.rigid;
  if (*r.rigid) {
    for (const Edge& e : g.edges()) {
      if (!is_rigid(g.without_edge(e))) {
        r.redundantly_rigid = false;
        r.non_redundant_edge = e;
        break;
      }
    }
  }
  r.three_connected = is_k_connected(g, 3);
  if (!*r.three_connected && !*r.complete) r.separation = minimum_separation(g);

  if (*r.complete) {
    r.globally_rigid = true;
    r.reason = "complete";
  } else {
    r.globally_rigid = *r.three_connected && *r.redundantly_rigid;
    if (r.globally_rigid) {
      r.reason = "3-connected and redundantly rigid";
    } else if (!*r.rigid) {
      r.reason = "not rigid";
    } else if (!*r.redundantly_rigid) {
      r.reason = "not redundantly rigid";
    } else {
      r.reason = "not 3-connected";
    }
  }
  return r;
}

/// Degree rule for connected vertex-transitive graphs of degree k: globally
/// rigid iff k >= 6; k = 5 with clique number <= 4 or |V| <= 28; k = 4 with
/// clique number <= 3 or |V| <= 11; or complete.
inline ClassificationReport classify_vertex_transitive(const Graph& g, const SymmetryReport& sym) {
  if (!is_connected(g) || !sym.vertex_transitive) {
    throw PreconditionError("classify_vertex_transitive: graph is not connected and vertex-transitive");
  }
  ClassificationReport r;
  r.route = Route::vertex_transitive;
  const int k = g.max_degree();
  const int n = g.order();
  const std::string degree = "k=" + std::to_string(k);
  if (g.is_complete()) {
    r.globally_rigid = true;
    r.reason = "complete";
  } else if (k >= 6) {
    r.globally_rigid = true;
    r.reason = degree;
  } else if (k == 5 || k == 4) {
    const int omega = clique_number(g);
    const int clique_cap = k - 1;
    const int order_cap = k == 5 ? 28 : 11;
    r.globally_rigid = omega <= clique_cap || n <= order_cap;
    r.reason = degree + ", clique " + std::to_string(omega) + ", |V|=" + std::to_string(n);
  } else {
    r.globally_rigid = false;
    r.reason = degree;
  }
  return r;
}

inline ClassificationReport classify_vertex_transitive(const Graph& g) {
  return classify_vertex_transitive(g, automorphism_group(g));
}

/// Connected edge-transitive graphs: globally rigid iff delta >= 4, or
/// delta = 3 and Delta >= 6, or g is K3,4, K3,5 or H6,10, or complete.
inline ClassificationReport classify_edge_transitive(const Graph& g, const SymmetryReport& sym) {
  if (!is_connected(g) || !sym.edge_transitive) {
    throw PreconditionError("classify_edge_transitive: graph is not connected and edge-transitive");
  }
  ClassificationReport r;
  r.route = Route::edge_transitive;
  const int lo = g.min_degree();
  const int hi = g.max_degree();
  const std::string degrees = "delta=" + std::to_string(lo) + ", Delta=" + std::to_string(hi);
  if (g.is_complete()) {
    r.globally_rigid = true;
    r.reason = "complete";
  } else if (lo >= 4 || (lo == 3 && hi >= 6)) {
    r.globally_rigid = true;
    r.reason = degrees;
  } else if (auto name = detail::match_special(g, detail::globally_rigid_specials())) {
    r.globally_rigid = true;
    r.reason = "isomorphic to " + *name;
    r.matched_graph = std::move(name);
  } else {
    r.globally_rigid = false;
    r.reason = degrees;
  }
  return r;
}

inline ClassificationReport classify_edge_transitive(const Graph& g) {
  return classify_edge_transitive(g, automorphism_group(g));
}

/// Connected distance-regular graphs: globally rigid iff k >= 4 or complete.
inline ClassificationReport classify_distance_regular(const Graph& g) {
  if (g.order() == 0 || !is_connected(g) || !is_distance_regular(g)) {
    throw PreconditionError("classify_distance_regular: graph is not connected and distance-regular");
  }
  ClassificationReport r;
  r.route = Route::distance_regular;
  const int k = g.max_degree();
  if (g.is_complete()) {
    r.globally_rigid = true;
    r.reason = "complete";
  } else {
    r.globally_rigid = k >= 4;
    r.reason = "k=" + std::to_string(k);
  }
  return r;
}

/// Picks the first family that applies (vertex-transitive, edge-transitive,
/// distance-regular) and falls back to the general decision.
inline ClassificationReport classify(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) return decide_global_rigidity(g);
  const auto sym = automorphism_group(g);
  if (sym.vertex_transitive) return classify_vertex_transitive(g, sym);
  if (sym.edge_transitive) return classify_edge_transitive(g, sym);
  if (is_distance_regular(g)) return classify_distance_regular(g);
  return decide_global_rigidity(g);
}

/// Rigid-versus-flexible verdict for a connected graph that is not globally
/// rigid, with the prediction of each family rule that applies.
struct RigidityStatus {
  struct FamilyPrediction {
    std::string family;
    bool predicts_rigid = false;
    std::string rule;
  };

  bool rigid = false;
  std::optional<std::string> matched_graph;  // "K3,3" or "prism"
  std::vector<FamilyPrediction> predictions;

  bool consistent() const {
    for (const auto& p : predictions) {
      if (p.predicts_rigid != rigid) return false;
    }
    return true;
  }
};

/// Throws PreconditionError if g is disconnected or globally rigid.
/// Family rules: cubic, edge-transitive and distance-regular graphs are
/// rigid exactly when they are K3,3 or the prism; vertex-transitive graphs
/// additionally when k = 5, a 5-clique and 30 <= |V| <= 38, or k = 4, a
/// 4-clique and 12 <= |V| <= 15.
inline RigidityStatus rigid_not_globally_rigid_status(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) throw PreconditionError("rigid_not_globally_rigid_status: graph must be connected");
  if (decide_global_rigidity(g).globally_rigid) {
    throw PreconditionError("rigid_not_globally_rigid_status: graph is globally rigid");
  }
  RigidityStatus s;
  s.rigid = is_rigid(g);
  s.matched_graph = detail::match_special(g, detail::rigid_cubic_specials());
  const bool special = s.matched_graph.has_value();
  const std::string special_rule = "rigid iff K3,3 or prism";

  const auto sym = automorphism_group(g);
  const int k = g.max_degree();
  if (g.is_regular() && k == 3) s.predictions.push_back({"cubic", special, special_rule});
  if (sym.vertex_transitive) {
    const int omega = clique_number(g);
    const int n = g.order();
    const bool predicted = special || (k == 5 && omega >= 5 && n >= 30 && n <= 38) ||
                           (k == 4 && omega >= 4 && n >= 12 && n <= 15);
    s.predictions.push_back({"vertex-transitive", predicted,
                             "k=" + std::to_string(k) + ", clique " + std::to_string(omega) + ", |V|=" + std::to_string(n)});
  }
  if (sym.edge_transitive) s.predictions.push_back({"edge-transitive", special, special_rule});
  if (is_distance_regular(g)) s.predictions.push_back({"distance-regular", special, special_rule});
  return s;
}

/// Edge count against 2|V| - 3 for a connected edge-transitive,
/// non-vertex-transitive graph with sides V_delta, V_Delta.
struct CountLemmaReport {
  enum class Branch { dense, sparse_low_degree, cubic_side };  // delta>=4 or (3, >=6) | delta<=2 | delta=3, Delta<=5

  std::int64_t edges = 0;
  std::int64_t bound = 0;  // 2|V| - 3
  int delta = 0;
  int Delta = 0;
  std::int64_t low_count = 0;
  std::int64_t high_count = 0;
  Branch branch = Branch::dense;
  /// 6(|E| - 2|V|) - (2 Delta - 12)|V_Delta|; zero whenever delta = 3.
  std::optional<std::int64_t> residue;
  std::optional<std::string> matched_graph;
  /// dense: |E| > bound; sparse_low_degree: |E| < bound; cubic_side:
  /// |E| <= bound unless g is one of K3,4, K3,5, H6,10.
  bool inequality_holds = false;
};

inline CountLemmaReport count_lemma_check(const Graph& g, const SymmetryReport& sym) {
  const auto parts = degree_bipartition(g, sym);  // throws on precondition
  if (!parts) throw PreconditionError("count_lemma_check: no degree-homogeneous bipartition");
  CountLemmaReport c;
  c.edges = std::int64_t(g.size());
  c.bound = 2 * std::int64_t(g.order()) - 3;
  c.delta = parts->low_degree;
  c.Delta = parts->high_degree;
  c.low_count = std::int64_t(parts->low.size());
  c.high_count = std::int64_t(parts->high.size());
  const std::int64_t order = std::int64_t(g.order());
  if (c.delta == 3) c.residue = 6 * (c.edges - 2 * order) - (2 * std::int64_t(c.Delta) - 12) * c.high_count;

  if (c.delta >= 4 || (c.delta == 3 && c.Delta >= 6)) {
    c.branch = CountLemmaReport::Branch::dense;
    c.inequality_holds = c.edges > c.bound;
  } else if (c.delta <= 2) {
    c.branch = CountLemmaReport::Branch::sparse_low_degree;
    c.inequality_holds = c.edges < c.bound;
  } else {
    c.branch = CountLemmaReport::Branch::cubic_side;
    c.matched_graph = detail::match_special(g, detail::globally_rigid_specials());
    c.inequality_holds = c.edges <= c.bound || c.matched_graph.has_value();
  }
  return c;
}

inline CountLemmaReport count_lemma_check(const Graph& g) { return count_lemma_check(g, automorphism_group(g)); }

}  // namespace globrig
