#pragma once

// Exhaustive small-graph censuses and the parity run: for every graph that
// satisfies a family predicate, the family rule and the general decision
// must agree.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "globrig/classify.hpp"
#include "globrig/errors.hpp"
#include "globrig/graph.hpp"
#include "globrig/io.hpp"
#include "globrig/symmetry.hpp"

namespace globrig {

inline constexpr int kMaxBuiltinCensusOrder = 7;

/// One representative (in canonical labelling) per isomorphism class of
/// connected graphs on n vertices, ordered by edge count and then graph6.
/// Classes are grown one edge at a time from the edgeless graph and
/// deduplicated by canonical form.
inline std::vector<Graph> enumerate_connected(int n) {
  if (n < 1 || n > kMaxBuiltinCensusOrder) {
    throw std::out_of_range("enumerate_connected: n must be in 1.." + std::to_string(kMaxBuiltinCensusOrder));
  }
  std::vector<Graph> out;
  std::set<std::string> layer{canonical_graph6(Graph(n))};
  while (!layer.empty()) {
    std::set<std::string> next;
    for (const auto& code : layer) {
      const Graph g = from_graph6(code);
      if (is_connected(g)) out.push_back(g);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (!g.adjacent(u, v)) next.insert(canonical_graph6(g.with_edge(Edge(u, v))));
        }
      }
    }
    layer = std::move(next);
  }
  return out;
}

struct IngestDiagnostic {
  std::size_t line = 0;
  std::string message;
};

struct IngestResult {
  std::vector<Graph> graphs;
  std::vector<IngestDiagnostic> diagnostics;
};

/// Reads one graph6 record per line, skipping blank lines. In strict mode the
/// first malformed line throws ParseError with its 1-based line number;
/// otherwise such lines are skipped and reported in `diagnostics`.
inline IngestResult ingest_graph6_stream(std::istream& in, bool strict) {
  IngestResult result;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      result.graphs.push_back(from_graph6(line));
    } catch (const ParseError& e) {
      const std::string message = "line " + std::to_string(number) + ": " + e.what() + " (byte " + std::to_string(e.position()) + ")";
      if (strict) throw ParseError(message, number);
      result.diagnostics.push_back({number, message});
    }
  }
  return result;
}

/// One row of the parity census.
struct CensusRecord {
  std::string graph6;
  int n = 0;
  std::size_t m = 0;
  int delta = 0;
  int Delta = 0;
  bool vertex_transitive = false;
  bool edge_transitive = false;
  bool distance_regular = false;
  bool rigid = false;
  bool redundantly_rigid = false;
  bool three_connected = false;
  bool gr_general = false;
  /// Verdict of every family rule that applies (connected graphs only).
  std::vector<std::pair<Route, bool>> fast_paths;

  std::optional<bool> gr_fastpath() const {
    if (fast_paths.empty()) return std::nullopt;
    return fast_paths.front().second;
  }
  /// nullopt when no family applies.
  std::optional<bool> agree() const {
    if (fast_paths.empty()) return std::nullopt;
    return std::all_of(fast_paths.begin(), fast_paths.end(), [&](const auto& f) { return f.second == gr_general; });
  }
};

inline CensusRecord make_census_record(const Graph& g) {
  CensusRecord r;
  r.graph6 = to_graph6(g);
  r.n = g.order();
  r.m = g.size();
  r.delta = g.min_degree();
  r.Delta = g.max_degree();
  const auto general = decide_global_rigidity(g);
  r.rigid = general.rigid.value_or(false);
  r.redundantly_rigid = general.redundantly_rigid.value_or(false);
  r.three_connected = general.three_connected.value_or(false);
  r.gr_general = general.globally_rigid;

  const auto sym = automorphism_group(g);
  r.vertex_transitive = sym.vertex_transitive;
  r.edge_transitive = sym.edge_transitive;
  const bool connected = g.order() > 0 && is_connected(g);
  r.distance_regular = connected && is_distance_regular(g).has_value();
  if (connected) {
    if (r.vertex_transitive) r.fast_paths.emplace_back(Route::vertex_transitive, classify_vertex_transitive(g, sym).globally_rigid);
    if (r.edge_transitive) r.fast_paths.emplace_back(Route::edge_transitive, classify_edge_transitive(g, sym).globally_rigid);
    if (r.distance_regular) r.fast_paths.emplace_back(Route::distance_regular, classify_distance_regular(g).globally_rigid);
  }
  return r;
}

struct FamilyTally {
  std::size_t applicable = 0;
  std::size_t agreements = 0;
  std::size_t globally_rigid = 0;

  std::size_t mismatches() const { return applicable - agreements; }
  friend bool operator==(const FamilyTally&, const FamilyTally&) = default;
};

struct CensusSummary {
  std::size_t graphs = 0;
  std::size_t globally_rigid = 0;
  std::map<Route, FamilyTally> families;
  std::vector<std::pair<std::string, Route>> mismatches;  // sorted

  std::size_t total_mismatches() const { return mismatches.size(); }
  friend bool operator==(const CensusSummary&, const CensusSummary&) = default;
};

struct CensusResult {
  std::vector<CensusRecord> records;  // sorted by graph6
  CensusSummary summary;
};

/// Classifies every graph (on up to `workers` threads; 0 picks the hardware
/// concurrency) and merges the results in graph6 order, so the outcome does
/// not depend on input order or thread count.
inline CensusResult run_parity(const std::vector<Graph>& graphs, unsigned workers = 1) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, std::max<std::size_t>(graphs.size(), 1));
  CensusResult result;
  result.records.resize(graphs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) result.records[i] = make_census_record(graphs[i]);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  std::stable_sort(result.records.begin(), result.records.end(),
                   [](const CensusRecord& a, const CensusRecord& b) { return a.graph6 < b.graph6; });

  auto& s = result.summary;
  s.graphs = result.records.size();
  for (Route r : {Route::vertex_transitive, Route::edge_transitive, Route::distance_regular}) s.families[r];
  for (const auto& rec : result.records) {
    s.globally_rigid += rec.gr_general ? 1 : 0;
    for (const auto& [route, verdict] : rec.fast_paths) {
      auto& tally = s.families[route];
      ++tally.applicable;
      tally.globally_rigid += verdict ? 1 : 0;
      if (verdict == rec.gr_general) {
        ++tally.agreements;
      } else {
        s.mismatches.emplace_back(rec.graph6, route);
      }
    }
  }
  std::sort(s.mismatches.begin(), s.mismatches.end());
  return result;
}

/// All connected graphs on 1..max_n vertices.
inline std::vector<Graph> builtin_census(int max_n) {
  std::vector<Graph> all;
  for (int n = 1; n <= max_n; ++n) {
    auto layer = enumerate_connected(n);
    all.insert(all.end(), layer.begin(), layer.end());
  }
  return all;
}

}  // namespace globrig
