#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "globrig/census.hpp"
#include "globrig/classify.hpp"
#include "globrig/graph.hpp"

namespace globrig {

enum class Format { text, tsv, json };

inline std::optional<Format> parse_format(std::string_view s) {
  if (s == "text") return Format::text;
  if (s == "tsv") return Format::tsv;
  if (s == "json") return Format::json;
  return std::nullopt;
}

namespace detail {

inline std::string_view yes_no(bool b) { return b ? "true" : "false"; }

inline std::string join(const std::vector<Vertex>& vs, char sep = ' ') {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(vs[i]);
  }
  return out;
}

inline std::string json_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

inline constexpr std::string_view kCensusColumns =
    "graph6\tn\tm\tdelta\tDelta\tvt\tet\tdr\trigid\tredundant\t3conn\tgr_general\tgr_fastpath\tagree";

inline std::string render_tsv(const CensusRecord& r) {
  using detail::yes_no;
  std::ostringstream out;
  out << r.graph6 << '\t' << r.n << '\t' << r.m << '\t' << r.delta << '\t' << r.Delta << '\t' << yes_no(r.vertex_transitive)
      << '\t' << yes_no(r.edge_transitive) << '\t' << yes_no(r.distance_regular) << '\t' << yes_no(r.rigid) << '\t'
      << yes_no(r.redundantly_rigid) << '\t' << yes_no(r.three_connected) << '\t' << yes_no(r.gr_general) << '\t';
  const auto fast = r.gr_fastpath();
  const auto agree = r.agree();
  out << (fast ? yes_no(*fast) : "-") << '\t' << (agree ? yes_no(*agree) : "-");
  return out.str();
}

/// Human-readable block, one "label: value" per line in a fixed order.
inline std::string render_text(const ClassificationReport& r) {
  using detail::yes_no;
  std::ostringstream out;
  out << "route: " << to_string(r.route) << '\n';
  if (r.complete) out << "complete: " << yes_no(*r.complete) << '\n';
  if (r.rigid) out << "rigid: " << yes_no(*r.rigid) << '\n';
  if (r.redundantly_rigid) out << "redundantly rigid: " << yes_no(*r.redundantly_rigid) << '\n';
  if (r.three_connected) out << "3-connected: " << yes_no(*r.three_connected) << '\n';
  out << "globally rigid: " << yes_no(r.globally_rigid);
  if (!r.reason.empty()) out << " (" << r.reason << ')';
  out << '\n';
  if (r.matched_graph) out << "matched: " << *r.matched_graph << '\n';
  if (r.non_redundant_edge) out << "non-redundant edge: " << r.non_redundant_edge->u << ' ' << r.non_redundant_edge->v << '\n';
  if (r.separation) {
    out << "separator: {" << detail::join(r.separation->separator, ',') << "} sides: {"
        << detail::join(r.separation->side_a, ',') << "} {" << detail::join(r.separation->side_b, ',') << "}\n";
  }
  return out.str();
}

/// Single-line JSON object with the same fields as render_text.
inline std::string render_json(const ClassificationReport& r) {
  using detail::yes_no;
  std::ostringstream out;
  out << "{\"route\":\"" << to_string(r.route) << '"';
  auto flag = [&](std::string_view key, const std::optional<bool>& v) {
    if (v) out << ",\"" << key << "\":" << yes_no(*v);
  };
  flag("complete", r.complete);
  flag("rigid", r.rigid);
  flag("redundantly_rigid", r.redundantly_rigid);
  flag("three_connected", r.three_connected);
  out << ",\"globally_rigid\":" << yes_no(r.globally_rigid) << ",\"reason\":\"" << detail::json_escape(r.reason) << '"';
  if (r.matched_graph) out << ",\"matched\":\"" << detail::json_escape(*r.matched_graph) << '"';
  if (r.non_redundant_edge) out << ",\"non_redundant_edge\":[" << r.non_redundant_edge->u << ',' << r.non_redundant_edge->v << ']';
  if (r.separation) {
    out << ",\"separator\":[" << detail::join(r.separation->separator, ',') << "],\"side_a\":["
        << detail::join(r.separation->side_a, ',') << "],\"side_b\":[" << detail::join(r.separation->side_b, ',') << ']';
  }
  out << '}';
  return out.str();
}

/// TSV uses the census schema, so it needs the graph as well as the report.
inline std::string render_report(const Graph& g, const ClassificationReport& r, Format format) {
  switch (format) {
    case Format::text: return render_text(r);
    case Format::json: return render_json(r) + '\n';
    case Format::tsv: return std::string(kCensusColumns) + '\n' + render_tsv(make_census_record(g)) + '\n';
  }
  return {};
}

inline std::string render_summary(const CensusSummary& s) {
  std::ostringstream out;
  out << "graphs: " << s.graphs << '\n' << "globally rigid: " << s.globally_rigid << '\n';
  for (const auto& [route, tally] : s.families) {
    out << to_string(route) << ": " << tally.applicable << " graphs, " << tally.globally_rigid << " globally rigid, "
        << tally.mismatches() << " mismatches\n";
  }
  out << "mismatches: " << s.total_mismatches() << '\n';
  for (const auto& [code, route] : s.mismatches) out << "  " << code << '\t' << to_string(route) << '\n';
  return out.str();
}

}  // namespace globrig
