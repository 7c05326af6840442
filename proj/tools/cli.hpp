#pragma once

// Command-line front end. `run` takes explicit streams so tests can drive it
// in-process; main() just forwards the process streams.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "globrig/globrig.hpp"

namespace globrig::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Source {
  std::string path;
  std::string generator;
  bool use_stdin = false;

  int count() const { return int(!path.empty()) + int(!generator.empty()) + int(use_stdin); }
};

struct Options {
  Source source;
  std::string format = "text";
  std::string family = "auto";
  std::optional<std::uint64_t> seed;
  bool strict = false;
  bool edge_list = false;
  std::optional<int> max_n;
  unsigned jobs = 1;
  std::string output;
};

namespace detail {

inline void add_source(CLI::App* cmd, Options& o) {
  cmd->add_option("--input", o.source.path, "Read an edge list or graph6 file");
  cmd->add_option("--generate", o.source.generator, "Build a catalog graph, NAME[,PARAMS]");
  cmd->add_flag("--stdin", o.source.use_stdin, "Read from standard input");
}

inline void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "text | tsv | json")->capture_default_str();
}

inline std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

inline std::string read_source_text(const Source& s, std::istream& in) {
  if (s.use_stdin) return slurp(in);
  std::ifstream file(s.path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + s.path + "'");
  return slurp(file);
}

/// graph6 bytes are all >= 63, so a leading digit means an edge list.
inline Graph parse_graph_text(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw InputError("empty input");
  if (text[first] >= '0' && text[first] <= '9') return read_edge_list(std::string_view(text));
  std::istringstream lines(text);
  auto batch = ingest_graph6_stream(lines, true);
  if (batch.graphs.size() != 1) throw InputError("expected exactly one graph6 record, found " + std::to_string(batch.graphs.size()));
  return batch.graphs.front();
}

inline void check_single_source(const Source& s) {
  if (s.count() != 1) throw UsageError("exactly one of --input, --generate, --stdin is required");
}

inline Graph load_graph(const Source& s, std::istream& in) {
  check_single_source(s);
  if (!s.generator.empty()) {
    try {
      return gen::generate_from_spec(s.generator);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return parse_graph_text(read_source_text(s, in));
}

inline Format format_of(const Options& o) {
  const auto f = parse_format(o.format);
  if (!f) throw UsageError("unknown format '" + o.format + "' (expected text, tsv or json)");
  return *f;
}

inline std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  const char* env = std::getenv("GLOBRIG_SEED");
  if (env == nullptr || *env == '\0') return 1;
  std::uint64_t value = 0;
  std::istringstream parse(env);
  if (!(parse >> value) || !parse.eof()) throw UsageError(std::string("GLOBRIG_SEED is not an unsigned integer: ") + env);
  return value;
}

inline std::string list(const std::vector<Vertex>& vs) { return globrig::detail::join(vs, ','); }

inline void decide(const Options& o, std::istream& in, std::ostream& out) {
  const Format f = format_of(o);
  const Graph g = load_graph(o.source, in);
  out << render_report(g, decide_global_rigidity(g), f);
}

inline void classify_cmd(const Options& o, std::istream& in, std::ostream& out) {
  const Format f = format_of(o);
  if (o.family != "auto" && !parse_route(o.family)) throw UsageError("unknown family '" + o.family + "'");
  const Graph g = load_graph(o.source, in);
  ClassificationReport r;
  try {
    if (o.family == "auto") {
      r = classify(g);
    } else {
      switch (*parse_route(o.family)) {
        case Route::general: r = decide_global_rigidity(g); break;
        case Route::vertex_transitive: r = classify_vertex_transitive(g); break;
        case Route::edge_transitive: r = classify_edge_transitive(g); break;
        case Route::distance_regular: r = classify_distance_regular(g); break;
      }
    }
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  out << render_report(g, r, f);
}

inline void components(const Options& o, std::istream& in, std::ostream& out) {
  const Format f = format_of(o);
  const Graph g = load_graph(o.source, in);
  if (g.size() == 0) throw UsageError("rigid components need at least one edge");
  const auto d = rigid_components(g);
  switch (f) {
    case Format::text:
      out << "rank: " << d.rank << '\n' << "rigid: " << globrig::detail::yes_no(is_rigid(g)) << '\n';
      for (const auto& c : d.components) out << "component: " << globrig::detail::join(c) << '\n';
      break;
    case Format::tsv:
      out << "component\tsize\tvertices\n";
      for (std::size_t i = 0; i < d.components.size(); ++i) {
        out << i << '\t' << d.components[i].size() << '\t' << list(d.components[i]) << '\n';
      }
      break;
    case Format::json:
      out << "{\"rank\":" << d.rank << ",\"rigid\":" << globrig::detail::yes_no(is_rigid(g)) << ",\"components\":[";
      for (std::size_t i = 0; i < d.components.size(); ++i) out << (i ? "," : "") << '[' << list(d.components[i]) << ']';
      out << "]}\n";
      break;
  }
}

inline void symmetry(const Options& o, std::istream& in, std::ostream& out) {
  const Format f = format_of(o);
  const Graph g = load_graph(o.source, in);
  const auto sym = automorphism_group(g);
  const bool connected = g.order() > 0 && is_connected(g);
  const auto dr = connected ? is_distance_regular(g) : std::nullopt;
  const std::string array = dr ? dr->to_string() : "-";
  const auto diam = diameter(g);
  const std::string diam_text = diam ? std::to_string(*diam) : "inf";
  using globrig::detail::yes_no;
  switch (f) {
    case Format::text:
      out << "vertices: " << g.order() << '\n'
          << "edges: " << g.size() << '\n'
          << "automorphisms: " << sym.aut_order << '\n'
          << "generators: " << sym.generators.size() << '\n'
          << "vertex orbits: " << sym.vertex_orbits.size() << '\n'
          << "edge orbits: " << sym.edge_orbits.size() << '\n'
          << "vertex-transitive: " << yes_no(sym.vertex_transitive) << '\n'
          << "edge-transitive: " << yes_no(sym.edge_transitive) << '\n'
          << "distance-regular: " << yes_no(dr.has_value()) << '\n'
          << "intersection array: " << array << '\n'
          << "diameter: " << diam_text << '\n'
          << "clique number: " << clique_number(g) << '\n';
      for (const auto& orbit : sym.vertex_orbits) out << "orbit: " << globrig::detail::join(orbit) << '\n';
      break;
    case Format::tsv:
      out << "graph6\tn\tm\taut\tvertex_orbits\tedge_orbits\tvt\tet\tdr\tarray\tdiameter\tclique\n"
          << to_graph6(g) << '\t' << g.order() << '\t' << g.size() << '\t' << sym.aut_order << '\t'
          << sym.vertex_orbits.size() << '\t' << sym.edge_orbits.size() << '\t' << yes_no(sym.vertex_transitive) << '\t'
          << yes_no(sym.edge_transitive) << '\t' << yes_no(dr.has_value()) << '\t' << array << '\t' << diam_text << '\t'
          << clique_number(g) << '\n';
      break;
    case Format::json:
      out << "{\"vertices\":" << g.order() << ",\"edges\":" << g.size() << ",\"automorphisms\":" << sym.aut_order
          << ",\"vertex_transitive\":" << yes_no(sym.vertex_transitive) << ",\"edge_transitive\":"
          << yes_no(sym.edge_transitive) << ",\"distance_regular\":" << yes_no(dr.has_value())
          << ",\"intersection_array\":\"" << array << "\",\"diameter\":" << (diam ? diam_text : "null")
          << ",\"clique_number\":" << clique_number(g) << ",\"vertex_orbits\":[";
      for (std::size_t i = 0; i < sym.vertex_orbits.size(); ++i) out << (i ? "," : "") << '[' << list(sym.vertex_orbits[i]) << ']';
      out << "]}\n";
      break;
  }
}

inline void generate(const Options& o, const std::string& spec, std::ostream& out) {
  Graph g;
  try {
    g = gen::generate_from_spec(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  out << (o.edge_list ? to_edge_list(g) : to_graph6(g) + '\n');
}

inline void oracle(const Options& o, std::istream& in, std::ostream& out) {
  const Format f = format_of(o);
  const Graph g = load_graph(o.source, in);
  if (g.order() < 2) throw UsageError("the oracle needs at least two vertices");
  const std::uint64_t seed = resolve_seed(o);
  const std::size_t matrix = rigidity_matrix_rank(g, random_realization(g, seed));
  const std::size_t pebble = rigidity_rank(g);
  const bool rigid = matrix == std::size_t(2 * g.order() - 3);
  using globrig::detail::yes_no;
  switch (f) {
    case Format::text:
      out << "seed: " << seed << '\n'
          << "prime: " << kOraclePrime << '\n'
          << "matrix rank: " << matrix << '\n'
          << "pebble rank: " << pebble << '\n'
          << "rigid: " << yes_no(rigid) << '\n'
          << "agree: " << yes_no(matrix == pebble) << '\n';
      break;
    case Format::tsv:
      out << "graph6\tseed\tmatrix_rank\tpebble_rank\trigid\tagree\n"
          << to_graph6(g) << '\t' << seed << '\t' << matrix << '\t' << pebble << '\t' << yes_no(rigid) << '\t'
          << yes_no(matrix == pebble) << '\n';
      break;
    case Format::json:
      out << "{\"seed\":" << seed << ",\"matrix_rank\":" << matrix << ",\"pebble_rank\":" << pebble
          << ",\"rigid\":" << yes_no(rigid) << ",\"agree\":" << yes_no(matrix == pebble) << "}\n";
      break;
  }
}

inline void census(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const int chosen = o.source.count() + int(o.max_n.has_value());
  if (chosen > 1) throw UsageError("choose one of --max-n, --input, --generate, --stdin");
  std::vector<Graph> graphs;
  if (!o.source.generator.empty()) {
    graphs.push_back(load_graph(o.source, in));
  } else if (!o.source.path.empty() || o.source.use_stdin) {
    std::ifstream file;
    if (!o.source.use_stdin) {
      file.open(o.source.path, std::ios::binary);
      if (!file) throw InputError("cannot open '" + o.source.path + "'");
    }
    auto batch = ingest_graph6_stream(o.source.use_stdin ? in : file, o.strict);
    for (const auto& d : batch.diagnostics) err << "skipped " << d.message << '\n';
    graphs = std::move(batch.graphs);
  } else {
    const int max_n = o.max_n.value_or(kMaxBuiltinCensusOrder);
    if (max_n < 1 || max_n > kMaxBuiltinCensusOrder) {
      throw UsageError("--max-n must be in 1.." + std::to_string(kMaxBuiltinCensusOrder) + "; use --input for larger corpora");
    }
    graphs = builtin_census(max_n);
  }
  const auto result = run_parity(graphs, o.jobs);

  std::ofstream file;
  if (!o.output.empty()) {
    file.open(o.output, std::ios::binary);
    if (!file) throw InputError("cannot write '" + o.output + "'");
  }
  std::ostream& sink = o.output.empty() ? out : file;
  sink << kCensusColumns << '\n';
  for (const auto& r : result.records) sink << render_tsv(r) << '\n';
  err << render_summary(result.summary);
}

}  // namespace detail

/// Exit codes: 0 success, 1 usage error, 2 malformed input.
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rigidity and global rigidity of graphs in the plane", "globrig"};
  app.require_subcommand(1);
  Options o;
  std::string spec;

  auto* decide = app.add_subcommand("decide", "General global-rigidity decision");
  detail::add_source(decide, o);
  detail::add_format(decide, o);

  auto* classify = app.add_subcommand("classify", "Decide through a family rule");
  detail::add_source(classify, o);
  detail::add_format(classify, o);
  classify->add_option("--family", o.family, "auto | vertex-transitive | edge-transitive | distance-regular")
      ->capture_default_str();

  auto* comps = app.add_subcommand("components", "Maximal rigid components and rank");
  detail::add_source(comps, o);
  detail::add_format(comps, o);

  auto* sym = app.add_subcommand("symmetry", "Automorphism group, transitivity, distance-regularity");
  detail::add_source(sym, o);
  detail::add_format(sym, o);

  auto* generate = app.add_subcommand("generate", "Print a catalog graph as graph6");
  generate->add_option("spec", spec, "NAME[,PARAMS]")->required();
  generate->add_flag("--edge-list", o.edge_list, "Print an edge list instead");

  auto* census = app.add_subcommand("census", "Family-rule parity over a graph collection (TSV)");
  detail::add_source(census, o);
  census->add_option("--max-n", o.max_n, "Built-in enumeration of connected graphs up to this order");
  census->add_flag("--strict", o.strict, "Abort on the first malformed graph6 line");
  census->add_option("--jobs", o.jobs, "Worker threads, 0 = hardware concurrency")->capture_default_str();
  census->add_option("--output", o.output, "Write the TSV here instead of standard output");

  auto* oracle = app.add_subcommand("oracle", "Rigidity-matrix rank over a prime field");
  detail::add_source(oracle, o);
  detail::add_format(oracle, o);
  oracle->add_option("--seed", o.seed, "Realization seed (default: $GLOBRIG_SEED, else 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (decide->parsed()) detail::decide(o, in, out);
    if (classify->parsed()) detail::classify_cmd(o, in, out);
    if (comps->parsed()) detail::components(o, in, out);
    if (sym->parsed()) detail::symmetry(o, in, out);
    if (generate->parsed()) detail::generate(o, spec, out);
    if (census->parsed()) detail::census(o, in, out, err);
    if (oracle->parsed()) detail::oracle(o, in, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "malformed input: " << e.what() << " (at " << e.position() << ")\n";
    return kExitInput;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace globrig::cli
