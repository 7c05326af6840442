#pragma once

// graph6 encoding (short form up to 62 vertices, the 4-byte form up to
// 258047, the 8-byte form beyond) and the plain "n m / u v" edge-list text.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "globrig/errors.hpp"
#include "globrig/graph.hpp"

namespace globrig {

namespace detail {

inline constexpr int kGraph6Bias = 63;
inline constexpr std::string_view kGraph6Header = ">>graph6<<";

inline void append_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(char(n + kGraph6Bias));
  } else if (n <= 258047) {
    out.push_back(char(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(char(((n >> shift) & 63) + kGraph6Bias));
  } else {
    out.push_back(char(126));
    out.push_back(char(126));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(char(((n >> shift) & 63) + kGraph6Bias));
  }
}

inline int sextet(std::string_view text, std::size_t pos, std::size_t base) {
  if (pos >= text.size()) throw ParseError("graph6: truncated input", base + pos);
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) {
    throw ParseError("graph6: byte " + std::to_string(c) + " outside 63..126", base + pos);
  }
  return c - kGraph6Bias;
}

}  // namespace detail

/// Encodes `g` in graph6, upper triangle in column order, zero padded.
inline std::string to_graph6(const Graph& g) {
  const auto n = std::uint64_t(g.order());
  std::string out;
  detail::append_size(out, n);
  int acc = 0;
  int bits = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(char(acc + detail::kGraph6Bias));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(char((acc << (6 - bits)) + detail::kGraph6Bias));
  return out;
}

/// Decodes one graph6 record. An optional ">>graph6<<" prefix and a trailing
/// newline are accepted. Errors carry the byte offset of the offending byte.
inline Graph from_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(detail::kGraph6Header)) {
    base = detail::kGraph6Header.size();
    text.remove_prefix(base);
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty record", base);

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = std::uint64_t(detail::sextet(text, 0, base));
    pos = 1;
  } else if (text.size() > 1 && static_cast<unsigned char>(text[1]) == 126) {
    for (pos = 2; pos < 8; ++pos) n = (n << 6) | std::uint64_t(detail::sextet(text, pos, base));
    if (n <= 258047) throw ParseError("graph6: non-minimal 8-byte size field", base);
  } else {
    for (pos = 1; pos < 4; ++pos) n = (n << 6) | std::uint64_t(detail::sextet(text, pos, base));
    if (n <= 62) throw ParseError("graph6: non-minimal 4-byte size field", base);
  }
  if (n > kMaxReadableOrder) throw ParseError("graph6: vertex count " + std::to_string(n) + " too large", base);

  const std::size_t bit_count = std::size_t(n) * (std::size_t(n) - (n > 0 ? 1 : 0)) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  if (text.size() - pos < byte_count) {
    throw ParseError("graph6: truncated bit vector (need " + std::to_string(byte_count) + " bytes, have " +
                         std::to_string(text.size() - pos) + ")",
                     base + text.size());
  }
  if (text.size() - pos > byte_count) {
    throw ParseError("graph6: trailing bytes after bit vector", base + pos + byte_count);
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < Vertex(n); ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int word = detail::sextet(text, pos + k / 6, base);
      if ((word >> (5 - int(k % 6))) & 1) edges.emplace_back(i, j);
    }
  }
  if (bit_count % 6 != 0) {
    const int word = detail::sextet(text, pos + byte_count - 1, base);
    if ((word & ((1 << (6 - bit_count % 6)) - 1)) != 0) {
      throw ParseError("graph6: nonzero padding bits", base + pos + byte_count - 1);
    }
  }
  return Graph::from_edges(int(n), edges);
}

/// Plain edge list: "n m" then m lines "u v", 0-indexed.
inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

inline Graph read_edge_list(std::istream& in) {
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) throw ParseError("edge list: bad header, expected \"n m\"", 1);
  if (n > kMaxReadableOrder || m > n * (n - 1) / 2) throw ParseError("edge list: header out of range", 1);
  std::vector<Edge> edges;
  edges.reserve(std::size_t(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) throw ParseError("edge list: expected " + std::to_string(m) + " edges", std::size_t(i + 2));
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw ParseError("edge list: invalid edge " + std::to_string(u) + " " + std::to_string(v), std::size_t(i + 2));
    }
    edges.emplace_back(Vertex(u), Vertex(v));
  }
  std::string rest;
  if (in >> rest) throw ParseError("edge list: trailing data \"" + rest + "\"", std::size_t(m + 2));
  try {
    return Graph::from_edges(int(n), edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("edge list: ") + e.what(), 0);
  }
}

inline Graph read_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

}  // namespace globrig
