#pragma once

// Randomised cross-check of the pebble game: the rank of the rigidity
// matrix at a random point of F_p^(2n). The matrix has one row per edge uv
// with p(u) - p(v) in u's column pair and p(v) - p(u) in v's. For a random
// point the rank equals the generic rank except with probability at most
// 2n|E|/p (Schwartz-Zippel), with p = 2^62 - 57.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "globrig/graph.hpp"

namespace globrig {

inline constexpr std::uint64_t kOraclePrime = (std::uint64_t{1} << 62) - 57;

namespace modp {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  return s >= kOraclePrime ? s - kOraclePrime : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kOraclePrime - b; }
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  return std::uint64_t((unsigned __int128)a * b % kOraclePrime);
}
inline std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mul(a, a)) {
    if (e & 1) r = mul(r, a);
  }
  return r;
}
inline std::uint64_t inverse(std::uint64_t a) { return pow(a, kOraclePrime - 2); }

}  // namespace modp

/// Coordinates (x, y) per vertex in F_p.
struct RealizationModP {
  std::uint64_t seed = 0;
  std::uint64_t prime = kOraclePrime;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> coords;
};

/// Deterministic in (g.order(), seed). Draws are rejection-sampled from the
/// low 62 bits of mt19937_64, so results do not depend on the standard
/// library's distribution implementations. If two adjacent vertices land on
/// the same point, all coordinates are redrawn (up to 8 attempts in total).
inline RealizationModP random_realization(const Graph& g, std::uint64_t seed) {
  constexpr int kAttempts = 8;
  std::mt19937_64 engine(seed);
  auto draw = [&engine] {
    while (true) {
      const std::uint64_t x = engine() >> 2;
      if (x < kOraclePrime) return x;
    }
  };
  RealizationModP r;
  r.seed = seed;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    r.coords.clear();
    for (Vertex v = 0; v < g.order(); ++v) {
      const auto x = draw();
      r.coords.emplace_back(x, draw());
    }
    bool collision = false;
    for (const Edge& e : g.edges()) collision = collision || r.coords[std::size_t(e.u)] == r.coords[std::size_t(e.v)];
    if (!collision) return r;
  }
  throw std::runtime_error("random_realization: adjacent vertices coincide after 8 draws");
}

/// Rank over F_p of the |E| x 2n rigidity matrix, by Gaussian elimination.
inline std::size_t rigidity_matrix_rank(const Graph& g, const RealizationModP& r) {
  if (r.coords.size() != std::size_t(g.order())) throw std::invalid_argument("rigidity_matrix_rank: realization size mismatch");
  const std::size_t cols = 2 * std::size_t(g.order());
  std::vector<std::vector<std::uint64_t>> rows;
  for (const Edge& e : g.edges()) {
    const auto [xu, yu] = r.coords[std::size_t(e.u)];
    const auto [xv, yv] = r.coords[std::size_t(e.v)];
    if (xu == xv && yu == yv) throw std::invalid_argument("rigidity_matrix_rank: adjacent vertices coincide");
    std::vector<std::uint64_t> row(cols, 0);
    row[2 * std::size_t(e.u)] = modp::sub(xu, xv);
    row[2 * std::size_t(e.u) + 1] = modp::sub(yu, yv);
    row[2 * std::size_t(e.v)] = modp::sub(xv, xu);
    row[2 * std::size_t(e.v) + 1] = modp::sub(yv, yu);
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const std::uint64_t inv = modp::inverse(rows[rank][col]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      const std::uint64_t factor = modp::mul(rows[i][col], inv);
      for (std::size_t j = col; j < cols; ++j) {
        rows[i][j] = modp::sub(rows[i][j], modp::mul(factor, rows[rank][j]));
      }
    }
    ++rank;
  }
  return rank;
}

/// One-sided: never claims rigidity falsely; may miss it with probability
/// at most 2n|E|/p.
inline bool oracle_is_rigid(const Graph& g, std::uint64_t seed) {
  if (g.order() < 2) throw std::invalid_argument("oracle_is_rigid: needs at least two vertices");
  return rigidity_matrix_rank(g, random_realization(g, seed)) == std::size_t(2 * g.order() - 3);
}

}  // namespace globrig
