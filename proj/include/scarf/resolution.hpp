#pragma once

#include <random>

#include "scarf/exact_rank.hpp"
#include "scarf/labeled_complex.hpp"
#include "scarf/polynomial.hpp"

namespace scarf {

/// Entry sign * x^exponent at (row, col).
struct MonoEntry {
  int row = 0;
  int col = 0;
  int sign = 1;
  ExponentVector exponent;
};

/// Sparse matrix with signed-monomial entries; the differential of a
/// cellular free resolution.
struct SparseMonoMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<MonoEntry> entries;
};

/// The chain of differentials phi_1..phi_{d+1}. phi_1 maps the vertex
/// basis element e_a to x^a (E_0 has rank one); for k >= 2 the entry at
/// (delta, gamma) is sgn(delta,gamma) * x^(label(gamma) - label(delta)).
inline std::vector<SparseMonoMatrix> differentials(const LabeledComplex& x) {
  std::vector<SparseMonoMatrix> mats;
  SparseMonoMatrix phi1;
  phi1.rows = 1;
  phi1.cols = static_cast<int>(x.cells[0].size());
  for (int v = 0; v < phi1.cols; ++v)
    phi1.entries.push_back(MonoEntry{0, v, 1, x.cells[0][v].label});
  mats.push_back(std::move(phi1));
  for (std::size_t d = 1; d < x.cells.size(); ++d) {
    SparseMonoMatrix phi;
    phi.rows = static_cast<int>(x.cells[d - 1].size());
    phi.cols = static_cast<int>(x.cells[d].size());
    for (int c = 0; c < phi.cols; ++c) {
      const Cell& cell = x.cells[d][c];
      for (auto [idx, sign] : cell.boundary) {
        phi.entries.push_back(
            MonoEntry{idx, c, sign, quotient(cell.label, x.cells[d - 1][idx].label)});
      }
    }
    mats.push_back(std::move(phi));
  }
  return mats;
}

/// phi_k ∘ phi_{k+1} = 0 as matrices of polynomials: all signed monomial
/// pairs cancel symbolically.
inline bool check_complex(const std::vector<SparseMonoMatrix>& mats) {
  for (std::size_t k = 0; k + 1 < mats.size(); ++k) {
    const SparseMonoMatrix& a = mats[k];
    const SparseMonoMatrix& b = mats[k + 1];
    if (a.cols != b.rows) throw std::invalid_argument("differentials are not conformable");
    std::map<std::pair<int, int>, IntPolynomial> product;
    for (const MonoEntry& eb : b.entries)
      for (const MonoEntry& ea : a.entries)
        if (ea.col == eb.row)
          product[{ea.row, eb.col}].add_term(sum(ea.exponent, eb.exponent),
                                             static_cast<long long>(ea.sign) * eb.sign);
    for (const auto& [pos, poly] : product)
      if (!poly.is_zero()) return false;
  }
  return true;
}

/// Minimality: no entry is a nonzero constant.
inline bool check_minimal(const std::vector<SparseMonoMatrix>& mats) {
  for (const SparseMonoMatrix& m : mats)
    for (const MonoEntry& e : m.entries)
      if (is_zero(e.exponent)) return false;
  return true;
}

namespace detail {

inline std::vector<std::vector<BigInt>> evaluate(const SparseMonoMatrix& m,
                                                 const std::vector<int>& point) {
  std::vector<std::vector<BigInt>> a(m.rows, std::vector<BigInt>(m.cols, 0));
  for (const MonoEntry& e : m.entries) {
    BigInt v = e.sign;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (int p = 0; p < e.exponent[i]; ++p) v *= point[i];
    a[e.row][e.col] += v;
  }
  return a;
}

/// Deterministic bounded sampler; std::uniform_int_distribution is not
/// portable across standard libraries, so draw by rejection instead.
inline int bounded(std::mt19937_64& rng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = (~0ULL / span) * span;
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return lo + static_cast<int>(v % span);
}

}  // namespace detail

/// Rank test for exactness away from the origin: at a random point with
/// all coordinates in [2, 97], rank phi_1 = 1 and consecutive ranks fill
/// each module, with rank phi_{K+1} = 0 past the end. Retries with a fresh
/// point up to three times in case the point was unlucky.
inline bool check_generic_exactness(const std::vector<SparseMonoMatrix>& mats,
                                    std::uint64_t seed = 0x5ca4f) {
  if (mats.empty()) throw std::invalid_argument("empty differential chain");
  const std::size_t n = mats[0].entries.empty() ? 0 : mats[0].entries[0].exponent.size();
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<int> point(n);
    for (auto& p : point) p = detail::bounded(rng, 2, 97);
    std::vector<int> rank(mats.size());
    for (std::size_t k = 0; k < mats.size(); ++k)
      rank[k] = exact_rank(detail::evaluate(mats[k], point));
    bool ok = rank[0] == 1;
    for (std::size_t k = 0; ok && k < mats.size(); ++k) {
      const int next = k + 1 < mats.size() ? rank[k + 1] : 0;
      if (rank[k] + next != mats[k].cols) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace scarf
