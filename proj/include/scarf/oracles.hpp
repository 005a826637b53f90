#pragma once

#include <map>
#include <set>

#include "scarf/monomial_ideal.hpp"

// Brute-force reference implementations, deliberately kept independent of
// the production modules: nothing here is shared with staircase.hpp or
// scarf_complex.hpp beyond the core exponent/ideal types.

namespace scarf::oracle {

/// All subsets of generators whose join is achieved by exactly one subset,
/// found by enumerating the full power set. Subsets returned sorted.
inline std::set<std::vector<int>> oracle_scarf(const MonomialIdeal& m) {
  const int r = static_cast<int>(m.gens.size());
  if (r > 20) throw std::invalid_argument("oracle_scarf limited to 20 generators");
  std::map<ExponentVector, std::vector<std::uint32_t>> by_join;
  for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
    ExponentVector l(m.n, 0);
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) l = join(l, m.gens[i]);
    by_join[l].push_back(mask);
  }
  std::set<std::vector<int>> faces;
  for (const auto& [l, masks] : by_join) {
    if (masks.size() != 1) continue;
    std::vector<int> verts;
    for (int i = 0; i < r; ++i)
      if (masks[0] & (1u << i)) verts.push_back(i);
    faces.insert(std::move(verts));
  }
  return faces;
}

namespace detail {

template <typename F>
void scan(const ExponentVector& box_inclusive, F&& f) {
  checked_box_points(box_inclusive);
  ExponentVector p(box_inclusive.size(), 0);
  while (true) {
    f(p);
    std::size_t i = 0;
    for (; i < p.size(); ++i) {
      if (p[i] < box_inclusive[i]) { ++p[i]; break; }
      p[i] = 0;
    }
    if (i == p.size()) return;
  }
}

inline ExponentVector scan_box(const MonomialIdeal& m) {
  ExponentVector box(m.n, 0);
  for (const auto& g : m.gens)
    for (int i = 0; i < m.n; ++i) box[i] = std::max(box[i], g[i]);
  return box;
}

}  // namespace detail

/// Lattice count of standard monomials.
inline long long oracle_colength(const MonomialIdeal& m) {
  require_artinian(m, "oracle_colength");
  long long count = 0;
  detail::scan(detail::scan_box(m), [&](const ExponentVector& p) {
    if (!contains(m, p)) ++count;
  });
  return count;
}

/// Maximal standard exponents, shifted by one: alpha with x^(alpha-1)
/// standard and every x^(alpha-1+e_i) in M.
inline std::set<ExponentVector> oracle_outer_corners(const MonomialIdeal& m) {
  require_artinian(m, "oracle_outer_corners");
  std::set<ExponentVector> corners;
  detail::scan(detail::scan_box(m), [&](const ExponentVector& p) {
    if (contains(m, p)) return;
    ExponentVector q = p;
    for (int i = 0; i < m.n; ++i) {
      ++q[i];
      const bool inside = contains(m, q);
      --q[i];
      if (!inside) return;
    }
    ExponentVector alpha = p;
    for (int& e : alpha) ++e;
    corners.insert(std::move(alpha));
  });
  return corners;
}

/// Assigns each standard cell (a, a+1] to the >_sigma-first outer corner
/// whose box contains it; scans corners by linear search each time.
inline std::map<ExponentVector, std::set<ExponentVector>> oracle_partition(
    const MonomialIdeal& m, const Permutation& sigma) {
  require_permutation(sigma, m.n);
  const std::set<ExponentVector> corners = oracle_outer_corners(m);
  std::map<ExponentVector, std::set<ExponentVector>> parts;
  for (const auto& c : corners) parts[c];
  detail::scan(detail::scan_box(m), [&](const ExponentVector& p) {
    if (contains(m, p)) return;
    ExponentVector upper = p;
    for (int& e : upper) ++e;
    const ExponentVector* best = nullptr;
    for (const auto& c : corners) {
      if (!divides(upper, c)) continue;
      if (!best || sigma_greater(c, *best, sigma)) best = &c;
    }
    if (best) parts[*best].insert(p);
  });
  return parts;
}

}  // namespace scarf::oracle
