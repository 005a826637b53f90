#pragma once

#include <set>
#include <utility>

#include "scarf/scarf_complex.hpp"

namespace scarf {

/// Region of the staircase on the unit-cell lattice: each element a stands
/// for the half-open cell (a, a+1].
using CellSet = std::set<ExponentVector>;

/// Axis-aligned box with per-axis half-open integer intervals (lo, hi].
struct Cuboid {
  std::vector<std::pair<int, int>> intervals;

  bool operator==(const Cuboid& other) const = default;
};

namespace detail {

template <typename F>
void for_each_lattice_point(const ExponentVector& box_inclusive, F&& f) {
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

}  // namespace detail

/// Exponents of the standard monomials (those outside M); these are the
/// unit cells of the staircase.
inline std::vector<ExponentVector> standard_exponents(const MonomialIdeal& m) {
  require_artinian(m, "standard_exponents");
  ExponentVector box = bounding_box(m);
  for (int& b : box) b = b > 0 ? b - 1 : 0;
  std::vector<ExponentVector> out;
  detail::for_each_lattice_point(box, [&](const ExponentVector& p) {
    if (!contains(m, p)) out.push_back(p);
  });
  return out;
}

/// Number of standard monomials = Vol(S).
inline long long colength(const MonomialIdeal& m) {
  require_artinian(m, "colength");
  return static_cast<long long>(standard_exponents(m).size());
}

/// Exponents of the minimal irreducible decomposition: alpha is an outer
/// corner iff x^(alpha-1) is standard and stepping up any coordinate lands
/// in M.
inline std::vector<ExponentVector> outer_corners(const MonomialIdeal& m) {
  require_artinian(m, "outer_corners");
  std::vector<ExponentVector> corners;
  for (const ExponentVector& a : standard_exponents(m)) {
    bool maximal = true;
    ExponentVector step = a;
    for (int i = 0; i < m.n && maximal; ++i) {
      ++step[i];
      if (!contains(m, step)) maximal = false;
      --step[i];
    }
    if (maximal) {
      ExponentVector alpha = a;
      for (int& e : alpha) ++e;
      corners.push_back(std::move(alpha));
    }
  }
  std::sort(corners.begin(), corners.end());
  return corners;
}

struct Staircase {
  MonomialIdeal ideal;
  std::vector<ExponentVector> inner_corners;
  std::vector<ExponentVector> outer_corners;
  ExponentVector box;
};

inline Staircase make_staircase(const MonomialIdeal& m) {
  return Staircase{m, m.gens, outer_corners(m), bounding_box(m)};
}

/// Corners sorted descending by >_sigma. Ties cannot occur on distinct
/// vectors since >_sigma is total.
inline std::vector<ExponentVector> lex_order(std::vector<ExponentVector> corners,
                                             const Permutation& sigma) {
  if (!corners.empty()) require_permutation(sigma, corners.front().size());
  std::stable_sort(corners.begin(), corners.end(),
                   [&](const ExponentVector& a, const ExponentVector& b) {
                     return sigma_greater(a, b, sigma);
                   });
  return corners;
}

struct PartitionPiece {
  ExponentVector corner;
  CellSet cells;
};

/// Greedy sweep mirroring the inductive definition of S_{sigma,alpha}:
/// corners are taken in descending >_sigma order and each staircase cell
/// (a, a+1] goes to the first corner with a+1 <= alpha.
inline std::vector<PartitionPiece> partition_bruteforce(const MonomialIdeal& m,
                                                        const Permutation& sigma) {
  require_permutation(sigma, m.n);
  std::vector<PartitionPiece> pieces;
  for (const auto& corner : lex_order(outer_corners(m), sigma))
    pieces.push_back(PartitionPiece{corner, {}});
  for (const ExponentVector& a : standard_exponents(m)) {
    ExponentVector upper = a;
    for (int& e : upper) ++e;
    for (auto& piece : pieces) {
      if (divides(upper, piece.corner)) {
        piece.cells.insert(a);
        break;
      }
    }
  }
  return pieces;
}

/// Cuboid description of S_{sigma,alpha} for a generic ideal: with
/// tau = eta ∘ sigma, side l lives on axis sigma(l) and runs over
/// (join of the first l-1 tau-vertices, join of the first l]_{sigma(l)}.
inline Cuboid partition_cuboid(const MonomialIdeal& m, const Permutation& sigma,
                               const ScarfFace& top_face) {
  require_permutation(sigma, m.n);
  require_generic(m, "partition_cuboid");
  if (top_face.vertices.size() != static_cast<std::size_t>(m.n))
    throw std::invalid_argument("partition_cuboid requires a top-dimensional face");
  const Permutation tau = compose(eta(m, top_face).eta, sigma);
  Cuboid cuboid;
  cuboid.intervals.assign(m.n, {0, 0});
  ExponentVector lo(m.n, 0);
  for (int l = 0; l < m.n; ++l) {
    const ExponentVector hi = join(lo, m.gens[top_face.vertices[tau[l]]]);
    cuboid.intervals[sigma[l]] = {lo[sigma[l]], hi[sigma[l]]};
    lo = hi;
  }
  for (auto [a, b] : cuboid.intervals) {
    if (!(0 <= a && a < b))
      throw std::invalid_argument("degenerate cuboid side (ideal is not generic?)");
  }
  return cuboid;
}

inline long long volume(const Cuboid& c) {
  long long v = 1;
  for (auto [lo, hi] : c.intervals) v *= hi - lo;
  return v;
}

inline long long volume(const CellSet& cells) { return static_cast<long long>(cells.size()); }

inline CellSet cells_of(const Cuboid& c) {
  ExponentVector box(c.intervals.size());
  for (std::size_t i = 0; i < c.intervals.size(); ++i)
    box[i] = c.intervals[i].second - c.intervals[i].first - 1;
  CellSet cells;
  detail::for_each_lattice_point(box, [&](const ExponentVector& p) {
    ExponentVector a(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) a[i] = c.intervals[i].first + p[i];
    cells.insert(std::move(a));
  });
  return cells;
}

/// True if the cells fill their own bounding box exactly.
inline bool is_box(const CellSet& cells) {
  if (cells.empty()) return false;
  ExponentVector lo = *cells.begin(), hi = *cells.begin();
  for (const auto& a : cells) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      lo[i] = std::min(lo[i], a[i]);
      hi[i] = std::max(hi[i], a[i]);
    }
  }
  long long boxcells = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) boxcells *= hi[i] - lo[i] + 1;
  return boxcells == static_cast<long long>(cells.size());
}

}  // namespace scarf
