#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace scarf {

/// Exponent vector of a monomial: a point of N^n. The built-in vector
/// comparison is plain lexicographic order, which fixes every canonical
/// sort in this library (generator order, face order, term order).
using ExponentVector = std::vector<int>;

/// Permutation of {0,...,n-1}. sigma[l] is the coordinate queried at
/// level l of a lexicographic sweep, or the variable differentiated at
/// step l of a derivative form.
using Permutation = std::vector<int>;

inline void require_same_dim(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()));
}

/// Componentwise maximum a ∨ b, the exponent of lcm(x^a, x^b).
inline ExponentVector join(const ExponentVector& a, const ExponentVector& b) {
  require_same_dim(a, b);
  ExponentVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
  return c;
}

/// x^a divides x^b.
inline bool divides(const ExponentVector& a, const ExponentVector& b) {
  require_same_dim(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// x^c strictly divides x^m: c_l < m_l wherever m_l > 0, and c_l = 0
/// wherever m_l = 0 (so in particular c divides m).
inline bool strictly_divides(const ExponentVector& c, const ExponentVector& m) {
  require_same_dim(c, m);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (m[i] > 0 ? c[i] >= m[i] : c[i] != 0) return false;
  }
  return true;
}

inline bool is_zero(const ExponentVector& a) {
  return std::all_of(a.begin(), a.end(), [](int e) { return e == 0; });
}

/// Exponent of x^a / x^b; throws if the quotient is not a monomial.
inline ExponentVector quotient(const ExponentVector& a, const ExponentVector& b) {
  require_same_dim(a, b);
  ExponentVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    c[i] = a[i] - b[i];
    if (c[i] < 0) throw std::invalid_argument("monomial quotient has negative exponent");
  }
  return c;
}

inline ExponentVector sum(const ExponentVector& a, const ExponentVector& b) {
  require_same_dim(a, b);
  ExponentVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

// -- permutations -----------------------------------------------------------

inline bool is_permutation_of_n(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

inline void require_permutation(const Permutation& p, std::size_t n) {
  if (p.size() != n || !is_permutation_of_n(p))
    throw std::invalid_argument("not a permutation of {1,...," + std::to_string(n) + "}");
}

inline Permutation identity_perm(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

/// Sign of a permutation by inversion count.
inline int perm_sign(const Permutation& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

/// (p ∘ q)[l] = p[q[l]].
inline Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(q.size());
  for (std::size_t l = 0; l < q.size(); ++l) r[l] = p[q[l]];
  return r;
}

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation p = identity_perm(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// a >_sigma b: at the first level l with a[sigma[l]] != b[sigma[l]] the
/// entry of a is larger.
inline bool sigma_greater(const ExponentVector& a, const ExponentVector& b,
                          const Permutation& sigma) {
  for (int c : sigma) {
    if (a[c] != b[c]) return a[c] > b[c];
  }
  return false;
}

// -- lattice scan budget ----------------------------------------------------

/// Cap on brute-force lattice scans, in cells; override with SCARF_MAX_BOX.
inline long long lattice_budget() {
  static const long long budget = [] {
    if (const char* s = std::getenv("SCARF_MAX_BOX")) {
      long long v = std::atoll(s);
      if (v > 0) return v;
    }
    return 10'000'000LL;
  }();
  return budget;
}

/// Number of lattice points in [0, box] (inclusive); throws if it exceeds
/// the scan budget.
inline long long checked_box_points(const ExponentVector& box) {
  long long cells = 1;
  for (int b : box) {
    if (b < 0) throw std::invalid_argument("negative box bound");
    cells *= static_cast<long long>(b) + 1;
    if (cells > lattice_budget())
      throw std::runtime_error("lattice scan exceeds SCARF_MAX_BOX budget");
  }
  return cells;
}

}  // namespace scarf
