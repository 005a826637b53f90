#pragma once

#include <optional>

#include "scarf/exponent_vector.hpp"

namespace scarf {

/// Artinian-capable monomial ideal, stored as its canonical minimal
/// generating set sorted lexicographically ascending. Every downstream
/// index (Scarf face vertices, module bases) refers to this order.
struct MonomialIdeal {
  int n = 0;
  std::vector<ExponentVector> gens;

  bool operator==(const MonomialIdeal& other) const = default;
};

/// Canonical minimal generating set: drops every generator divisible by
/// another, deduplicates, sorts.
inline MonomialIdeal minimalize(const std::vector<ExponentVector>& gens) {
  if (gens.empty()) throw std::invalid_argument("empty generator set");
  const std::size_t n = gens[0].size();
  if (n == 0) throw std::invalid_argument("ambient dimension must be at least 1");
  for (const auto& g : gens) {
    require_same_dim(gens[0], g);
    for (int e : g)
      if (e < 0) throw std::invalid_argument("negative exponent in generator");
  }
  std::vector<ExponentVector> sorted = gens;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  MonomialIdeal m;
  m.n = static_cast<int>(n);
  for (const auto& g : sorted) {
    bool dominated = false;
    for (const auto& h : sorted) {
      if (h != g && divides(h, g)) { dominated = true; break; }
    }
    if (!dominated) m.gens.push_back(g);
  }
  return m;
}

/// Membership x^a ∈ M: some generator divides a.
inline bool contains(const MonomialIdeal& m, const ExponentVector& a) {
  if (static_cast<int>(a.size()) != m.n)
    throw std::invalid_argument("dimension mismatch in membership test");
  for (const auto& g : m.gens)
    if (divides(g, a)) return true;
  return false;
}

inline bool is_pure_power(const ExponentVector& g, int variable) {
  if (g[variable] <= 0) return false;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (static_cast<int>(i) != variable && g[i] != 0) return false;
  return true;
}

/// Artinian iff each coordinate has a pure-power generator.
inline bool is_artinian(const MonomialIdeal& m) {
  for (int i = 0; i < m.n; ++i) {
    bool found = false;
    for (const auto& g : m.gens)
      if (is_pure_power(g, i)) { found = true; break; }
    if (!found) return false;
  }
  return true;
}

inline void require_artinian(const MonomialIdeal& m, const char* what) {
  if (!is_artinian(m))
    throw std::invalid_argument(std::string(what) + " requires an Artinian ideal "
                                "(a pure power of every variable)");
}

/// A pair of generators m_i, m_j with the same positive degree in
/// `variable` such that no third generator strictly divides lcm(m_i, m_j).
struct GenericityWitness {
  int i = 0;
  int j = 0;
  int variable = 0;
};

inline std::optional<GenericityWitness> genericity_violation(const MonomialIdeal& m) {
  const int r = static_cast<int>(m.gens.size());
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      int shared = -1;
      for (int l = 0; l < m.n; ++l)
        if (m.gens[i][l] > 0 && m.gens[i][l] == m.gens[j][l]) { shared = l; break; }
      if (shared < 0) continue;
      const ExponentVector lcm = join(m.gens[i], m.gens[j]);
      bool rescued = false;
      for (int k = 0; k < r && !rescued; ++k)
        if (k != i && k != j && strictly_divides(m.gens[k], lcm)) rescued = true;
      if (!rescued) return GenericityWitness{i, j, shared};
    }
  }
  return std::nullopt;
}

inline bool is_generic(const MonomialIdeal& m) { return !genericity_violation(m); }

inline void require_generic(const MonomialIdeal& m, const char* what) {
  if (auto w = genericity_violation(m))
    throw std::invalid_argument(std::string(what) + " requires a generic ideal; generators " +
                                std::to_string(w->i) + " and " + std::to_string(w->j) +
                                " share their positive degree in variable x" +
                                std::to_string(w->variable + 1));
}

/// Componentwise maximum of the generators.
inline ExponentVector bounding_box(const MonomialIdeal& m) {
  ExponentVector box(m.n, 0);
  for (const auto& g : m.gens) box = join(box, g);
  return box;
}

}  // namespace scarf
