#pragma once

#include <random>

#include "scarf/monomial_ideal.hpp"

namespace scarf {

/// Deterministic bounded draw; avoids std::uniform_int_distribution, whose
/// output differs between standard libraries.
inline int draw(std::mt19937_64& rng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = (~0ULL / span) * span;
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return lo + static_cast<int>(v % span);
}

/// Random Artinian generic ideal: one pure power per variable plus extra
/// generators whose positive degrees are pairwise distinct in every
/// variable, then minimalized. Distinct positive degrees are a sufficient
/// condition for genericity, so the result is generic by construction.
/// Extras stay strictly below the pure powers and touch at least two
/// variables, so they survive minimalization against the pure powers.
inline MonomialIdeal random_generic_ideal(std::mt19937_64& rng, int n, int max_exp = 6,
                                          int max_gens = 10) {
  std::vector<std::vector<bool>> used(n, std::vector<bool>(max_exp + 1, false));
  std::vector<ExponentVector> gens;
  ExponentVector pure(n);
  for (int i = 0; i < n; ++i) {
    pure[i] = draw(rng, std::min(2, max_exp), max_exp);
    used[i][pure[i]] = true;
    ExponentVector g(n, 0);
    g[i] = pure[i];
    gens.push_back(std::move(g));
  }
  const int extras = draw(rng, 0, std::max(0, max_gens - n));
  for (int e = 0; e < extras; ++e) {
    ExponentVector g(n, 0);
    int positive = 0;
    for (int i = 0; i < n; ++i) {
      if (draw(rng, 0, 3) == 0) continue;
      std::vector<int> free_degrees;
      for (int d = 1; d < pure[i]; ++d)
        if (!used[i][d]) free_degrees.push_back(d);
      if (free_degrees.empty()) continue;
      g[i] = free_degrees[draw(rng, 0, static_cast<int>(free_degrees.size()) - 1)];
      ++positive;
    }
    if (positive < 2) continue;
    for (int i = 0; i < n; ++i)
      if (g[i] > 0) used[i][g[i]] = true;
    gens.push_back(std::move(g));
  }
  return minimalize(gens);
}

}  // namespace scarf
