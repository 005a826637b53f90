#pragma once

#include "scarf/resolution.hpp"
#include "scarf/staircase.hpp"

namespace scarf {

/// Entrywise partial derivative of a signed-monomial matrix:
/// s * x^g  |->  s * g_j * x^(g - e_j), zero when g_j = 0.
inline std::vector<std::vector<IntPolynomial>> derivative_matrix(const SparseMonoMatrix& m,
                                                                 int j) {
  std::vector<std::vector<IntPolynomial>> out(m.rows, std::vector<IntPolynomial>(m.cols));
  for (const MonoEntry& e : m.entries) {
    if (e.exponent[j] == 0) continue;
    ExponentVector d = e.exponent;
    --d[j];
    out[e.row][e.col].add_term(d, static_cast<long long>(e.sign) * e.exponent[j]);
  }
  return out;
}

/// Sign rewriting dx_{sigma(1)} ∧ ... ∧ dx_{sigma(n)} in the reference
/// basis dx_n ∧ ... ∧ dx_1: sgn(sigma) * (-1)^(n(n-1)/2).
inline int orientation_sign_of(const Permutation& sigma) {
  const int n = static_cast<int>(sigma.size());
  const int reversal = (n * (n - 1) / 2) % 2 == 0 ? 1 : -1;
  return perm_sign(sigma) * reversal;
}

/// d_sigma phi as a vector over the top-cell basis. `coeffs` are stated in
/// the reference basis dx_n ∧ ... ∧ dx_1, i.e. the raw matrix product of
/// the differentiated differentials already multiplied by orientation_sign.
struct DerivativeForm {
  Permutation sigma;
  std::vector<IntPolynomial> coeffs;
  int orientation_sign = 1;
};

/// Row-propagated product (d phi_1/dx_sigma(1)) ... (d phi_n/dx_sigma(n)).
/// The chain must have length n, the resolution length of an Artinian
/// quotient.
inline DerivativeForm d_sigma_phi(const std::vector<SparseMonoMatrix>& mats,
                                  const Permutation& sigma) {
  const std::size_t n = sigma.size();
  require_permutation(sigma, n);
  if (mats.size() != n)
    throw std::invalid_argument("derivative form needs a length-n chain of differentials "
                                "(non-Artinian or truncated complex?)");
  if (mats[0].rows != 1) throw std::invalid_argument("phi_1 must have a rank-one target");
  std::vector<IntPolynomial> row(1, monomial(1, ExponentVector(n, 0)));
  for (std::size_t k = 0; k < n; ++k) {
    const int j = sigma[k];
    std::vector<IntPolynomial> next(mats[k].cols);
    for (const MonoEntry& e : mats[k].entries) {
      if (e.exponent[j] == 0 || row[e.row].is_zero()) continue;
      ExponentVector d = e.exponent;
      --d[j];
      next[e.col] = next[e.col] +
                    shift_scale(row[e.row], static_cast<long long>(e.sign) * e.exponent[j], d);
    }
    row = std::move(next);
  }
  DerivativeForm form;
  form.sigma = sigma;
  form.orientation_sign = orientation_sign_of(sigma);
  form.coeffs.reserve(row.size());
  for (IntPolynomial& p : row) form.coeffs.push_back(scale(p, form.orientation_sign));
  return form;
}

inline ExponentVector shift_down_one(const ExponentVector& alpha) {
  ExponentVector b = alpha;
  for (int& e : b) {
    if (e <= 0) throw std::invalid_argument("corner must be strictly positive");
    --e;
  }
  return b;
}

/// The coefficient vector the staircase geometry predicts for the Scarf
/// resolution: sgn(eta) * Vol(S_{sigma,alpha}) * x^(alpha-1) on the top
/// face labeled alpha, with volumes from the cuboid description.
inline DerivativeForm signed_volume_form(const MonomialIdeal& m, const Permutation& sigma) {
  require_artinian(m, "signed_volume_form");
  require_generic(m, "signed_volume_form");
  require_permutation(sigma, m.n);
  const ScarfComplex delta = build_scarf(m);
  DerivativeForm form;
  form.sigma = sigma;
  form.orientation_sign = orientation_sign_of(sigma);
  for (const ScarfFace& face : delta.top_faces()) {
    const long long vol = volume(partition_cuboid(m, sigma, face));
    form.coeffs.push_back(
        monomial(eta(m, face).sign * vol, shift_down_one(face.label)));
  }
  return form;
}

struct FaceComparison {
  ExponentVector label;
  int cell_sign = 1;
  IntPolynomial computed;
  IntPolynomial predicted;
  bool match = false;
};

struct VolumeFormulaReport {
  Permutation sigma;
  std::vector<FaceComparison> faces;
  bool all_match = true;
};

/// Compare d_sigma phi of an arbitrary labeled-complex resolution against
/// signed brute-force partition volumes. Top cells whose label is an outer
/// corner should carry sign * Vol(S_{sigma,alpha}) * x^(alpha-1); cells
/// labeled elsewhere should vanish.
inline VolumeFormulaReport compare_volume_formula_general(const LabeledComplex& x, const Permutation& sigma) {
  const MonomialIdeal m = complex_ideal(x);
  VolumeFormulaReport report;
  report.sigma = sigma;
  const DerivativeForm form = d_sigma_phi(differentials(x), sigma);
  std::map<ExponentVector, long long> vols;
  for (const PartitionPiece& piece : partition_bruteforce(m, sigma))
    vols[piece.corner] = volume(piece.cells);
  const auto& tops = x.cells.back();
  for (std::size_t t = 0; t < tops.size(); ++t) {
    FaceComparison cmp;
    cmp.label = tops[t].label;
    cmp.cell_sign = tops[t].sign;
    cmp.computed = form.coeffs[t];
    const auto it = vols.find(tops[t].label);
    if (it != vols.end())
      cmp.predicted = monomial(tops[t].sign * it->second, shift_down_one(tops[t].label));
    cmp.match = cmp.computed == cmp.predicted;
    report.all_match = report.all_match && cmp.match;
    report.faces.push_back(std::move(cmp));
  }
  return report;
}

/// Scarf-resolution comparison: the computed product against the cuboid
/// prediction, face by face.
inline VolumeFormulaReport compare_volume_formula(const MonomialIdeal& m, const Permutation& sigma) {
  const ScarfComplex delta = build_scarf(m);
  const LabeledComplex x = scarf_to_complex(delta);
  const DerivativeForm computed = d_sigma_phi(differentials(x), sigma);
  const DerivativeForm predicted = signed_volume_form(m, sigma);
  VolumeFormulaReport report;
  report.sigma = sigma;
  for (std::size_t t = 0; t < computed.coeffs.size(); ++t) {
    FaceComparison cmp;
    cmp.label = delta.top_faces()[t].label;
    cmp.cell_sign = x.cells.back()[t].sign;
    cmp.computed = computed.coeffs[t];
    cmp.predicted = predicted.coeffs[t];
    cmp.match = cmp.computed == cmp.predicted;
    report.all_match = report.all_match && cmp.match;
    report.faces.push_back(std::move(cmp));
  }
  return report;
}

struct ResidualTerm {
  int cell = 0;
  ExponentVector exponent;
  long long coefficient = 0;
};

struct PairingResult {
  long long value = 0;
  std::vector<ResidualTerm> residual;
};

/// Combinatorial shadow of pairing the form with the residue current: per
/// top cell with label alpha, terms x^b with b_i >= alpha_i for some i are
/// annihilated, the x^(alpha-1) coefficient contributes with the cell's
/// orientation sign, and anything else below alpha-1 survives into the
/// residual report.
inline PairingResult pairing_multiplicity(const DerivativeForm& form, const LabeledComplex& x) {
  const auto& tops = x.cells.back();
  if (tops.size() != form.coeffs.size())
    throw std::invalid_argument("form and complex have different top ranks");
  PairingResult result;
  for (std::size_t t = 0; t < tops.size(); ++t) {
    const ExponentVector& alpha = tops[t].label;
    const ExponentVector point = shift_down_one(alpha);
    for (const auto& [b, c] : form.coeffs[t].terms) {
      bool annihilated = false;
      for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] >= alpha[i]) { annihilated = true; break; }
      if (annihilated) continue;
      if (b == point)
        result.value += tops[t].sign * c;
      else
        result.residual.push_back(ResidualTerm{static_cast<int>(t), b, c});
    }
  }
  return result;
}

struct SurvivorReport {
  Permutation survivor;
  bool unique_survivor = true;
  bool survivor_matches_entry = true;
  std::vector<std::pair<Permutation, IntPolynomial>> nonzero_terms;
};

/// Expand the top-face entry of d_sigma phi over removal orders tau. Each
/// F_tau is sgn(sigma)sgn(tau) times the product of the differentiated
/// join increments; for a generic ideal only tau = eta ∘ sigma survives,
/// and it reproduces the entry of the matrix product.
inline SurvivorReport survivor_expansion_check(const MonomialIdeal& m, const ScarfComplex& delta,
                                           const Permutation& sigma, int top_face_index) {
  require_generic(m, "survivor_expansion_check");
  require_permutation(sigma, m.n);
  const ScarfFace& face = delta.top_faces()[top_face_index];
  const LabeledComplex x = scarf_to_complex(delta);
  const IntPolynomial entry =
      d_sigma_phi(differentials(x), sigma).coeffs[top_face_index];

  SurvivorReport report;
  report.survivor = compose(eta(m, face).eta, sigma);
  IntPolynomial total;
  for (const Permutation& tau : all_permutations(m.n)) {
    long long c = 1;
    ExponentVector prev(m.n, 0);
    for (int l = 0; l < m.n && c != 0; ++l) {
      const ExponentVector next = join(prev, m.gens[face.vertices[tau[l]]]);
      c *= next[sigma[l]] - prev[sigma[l]];
      prev = next;
    }
    if (c == 0) continue;
    const IntPolynomial f_tau =
        monomial(perm_sign(sigma) * perm_sign(tau) * c, shift_down_one(face.label));
    if (tau != report.survivor) report.unique_survivor = false;
    total = total + f_tau;
    report.nonzero_terms.emplace_back(tau, f_tau);
  }
  report.survivor_matches_entry = total == entry;
  return report;
}

struct FactorizationReport {
  std::vector<std::pair<Permutation, long long>> pairings;
  long long total = 0;
  long long expected = 0;
  bool ok = false;
};

/// Summing the pairing over all n! permutations recovers n! times the
/// colength.
inline FactorizationReport full_factorization_check(const LabeledComplex& x) {
  const MonomialIdeal m = complex_ideal(x);
  require_artinian(m, "full_factorization_check");
  const std::vector<SparseMonoMatrix> mats = differentials(x);
  FactorizationReport report;
  long long factorial = 1;
  for (int k = 2; k <= m.n; ++k) factorial *= k;
  report.expected = factorial * colength(m);
  for (const Permutation& sigma : all_permutations(m.n)) {
    const long long p = pairing_multiplicity(d_sigma_phi(mats, sigma), x).value;
    report.pairings.emplace_back(sigma, p);
    report.total += p;
  }
  report.ok = report.total == report.expected;
  return report;
}

/// Same check through the Scarf resolution of the ideal itself.
inline FactorizationReport full_factorization_check(const MonomialIdeal& m) {
  return full_factorization_check(scarf_to_complex(build_scarf(m)));
}

}  // namespace scarf
