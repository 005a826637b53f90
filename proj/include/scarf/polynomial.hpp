#pragma once

#include <map>
#include <sstream>

#include "scarf/exponent_vector.hpp"

namespace scarf {

/// Exact multivariate polynomial with 64-bit integer coefficients; terms
/// keyed by exponent vector, zero coefficients never stored.
struct IntPolynomial {
  std::map<ExponentVector, long long> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const IntPolynomial& other) const = default;

  long long coeff(const ExponentVector& e) const {
    const auto it = terms.find(e);
    return it == terms.end() ? 0 : it->second;
  }

  void add_term(const ExponentVector& e, long long c) {
    if (c == 0) return;
    const auto [it, inserted] = terms.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
};

inline IntPolynomial monomial(long long c, const ExponentVector& e) {
  IntPolynomial p;
  p.add_term(e, c);
  return p;
}

inline IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r = a;
  for (const auto& [e, c] : b.terms) r.add_term(e, c);
  return r;
}

inline IntPolynomial operator-(const IntPolynomial& a) {
  IntPolynomial r;
  for (const auto& [e, c] : a.terms) r.terms.emplace(e, -c);
  return r;
}

inline IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  return a + (-b);
}

inline IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) r.add_term(sum(ea, eb), ca * cb);
  return r;
}

inline IntPolynomial scale(const IntPolynomial& a, long long c) {
  IntPolynomial r;
  if (c != 0)
    for (const auto& [e, k] : a.terms) r.terms.emplace(e, k * c);
  return r;
}

/// Multiply by c * x^e without building a temporary polynomial.
inline IntPolynomial shift_scale(const IntPolynomial& a, long long c, const ExponentVector& e) {
  IntPolynomial r;
  if (c != 0)
    for (const auto& [ea, ca] : a.terms) r.terms.emplace(sum(ea, e), ca * c);
  return r;
}

/// Partial derivative with respect to variable j.
inline IntPolynomial derivative(const IntPolynomial& a, int j) {
  IntPolynomial r;
  for (const auto& [e, c] : a.terms) {
    if (e[j] == 0) continue;
    ExponentVector d = e;
    --d[j];
    r.add_term(d, c * e[j]);
  }
  return r;
}

inline std::string format_monomial_part(const ExponentVector& e) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) out << "*";
    out << "x" << i + 1;
    if (e[i] > 1) out << "^" << e[i];
    first = false;
  }
  if (first) out << "1";
  return out.str();
}

inline std::string to_string(const IntPolynomial& p) {
  if (p.terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms) {
    if (!first) out << (c > 0 ? " + " : " - ");
    else if (c < 0) out << "-";
    const long long mag = c > 0 ? c : -c;
    if (mag != 1 || is_zero(e)) {
      out << mag;
      if (!is_zero(e)) out << "*";
    }
    if (!is_zero(e)) out << format_monomial_part(e);
    first = false;
  }
  return out.str();
}

}  // namespace scarf
