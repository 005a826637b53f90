#pragma once

#include <string>

#include "scarf/monomial_ideal.hpp"

namespace scarf {

/// Grammar:  list := monomial (',' monomial)*
///           monomial := factor ('*' factor)*
///           factor := 'x' INT ('^' INT)?
/// Dimension is the highest variable index; zero exponents are rejected.
/// Errors carry the character position.
inline MonomialIdeal parse_ideal(const std::string& text) {
  struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_space() {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    [[noreturn]] void fail(const std::string& what) const {
      throw std::invalid_argument("ideal parse error at position " + std::to_string(pos) +
                                  ": " + what);
    }
    long long integer() {
      skip_space();
      if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
        fail("expected an integer");
      long long v = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        v = v * 10 + (s[pos] - '0');
        if (v > 1'000'000) fail("integer too large");
        ++pos;
      }
      return v;
    }
    bool accept(char c) {
      skip_space();
      if (pos < s.size() && s[pos] == c) { ++pos; return true; }
      return false;
    }
  };

  Cursor in{text};
  // (variable index, exponent) factors per monomial; dimension known only
  // at the end, so exponent vectors are assembled afterwards.
  std::vector<std::vector<std::pair<int, int>>> monomials;
  int max_var = 0;
  do {
    std::vector<std::pair<int, int>> factors;
    do {
      in.skip_space();
      if (!in.accept('x')) in.fail("expected a variable like x1");
      const long long var = in.integer();
      if (var < 1) in.fail("variable index must be at least 1");
      long long exp = 1;
      if (in.accept('^')) {
        exp = in.integer();
        if (exp == 0) in.fail("zero exponent is not allowed");
      }
      factors.emplace_back(static_cast<int>(var), static_cast<int>(exp));
      max_var = std::max(max_var, static_cast<int>(var));
    } while (in.accept('*'));
    monomials.push_back(std::move(factors));
  } while (in.accept(','));
  in.skip_space();
  if (in.pos != text.size()) in.fail("unexpected trailing input");

  std::vector<ExponentVector> gens;
  for (const auto& factors : monomials) {
    ExponentVector g(max_var, 0);
    for (auto [var, exp] : factors) g[var - 1] += exp;
    gens.push_back(std::move(g));
  }
  return minimalize(gens);
}

inline std::string format_generator(const ExponentVector& g) {
  std::string out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (g[i] > 1) out += "^" + std::to_string(g[i]);
  }
  return out.empty() ? "1" : out;
}

inline std::string format_ideal(const MonomialIdeal& m) {
  std::string out;
  for (const auto& g : m.gens) {
    if (!out.empty()) out += ", ";
    out += format_generator(g);
  }
  return out;
}

}  // namespace scarf
