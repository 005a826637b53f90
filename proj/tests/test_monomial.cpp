#include <catch2/catch_amalgamated.hpp>

#include "scarf/monomial_ideal.hpp"
#include "scarf/parse.hpp"
#include "scarf/random_ideal.hpp"

using namespace scarf;

namespace {

ExponentVector random_vector(std::mt19937_64& rng, int n, int max_exp) {
  ExponentVector v(n);
  for (int& e : v) e = draw(rng, 0, max_exp);
  return v;
}

const char* kGeneric = "x1^3, x1^2*x2, x1*x2^2*x3^2, x2^4, x2^3*x3, x3^3";

}  // namespace

TEST_CASE("join basics") {
  CHECK(join({2, 1, 0}, {1, 2, 2}) == ExponentVector{2, 2, 2});
  CHECK(join({3, 0, 0}, {0, 0, 3}) == ExponentVector{3, 0, 3});
  const ExponentVector a{4, 0, 7};
  CHECK(join(a, a) == a);
  CHECK_THROWS_AS(join({1, 2}, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("join is associative, commutative, idempotent on random vectors") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = draw(rng, 1, 5);
    const auto a = random_vector(rng, n, 9);
    const auto b = random_vector(rng, n, 9);
    const auto c = random_vector(rng, n, 9);
    CHECK(join(a, b) == join(b, a));
    CHECK(join(join(a, b), c) == join(a, join(b, c)));
    CHECK(join(a, a) == a);
    CHECK(divides(a, join(a, b)));
  }
}

TEST_CASE("divides is a partial order") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = draw(rng, 1, 4);
    const auto a = random_vector(rng, n, 5);
    const auto b = random_vector(rng, n, 5);
    const auto c = random_vector(rng, n, 5);
    CHECK(divides(a, a));
    if (divides(a, b) && divides(b, a)) CHECK(a == b);
    if (divides(a, b) && divides(b, c)) CHECK(divides(a, c));
  }
}

TEST_CASE("strict divisibility") {
  CHECK(strictly_divides({1, 1, 0}, {2, 2, 0}));
  CHECK_FALSE(strictly_divides({1, 1, 1}, {2, 2, 0}));
  CHECK(strictly_divides({0, 0, 0}, {1, 5, 0}));
  CHECK_FALSE(strictly_divides({2, 0}, {2, 1}));
}

TEST_CASE("no generator strictly divides x1*x2*x3 for the non-generic example") {
  const MonomialIdeal m = parse_ideal("x1^2, x1*x2, x1*x3, x2^2, x3^2");
  const ExponentVector lcm{1, 1, 1};
  for (const auto& g : m.gens) CHECK_FALSE(strictly_divides(g, lcm));
}

TEST_CASE("minimalize") {
  const MonomialIdeal m = minimalize({{2, 0}, {3, 0}, {0, 1}});
  CHECK(m.gens == std::vector<ExponentVector>{{0, 1}, {2, 0}});
  CHECK(minimalize(m.gens) == m);
  CHECK_THROWS_AS(minimalize({}), std::invalid_argument);

  const MonomialIdeal generic = parse_ideal(kGeneric);
  CHECK(generic.gens.size() == 6);
  CHECK(minimalize(generic.gens) == generic);
}

TEST_CASE("minimalize is order independent") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = draw(rng, 1, 4);
    std::vector<ExponentVector> gens;
    const int count = draw(rng, 1, 8);
    for (int i = 0; i < count; ++i) gens.push_back(random_vector(rng, n, 4));
    const MonomialIdeal a = minimalize(gens);
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(minimalize(gens) == a);
    CHECK(minimalize(a.gens) == a);
  }
}

TEST_CASE("membership") {
  const MonomialIdeal generic = parse_ideal(kGeneric);
  CHECK(contains(generic, {1, 2, 2}));
  CHECK_FALSE(contains(generic, {2, 0, 2}));
  ExponentVector all(3, 0);
  for (const auto& g : generic.gens) all = join(all, g);
  CHECK(contains(generic, all));
  CHECK_THROWS_AS(contains(generic, {1, 1}), std::invalid_argument);
}

TEST_CASE("membership agrees with brute force over generators") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = draw(rng, 1, 4);
    const MonomialIdeal m = random_generic_ideal(rng, n);
    const ExponentVector a = random_vector(rng, n, 7);
    bool expected = false;
    for (const auto& g : m.gens) expected = expected || divides(g, a);
    CHECK(contains(m, a) == expected);
  }
}

TEST_CASE("artinian detection") {
  CHECK(is_artinian(parse_ideal(kGeneric)));
  CHECK_FALSE(is_artinian(minimalize({{1, 1}})));
  CHECK(is_artinian(minimalize({{5}})));
}

TEST_CASE("genericity of the running examples") {
  CHECK(is_generic(parse_ideal(kGeneric)));

  // Printed generators of the non-generic 5-generator example: the unique
  // offending pair is (x1*x2, x1*x3), sharing degree one in x1.
  const MonomialIdeal printed = parse_ideal("x1^2, x1*x2, x1*x3, x2^2, x3^2");
  const auto witness = genericity_violation(printed);
  REQUIRE(witness.has_value());
  CHECK(printed.gens[witness->i] == ExponentVector{1, 0, 1});
  CHECK(printed.gens[witness->j] == ExponentVector{1, 1, 0});
  CHECK(witness->variable == 0);

  // Mirror form used by the hull fixture: offending pair (x1*x3, x2*x3).
  const MonomialIdeal mirrored = parse_ideal("x1^2, x2^2, x3^2, x1*x3, x2*x3");
  const auto w2 = genericity_violation(mirrored);
  REQUIRE(w2.has_value());
  CHECK(mirrored.gens[w2->i] == ExponentVector{0, 1, 1});
  CHECK(mirrored.gens[w2->j] == ExponentVector{1, 0, 1});
  CHECK(w2->variable == 2);
}

TEST_CASE("ideals with pairwise distinct positive degrees are generic") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = draw(rng, 2, 4);
    CHECK(is_generic(random_generic_ideal(rng, n)));
  }
}

TEST_CASE("ideal parsing") {
  const MonomialIdeal generic = parse_ideal(kGeneric);
  CHECK(generic.n == 3);
  CHECK(generic.gens == std::vector<ExponentVector>{{0, 0, 3},
                                                  {0, 3, 1},
                                                  {0, 4, 0},
                                                  {1, 2, 2},
                                                  {2, 1, 0},
                                                  {3, 0, 0}});
  const MonomialIdeal one = parse_ideal("x1");
  CHECK(one.n == 1);
  CHECK(one.gens == std::vector<ExponentVector>{{1}});

  CHECK_THROWS_AS(parse_ideal(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_ideal("x1^0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ideal("x0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ideal("x1 + x2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ideal("x1,,x2"), std::invalid_argument);
  CHECK_THROWS_WITH(parse_ideal("x1^"), Catch::Matchers::ContainsSubstring("position"));
}

TEST_CASE("parse of print round-trips") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = draw(rng, 1, 4);
    const MonomialIdeal m = random_generic_ideal(rng, n);
    CHECK(parse_ideal(format_ideal(m)) == m);
  }
}

TEST_CASE("permutation helpers") {
  CHECK(perm_sign({0, 1, 2}) == 1);
  CHECK(perm_sign({1, 0, 2}) == -1);
  CHECK(perm_sign({2, 0, 1}) == 1);
  CHECK(all_permutations(4).size() == 24);
  const Permutation p{2, 0, 1}, q{1, 2, 0};
  const Permutation pq = compose(p, q);
  for (int l = 0; l < 3; ++l) CHECK(pq[l] == p[q[l]]);
  CHECK(sigma_greater({2, 4, 1}, {2, 3, 2}, {1, 2, 0}));
  CHECK_FALSE(sigma_greater({2, 3, 2}, {2, 4, 1}, {1, 2, 0}));
}
