#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lapdist/polynomial.hpp"

using namespace lapdist;

namespace {

Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::size_t brute_count(const std::vector<Rational>& roots, const Rational& a, const Rational& b) {
  std::size_t c = 0;
  for (const auto& r : roots) c += (r >= a && r <= b) ? 1 : 0;
  return c;
}

}  // namespace

TEST_CASE("basic arithmetic") {
  const IntegerPolynomial p{0, -2, 1};  // x^2 - 2x
  CHECK(p.degree() == 2);
  CHECK(p.is_monic());
  CHECK(p.to_string() == "x^2 - 2*x");
  CHECK(p.derivative() == IntegerPolynomial{-2, 2});
  CHECK(p.evaluate(q(3)) == 3);
  CHECK(p.sign_at(q(1)) == -1);
  CHECK(p.sign_at(q(2)) == 0);
  CHECK(p.sign_at_infinity() == 1);
  CHECK(IntegerPolynomial{}.degree() == -1);
  CHECK(IntegerPolynomial{0, 0, 0}.is_zero());
  CHECK(IntegerPolynomial{1, 1} * IntegerPolynomial{-1, 1} == IntegerPolynomial{-1, 0, 1});
  CHECK(IntegerPolynomial::from_roots({q(0), q(3), q(3)}).to_string() == "x^3 - 6*x^2 + 9*x");
  CHECK(IntegerPolynomial::from_roots({q(1, 2)}) == IntegerPolynomial{-1, 2});
}

TEST_CASE("exact division, reflection and shifting") {
  const IntegerPolynomial p = IntegerPolynomial::from_roots({q(1), q(2, 3), q(-4)});
  auto d = p.divide_by_root(q(2, 3));
  REQUIRE(d.has_value());
  CHECK(*d == IntegerPolynomial::from_roots({q(1), q(-4)}));
  CHECK_FALSE(p.divide_by_root(q(5)).has_value());
  // A non-reduced fraction names the same root.
  Rational unreduced(4, 6);
  CHECK(p.divide_by_root(unreduced).has_value());

  // p(5 - x) has roots 5 - r.
  const IntegerPolynomial r = IntegerPolynomial::from_roots({q(1), q(2), q(7)});
  const IntegerPolynomial mirrored = r.reflect(BigInt(5));
  CHECK(primitive_part(mirrored) == primitive_part(IntegerPolynomial::from_roots({q(4), q(3), q(-2)})));
  CHECK(IntegerPolynomial{0, 0, 3, 1}.shift_down(2) == IntegerPolynomial{3, 1});
  CHECK_THROWS(IntegerPolynomial{1, 0, 3}.shift_down(1));
}

TEST_CASE("gcd and primitive part") {
  const auto a = IntegerPolynomial::from_roots({q(1), q(2), q(2), q(5, 2)});
  const auto b = IntegerPolynomial::from_roots({q(2), q(5, 2), q(-3)});
  CHECK(polynomial_gcd(a, b) == IntegerPolynomial::from_roots({q(2), q(5, 2)}));
  CHECK(primitive_part(IntegerPolynomial{-6, 4, -2}) == IntegerPolynomial{3, -2, 1});
  CHECK(polynomial_gcd(IntegerPolynomial{1, 1}, IntegerPolynomial{-1, 1}).degree() == 0);
}

TEST_CASE("root counting examples") {
  const IntegerPolynomial p{0, -2, 1};
  CHECK(count_roots_geq(p, q(2)) == 1);
  CHECK(multiplicity_at(p, q(0)) == 1);
  CHECK(sturm_count_above(p, q(1)) == 1);
  CHECK_THROWS_AS(sturm_count_above(p, q(2)), std::invalid_argument);
  CHECK_THROWS_AS(count_roots_in(p, q(2), q(1)), std::invalid_argument);
  CHECK_THROWS_AS(count_roots_geq(IntegerPolynomial{}, q(0)), std::invalid_argument);
  // x^2 + 1 has no real roots.
  CHECK(count_roots_geq(IntegerPolynomial{1, 0, 1}, q(-100)) == 0);
  // x^2 - 2: irrational roots on both sides of 0.
  CHECK(count_roots_in(IntegerPolynomial{-2, 0, 1}, q(-2), q(2)) == 2);
  CHECK(count_roots_in(IntegerPolynomial{-2, 0, 1}, q(141, 100), q(142, 100)) == 1);
}

TEST_CASE("root counts agree with the known roots of random products") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> num(-12, 12), den(1, 4), len(1, 9);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Rational> roots;
    const long k = len(rng);
    for (long i = 0; i < k; ++i) roots.push_back(q(num(rng), den(rng)));
    // Repeat some roots to exercise multiplicities.
    if (trial % 3 == 0) roots.push_back(roots.front());
    if (trial % 5 == 0) roots.push_back(roots.back());
    IntegerPolynomial p = IntegerPolynomial::from_roots(roots);
    // An irreducible quadratic factor adds no real roots.
    if (trial % 2 == 0) p = p * IntegerPolynomial{3, 1, 1};
    if (trial % 7 == 0) p = -p;

    for (int probe = 0; probe < 6; ++probe) {
      Rational a = q(num(rng), den(rng));
      Rational b = q(num(rng), den(rng));
      if (a > b) std::swap(a, b);
      if (probe == 0) a = roots.front();
      if (probe == 1) b = roots.back();
      if (a > b) std::swap(a, b);
      CHECK(count_roots_in(p, a, b) == brute_count(roots, a, b));
      std::size_t geq = 0, mult = 0;
      for (const auto& r : roots) {
        geq += r >= a ? 1 : 0;
        mult += r == a ? 1 : 0;
      }
      CHECK(count_roots_geq(p, a) == geq);
      CHECK(multiplicity_at(p, a) == mult);
    }
  }
}
