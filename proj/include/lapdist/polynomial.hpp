#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lapdist {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Univariate polynomial with arbitrary-precision integer coefficients.
/// coefficient(i) multiplies x^i; trailing zeros are trimmed so the zero
/// polynomial has no coefficients and degree -1.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<BigInt> coefficients);
  IntegerPolynomial(std::initializer_list<long> coefficients);

  /// Product of (den*x - num) over the given roots, with multiplicity.
  static IntegerPolynomial from_roots(const std::vector<Rational>& roots);

  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<BigInt>& coefficients() const noexcept { return c_; }
  BigInt coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  const BigInt& leading() const;
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  IntegerPolynomial derivative() const;
  /// Sign of p(a): -1, 0 or +1.
  int sign_at(const Rational& a) const;
  /// Sign of p(x) for x large.
  int sign_at_infinity() const;
  /// p(x) as a rational (exact).
  Rational evaluate(const Rational& a) const;
  /// p(x) rounded to double, for diagnostics.
  double evaluate(double x) const;

  /// q with p = (den*x - num) * q when a = num/den divides p exactly.
  std::optional<IntegerPolynomial> divide_by_root(const Rational& a) const;
  /// p(c - x).
  IntegerPolynomial reflect(const BigInt& c) const;
  /// p / x^k; throws when the low coefficients are not zero.
  IntegerPolynomial shift_down(std::size_t k) const;

  IntegerPolynomial operator*(const IntegerPolynomial& other) const;
  IntegerPolynomial operator-() const;
  friend bool operator==(const IntegerPolynomial& a, const IntegerPolynomial& b) { return a.c_ == b.c_; }

  /// Human-readable form such as "x^3 - 6*x^2 + 9*x".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// Content-free version of p with positive leading coefficient.
IntegerPolynomial primitive_part(const IntegerPolynomial& p);
/// Greatest common divisor over Q[x], returned primitive with positive leading coefficient.
IntegerPolynomial polynomial_gcd(const IntegerPolynomial& a, const IntegerPolynomial& b);

/// Sturm chain p, p', -rem, ... built from sign-preserving pseudo-remainders.
std::vector<IntegerPolynomial> sturm_chain(const IntegerPolynomial& p);
/// Number of distinct real roots of p in (a, +inf). Requires p(a) != 0.
std::size_t sturm_count_above(const IntegerPolynomial& p, const Rational& a);

/// Largest k with (x - a)^k dividing p. Throws std::invalid_argument for p = 0.
std::size_t multiplicity_at(const IntegerPolynomial& p, const Rational& a);
/// Real roots >= a counted with multiplicity. Throws std::invalid_argument for p = 0.
std::size_t count_roots_geq(const IntegerPolynomial& p, const Rational& a);
/// Real roots in the closed interval [a, b], with multiplicity.
std::size_t count_roots_in(const IntegerPolynomial& p, const Rational& a, const Rational& b);

}  // namespace lapdist
