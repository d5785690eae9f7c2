#include "lapdist/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lapdist {

namespace {

int sign_of(const BigInt& v) { return sgn(v); }

// R with lc(b)^k * a = q*b + R for some k >= 0, scaled so that R is a
// positive multiple of the true remainder.
IntegerPolynomial signed_pseudo_remainder(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo-remainder by zero polynomial");
  std::vector<BigInt> r = a.coefficients();
  const auto& bc = b.coefficients();
  const long db = b.degree();
  const BigInt& lb = b.leading();
  std::size_t steps = 0;
  long dr = static_cast<long>(r.size()) - 1;
  while (dr >= db && dr >= 0) {
    const BigInt lr = r[dr];
    for (auto& c : r) c *= lb;
    const long shift = dr - db;
    for (long i = 0; i <= db; ++i) r[i + shift] -= lr * bc[i];
    ++steps;
    while (!r.empty() && r.back() == 0) r.pop_back();
    dr = static_cast<long>(r.size()) - 1;
  }
  IntegerPolynomial out(std::move(r));
  if (sign_of(lb) < 0 && steps % 2 == 1) out = -out;
  return out;
}

BigInt content(const IntegerPolynomial& p) {
  BigInt g = 0;
  for (const auto& c : p.coefficients()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Divides by the (positive) content, preserving sign.
IntegerPolynomial remove_content(const IntegerPolynomial& p) {
  if (p.is_zero()) return p;
  const BigInt g = content(p);
  if (g == 1) return p;
  std::vector<BigInt> c = p.coefficients();
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return IntegerPolynomial(std::move(c));
}

int sign_variations(const std::vector<int>& signs) {
  int count = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

IntegerPolynomial::IntegerPolynomial(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) { trim(); }

IntegerPolynomial::IntegerPolynomial(std::initializer_list<long> coefficients) {
  c_.reserve(coefficients.size());
  for (long v : coefficients) c_.emplace_back(v);
  trim();
}

IntegerPolynomial IntegerPolynomial::from_roots(const std::vector<Rational>& roots) {
  IntegerPolynomial p{1};
  for (const auto& r : roots) {
    IntegerPolynomial linear(std::vector<BigInt>{-r.get_num(), r.get_den()});
    p = p * linear;
  }
  return p;
}

void IntegerPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& IntegerPolynomial::leading() const {
  if (c_.empty()) throw std::invalid_argument("leading coefficient of zero polynomial");
  return c_.back();
}

IntegerPolynomial IntegerPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigInt> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntegerPolynomial(std::move(d));
}

int IntegerPolynomial::sign_at(const Rational& a) const {
  if (c_.empty()) return 0;
  // den^deg * p(num/den) via homogeneous Horner; den > 0 keeps the sign.
  const BigInt& num = a.get_num();
  const BigInt& den = a.get_den();
  BigInt acc = c_.back();
  BigInt power = 1;
  for (std::size_t i = c_.size() - 1; i-- > 0;) {
    power *= den;
    acc = acc * num + c_[i] * power;
  }
  return sign_of(acc);
}

int IntegerPolynomial::sign_at_infinity() const { return c_.empty() ? 0 : sign_of(c_.back()); }

Rational IntegerPolynomial::evaluate(const Rational& a) const {
  Rational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * a + Rational(c_[i]);
  return acc;
}

double IntegerPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].get_d();
  return acc;
}

std::optional<IntegerPolynomial> IntegerPolynomial::divide_by_root(const Rational& a) const {
  if (c_.empty()) return std::nullopt;
  // p = (den*x - num) q:  p_top = den*q_{top-1},  p_i = den*q_{i-1} - num*q_i.
  // Needs num/den in lowest terms.
  Rational reduced = a;
  reduced.canonicalize();
  const BigInt& num = reduced.get_num();
  const BigInt& den = reduced.get_den();
  const std::size_t deg = c_.size() - 1;
  if (deg == 0) return std::nullopt;
  std::vector<BigInt> q(deg);
  BigInt carry = c_[deg];
  for (std::size_t i = deg; i >= 1; --i) {
    if (!mpz_divisible_p(carry.get_mpz_t(), den.get_mpz_t())) return std::nullopt;
    mpz_divexact(q[i - 1].get_mpz_t(), carry.get_mpz_t(), den.get_mpz_t());
    carry = c_[i - 1] + num * q[i - 1];
  }
  if (carry != 0) return std::nullopt;
  return IntegerPolynomial(std::move(q));
}

IntegerPolynomial IntegerPolynomial::reflect(const BigInt& c) const {
  // Horner in the variable (c - x).
  const IntegerPolynomial linear(std::vector<BigInt>{c, BigInt(-1)});
  IntegerPolynomial acc;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * linear;
    std::vector<BigInt> coeffs = acc.c_;
    if (coeffs.empty()) coeffs.emplace_back(0);
    coeffs[0] += c_[i];
    acc = IntegerPolynomial(std::move(coeffs));
  }
  return acc;
}

IntegerPolynomial IntegerPolynomial::shift_down(std::size_t k) const {
  for (std::size_t i = 0; i < k && i < c_.size(); ++i) {
    if (c_[i] != 0) throw std::invalid_argument("shift_down: polynomial not divisible by x^k");
  }
  if (k >= c_.size()) return {};
  return IntegerPolynomial(std::vector<BigInt>(c_.begin() + static_cast<long>(k), c_.end()));
}

IntegerPolynomial IntegerPolynomial::operator*(const IntegerPolynomial& other) const {
  if (c_.empty() || other.c_.empty()) return {};
  std::vector<BigInt> out(c_.size() + other.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < other.c_.size(); ++j) out[i + j] += c_[i] * other.c_[j];
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial IntegerPolynomial::operator-() const {
  std::vector<BigInt> out = c_;
  for (auto& v : out) v = -v;
  return IntegerPolynomial(std::move(out));
}

std::string IntegerPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const BigInt& c = c_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

IntegerPolynomial primitive_part(const IntegerPolynomial& p) {
  IntegerPolynomial out = remove_content(p);
  if (!out.is_zero() && out.leading() < 0) out = -out;
  return out;
}

IntegerPolynomial polynomial_gcd(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  IntegerPolynomial x = primitive_part(a);
  IntegerPolynomial y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntegerPolynomial r = primitive_part(signed_pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::vector<IntegerPolynomial> sturm_chain(const IntegerPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("sturm_chain: zero polynomial");
  std::vector<IntegerPolynomial> chain{remove_content(p)};
  IntegerPolynomial d = remove_content(p.derivative());
  if (d.is_zero()) return chain;
  chain.push_back(std::move(d));
  while (true) {
    const auto& prev = chain[chain.size() - 2];
    const auto& cur = chain.back();
    IntegerPolynomial r = signed_pseudo_remainder(prev, cur);
    if (r.is_zero()) break;
    chain.push_back(remove_content(-r));
  }
  return chain;
}

std::size_t sturm_count_above(const IntegerPolynomial& p, const Rational& a) {
  if (p.sign_at(a) == 0) throw std::invalid_argument("sturm_count_above: a is a root");
  const auto chain = sturm_chain(p);
  std::vector<int> at_a, at_inf;
  at_a.reserve(chain.size());
  at_inf.reserve(chain.size());
  for (const auto& s : chain) {
    at_a.push_back(s.sign_at(a));
    at_inf.push_back(s.sign_at_infinity());
  }
  const int diff = sign_variations(at_a) - sign_variations(at_inf);
  if (diff < 0) throw std::logic_error("sturm_count_above: negative root count");
  return static_cast<std::size_t>(diff);
}

std::size_t multiplicity_at(const IntegerPolynomial& p, const Rational& a) {
  if (p.is_zero()) throw std::invalid_argument("multiplicity_at: zero polynomial");
  std::size_t k = 0;
  IntegerPolynomial q = p;
  while (auto next = q.divide_by_root(a)) {
    q = std::move(*next);
    ++k;
  }
  return k;
}

std::size_t count_roots_geq(const IntegerPolynomial& p, const Rational& a) {
  if (p.is_zero()) throw std::invalid_argument("count_roots_geq: zero polynomial");
  // Strip the root at a, then sum the distinct-root counts of the gcd chain
  // g0 = p, g_{k+1} = gcd(g_k, g_k'): g_k has one root for every root of p
  // with multiplicity > k.
  std::size_t total = 0;
  IntegerPolynomial q = p;
  while (auto next = q.divide_by_root(a)) {
    q = std::move(*next);
    ++total;
  }
  IntegerPolynomial g = primitive_part(q);
  while (g.degree() >= 1) {
    total += sturm_count_above(g, a);
    g = polynomial_gcd(g, g.derivative());
  }
  return total;
}

std::size_t count_roots_in(const IntegerPolynomial& p, const Rational& a, const Rational& b) {
  if (a > b) throw std::invalid_argument("count_roots_in: empty interval (a > b)");
  return count_roots_geq(p, a) - count_roots_geq(p, b) + multiplicity_at(p, b);
}

}  // namespace lapdist
