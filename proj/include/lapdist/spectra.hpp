#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lapdist/graph.hpp"
#include "lapdist/polynomial.hpp"

namespace lapdist {

/// Dense symmetric matrix with exact 64-bit integer entries. set() writes
/// both (i, j) and (j, i), so the symmetry invariant cannot be broken.
class IntegerSymmetricMatrix {
 public:
  IntegerSymmetricMatrix() = default;
  explicit IntegerSymmetricMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}
  /// Throws std::invalid_argument if rows are ragged or not symmetric.
  static IntegerSymmetricMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  static IntegerSymmetricMatrix identity(std::size_t n, std::int64_t scale = 1);

  std::size_t order() const noexcept { return n_; }
  std::int64_t at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, std::int64_t v) {
    a_[i * n_ + j] = v;
    a_[j * n_ + i] = v;
  }

  IntegerSymmetricMatrix principal_submatrix(std::span<const std::size_t> rows) const;
  IntegerSymmetricMatrix operator+(const IntegerSymmetricMatrix& other) const;
  IntegerSymmetricMatrix operator-(const IntegerSymmetricMatrix& other) const;
  double frobenius_norm() const;

  friend bool operator==(const IntegerSymmetricMatrix&, const IntegerSymmetricMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> a_;
};

/// Eigenvalues sorted nonincreasing together with the absolute accuracy the
/// solver certifies for each of them.
struct Spectrum {
  std::vector<double> values;
  double tol = 0.0;

  std::size_t size() const noexcept { return values.size(); }
  /// 1-based, largest first (mu_1 >= mu_2 >= ...).
  double operator()(std::size_t k) const { return values.at(k - 1); }
};

inline constexpr double kDefaultSolverTol = 1e-10;
inline constexpr double kNumericCountSlack = 1e-8;
inline constexpr int kJacobiMaxSweeps = 100;

IntegerSymmetricMatrix laplacian(const Graph& g);

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
/// tol * ||M||_F. Throws std::runtime_error if kJacobiMaxSweeps is exceeded.
Spectrum numeric_spectrum(const IntegerSymmetricMatrix& m, double tol = kDefaultSolverTol);
Spectrum laplacian_spectrum(const Graph& g, double tol = kDefaultSolverTol);

/// mu_j(P_n) = 4 sin^2((n - j) pi / (2n)), j = 1..n.
Spectrum path_spectrum_closed_form(std::size_t n);

/// det(xI - M) via the Faddeev-LeVerrier recurrence over big integers.
IntegerPolynomial char_poly(const IntegerSymmetricMatrix& m);

enum class CountMode { exact, numeric };

struct IntervalCount {
  Rational a;
  Rational b;
  std::size_t count = 0;
  CountMode mode = CountMode::exact;
};

/// Characteristic polynomial of a Laplacian plus the exact queries built on it.
class ExactSpectrum {
 public:
  explicit ExactSpectrum(const Graph& g);
  explicit ExactSpectrum(const IntegerSymmetricMatrix& m);

  const IntegerPolynomial& polynomial() const noexcept { return p_; }
  /// Gershgorin radius: every eigenvalue lies in [-bound, bound].
  std::int64_t eigenvalue_bound() const noexcept { return bound_; }
  std::size_t order() const noexcept { return static_cast<std::size_t>(p_.degree()); }

  std::size_t count_geq(const Rational& a) const { return count_roots_geq(p_, a); }
  /// Eigenvalues strictly greater than a.
  std::size_t count_greater(const Rational& a) const { return count_geq(a) - multiplicity(a); }
  std::size_t multiplicity(const Rational& a) const { return multiplicity_at(p_, a); }
  /// m[a, b] with multiplicity; both endpoints included.
  std::size_t count_in(const Rational& a, const Rational& b) const { return count_roots_in(p_, a, b); }
  /// True iff the k-th largest eigenvalue (1-based) equals a.
  bool kth_equals(std::size_t k, const Rational& a) const;
  /// True iff the k-th largest eigenvalue is strictly below a.
  bool kth_less_than(std::size_t k, const Rational& a) const { return count_geq(a) < k; }

 private:
  IntegerPolynomial p_;
  std::int64_t bound_ = 0;
};

/// Number of Laplacian eigenvalues of g in [a, b]. Exact mode uses the
/// characteristic polynomial; numeric mode counts spectrum values within
/// kNumericCountSlack of the interval. Throws std::invalid_argument if a > b.
IntervalCount m_interval(const Graph& g, const Rational& a, const Rational& b,
                         CountMode mode = CountMode::exact);
std::size_t numeric_count(const Spectrum& s, double a, double b, double slack = kNumericCountSlack);

struct EigenvalueReport {
  double value = 0.0;
  /// Set when the exact layer proves mu_k equals this integer.
  std::optional<std::int64_t> exact_integer;
};

/// mu_k(G), 1 <= k <= n, largest first.
EigenvalueReport mu_k(const Graph& g, std::size_t k);

/// Integer eigenvalues with their exact multiplicities, ascending.
std::vector<std::pair<std::int64_t, std::size_t>> integer_eigenvalues(const ExactSpectrum& s);

}  // namespace lapdist
