#include "lapdist/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace lapdist {

// IntegerSymmetricMatrix ----------------------------------------------------

IntegerSymmetricMatrix IntegerSymmetricMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t n = rows.size();
  IntegerSymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw std::invalid_argument("matrix rows must have length " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) {
        throw std::invalid_argument("matrix is not symmetric at (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ")");
      }
      m.set(i, j, rows[i][j]);
    }
  }
  return m;
}

IntegerSymmetricMatrix IntegerSymmetricMatrix::identity(std::size_t n, std::int64_t scale) {
  IntegerSymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, scale);
  return m;
}

IntegerSymmetricMatrix IntegerSymmetricMatrix::principal_submatrix(std::span<const std::size_t> rows) const {
  if (rows.empty()) throw std::invalid_argument("principal_submatrix: empty index set");
  std::vector<bool> seen(n_, false);
  for (std::size_t r : rows) {
    if (r >= n_ || seen[r]) throw std::invalid_argument("principal_submatrix: bad index set");
    seen[r] = true;
  }
  IntegerSymmetricMatrix out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i; j < rows.size(); ++j) out.set(i, j, at(rows[i], rows[j]));
  return out;
}

IntegerSymmetricMatrix IntegerSymmetricMatrix::operator+(const IntegerSymmetricMatrix& other) const {
  if (other.n_ != n_) throw std::invalid_argument("matrix order mismatch");
  IntegerSymmetricMatrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += other.a_[i];
  return out;
}

IntegerSymmetricMatrix IntegerSymmetricMatrix::operator-(const IntegerSymmetricMatrix& other) const {
  if (other.n_ != n_) throw std::invalid_argument("matrix order mismatch");
  IntegerSymmetricMatrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] -= other.a_[i];
  return out;
}

double IntegerSymmetricMatrix::frobenius_norm() const {
  double s = 0.0;
  for (auto v : a_) s += static_cast<double>(v) * static_cast<double>(v);
  return std::sqrt(s);
}

IntegerSymmetricMatrix laplacian(const Graph& g) {
  IntegerSymmetricMatrix m(g.order());
  for (Vertex v = 0; v < g.order(); ++v) m.set(v, v, static_cast<std::int64_t>(g.degree(v)));
  for (auto [u, v] : g.edges()) m.set(u, v, -1);
  return m;
}

// Numeric engine ------------------------------------------------------------

Spectrum numeric_spectrum(const IntegerSymmetricMatrix& m, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("numeric_spectrum: tolerance must be positive");
  const std::size_t n = m.order();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = static_cast<double>(m.at(i, j));
  auto A = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  const double norm = m.frobenius_norm();
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * A(i, j) * A(i, j);
    return std::sqrt(s);
  };

  double off = off_norm();
  int sweeps = 0;
  while (off > tol * norm) {
    if (++sweeps > kJacobiMaxSweeps) {
      throw std::runtime_error("numeric_spectrum: Jacobi did not converge in " +
                               std::to_string(kJacobiMaxSweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = A(p, q);
        if (apq == 0.0) continue;
        const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = A(k, p);
          const double akq = A(k, q);
          A(k, p) = A(p, k) = c * akp - s * akq;
          A(k, q) = A(q, k) = s * akp + c * akq;
        }
        A(p, p) -= t * apq;
        A(q, q) += t * apq;
        A(p, q) = A(q, p) = 0.0;
      }
    }
    off = off_norm();
  }

  Spectrum out;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = A(i, i);
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  // Weyl: each diagonal entry is within the remaining off-diagonal norm of an
  // eigenvalue; add a rounding allowance for the rotations themselves.
  const double rounding = 8.0 * static_cast<double>(n) * std::numeric_limits<double>::epsilon() * norm;
  out.tol = std::max(tol, off + rounding);
  return out;
}

Spectrum laplacian_spectrum(const Graph& g, double tol) { return numeric_spectrum(laplacian(g), tol); }

Spectrum path_spectrum_closed_form(std::size_t n) {
  if (n == 0) throw std::invalid_argument("path_spectrum_closed_form: order must be positive");
  Spectrum out;
  out.values.resize(n);
  for (std::size_t j = 1; j <= n; ++j) {
    const double s = std::sin(static_cast<double>(n - j) * std::numbers::pi / (2.0 * static_cast<double>(n)));
    out.values[j - 1] = 4.0 * s * s;
  }
  out.tol = 8.0 * std::numeric_limits<double>::epsilon();
  return out;
}

// Exact engine --------------------------------------------------------------

IntegerPolynomial char_poly(const IntegerSymmetricMatrix& m) {
  const std::size_t n = m.order();
  // Sparse rows of A: (column, value).
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> rows(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m.at(i, j) != 0) rows[i].emplace_back(j, m.at(i, j));

  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  std::vector<BigInt> mk(n * n), amk(n * n);  // M_k and A*M_k; M_0 = A*M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    mk.swap(amk);
    for (std::size_t i = 0; i < n; ++i) mk[i * n + i] += c[n - k + 1];
    for (auto& v : amk) v = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (auto [l, val] : rows[i]) {
        const unsigned long mag = static_cast<unsigned long>(val < 0 ? -val : val);
        for (std::size_t j = 0; j < n; ++j) {
          if (val > 0) {
            mpz_addmul_ui(amk[i * n + j].get_mpz_t(), mk[l * n + j].get_mpz_t(), mag);
          } else {
            mpz_submul_ui(amk[i * n + j].get_mpz_t(), mk[l * n + j].get_mpz_t(), mag);
          }
        }
      }
    }
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += amk[i * n + i];
    if (!mpz_divisible_ui_p(trace.get_mpz_t(), k)) {
      throw std::logic_error("char_poly: trace not divisible by " + std::to_string(k));
    }
    mpz_divexact_ui(c[n - k].get_mpz_t(), trace.get_mpz_t(), k);
    c[n - k] = -c[n - k];
  }
  return IntegerPolynomial(std::move(c));
}

namespace {

std::int64_t gershgorin(const IntegerSymmetricMatrix& m) {
  std::int64_t best = 0;
  for (std::size_t i = 0; i < m.order(); ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < m.order(); ++j) s += std::abs(m.at(i, j));
    best = std::max(best, s);
  }
  return best;
}

}  // namespace

ExactSpectrum::ExactSpectrum(const Graph& g) : ExactSpectrum(laplacian(g)) {}

ExactSpectrum::ExactSpectrum(const IntegerSymmetricMatrix& m) : p_(char_poly(m)), bound_(gershgorin(m)) {}

bool ExactSpectrum::kth_equals(std::size_t k, const Rational& a) const {
  const std::size_t mult = multiplicity(a);
  if (mult == 0) return false;
  const std::size_t geq = count_geq(a);
  return geq - mult < k && k <= geq;
}

std::size_t numeric_count(const Spectrum& s, double a, double b, double slack) {
  return static_cast<std::size_t>(std::count_if(s.values.begin(), s.values.end(), [&](double v) {
    return v >= a - slack && v <= b + slack;
  }));
}

IntervalCount m_interval(const Graph& g, const Rational& a, const Rational& b, CountMode mode) {
  if (a > b) throw std::invalid_argument("m_interval: empty interval (a > b)");
  IntervalCount out{a, b, 0, mode};
  if (mode == CountMode::exact) {
    out.count = count_roots_in(char_poly(laplacian(g)), a, b);
  } else {
    out.count = numeric_count(laplacian_spectrum(g), a.get_d(), b.get_d());
  }
  return out;
}

EigenvalueReport mu_k(const Graph& g, std::size_t k) {
  if (k < 1 || k > g.order()) {
    throw std::out_of_range("mu_k: index " + std::to_string(k) + " outside 1.." + std::to_string(g.order()));
  }
  EigenvalueReport out;
  out.value = laplacian_spectrum(g)(k);
  const double nearest = std::round(out.value);
  if (std::abs(out.value - nearest) <= 1e-6) {
    const auto candidate = static_cast<std::int64_t>(nearest);
    if (ExactSpectrum(g).kth_equals(k, Rational(candidate))) out.exact_integer = candidate;
  }
  return out;
}

std::vector<std::pair<std::int64_t, std::size_t>> integer_eigenvalues(const ExactSpectrum& s) {
  std::vector<std::pair<std::int64_t, std::size_t>> out;
  if (s.polynomial().degree() < 1) return out;
  for (std::int64_t r = -s.eigenvalue_bound(); r <= s.eigenvalue_bound(); ++r) {
    const std::size_t mult = s.multiplicity(Rational(r));
    if (mult > 0) out.emplace_back(r, mult);
  }
  return out;
}

}  // namespace lapdist
