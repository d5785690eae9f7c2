#include "lapdist/theorem_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "lapdist/isomorphism.hpp"

namespace lapdist {

namespace {

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

Rational rat(std::size_t v) { return Rational(static_cast<unsigned long>(v)); }

FamilySpec require_kind(std::string_view id, const FamilySpec& spec, FamilyKind kind) {
  if (spec.kind != kind) {
    throw std::invalid_argument("lemma " + std::string(id) + " applies to " + std::string(kind_name(kind)) +
                                " specs, got " + to_string(spec));
  }
  validate(spec);
  return spec;
}

// Strict bound mu_k(g) < c: numeric margin plus the exact certificate
// "fewer than k eigenvalues are >= c".
LemmaReport strict_bound_report(std::string lemma, std::string params, const Graph& g, std::size_t k,
                                std::size_t c) {
  LemmaReport r;
  r.lemma = std::move(lemma);
  r.params = std::move(params);
  r.relation = "mu_" + std::to_string(k) + " < " + std::to_string(c);
  const Spectrum s = laplacian_spectrum(g);
  const ExactSpectrum ex(g);
  r.lhs = s(k);
  r.rhs = static_cast<double>(c);
  r.margin = r.rhs - r.lhs;
  const std::size_t geq = ex.count_geq(rat(c));
  const std::size_t mult = ex.multiplicity(rat(c));
  r.exact = geq < k;
  const bool numeric_consistent = (r.lhs < r.rhs - kNumericCountSlack) == *r.exact;
  r.detail = "#eig>=" + std::to_string(c) + " is " + std::to_string(geq) + " (need < " + std::to_string(k) +
             "); multiplicity of " + std::to_string(c) + " is " + std::to_string(mult);
  if (!numeric_consistent) r.detail += "; numeric and exact engines disagree";
  r.pass = *r.exact && numeric_consistent;
  return r;
}

}  // namespace

std::string_view to_string(EngineMode mode) {
  switch (mode) {
    case EngineMode::exact: return "exact";
    case EngineMode::numeric: return "numeric";
    case EngineMode::both: return "both";
  }
  return "both";
}

EngineMode parse_engine_mode(std::string_view text) {
  if (text == "exact") return EngineMode::exact;
  if (text == "numeric") return EngineMode::numeric;
  if (text == "both") return EngineMode::both;
  throw std::invalid_argument("unknown mode '" + std::string(text) + "' (expected exact, numeric or both)");
}

std::string_view to_string(BoundStatus status) {
  switch (status) {
    case BoundStatus::strict: return "strict";
    case BoundStatus::equality: return "equality";
    case BoundStatus::violation: return "violation";
    case BoundStatus::not_applicable: return "not-applicable";
  }
  return "not-applicable";
}

BoundVerdict check_bound(const Graph& g, EngineMode mode) {
  if (g.order() == 0 || !is_connected(g)) throw std::invalid_argument("check_bound: graph is not connected");
  BoundVerdict v;
  v.n = g.order();
  v.d = diameter(g);
  v.bound = v.n - v.d;
  if (v.d < 2) {
    v.status = BoundStatus::not_applicable;
    v.reason = "diameter < 2";
    return v;
  }
  const Rational lo = rat(v.n - v.d + 2);
  const Rational hi = rat(v.n);
  if (mode != EngineMode::numeric) v.exact_m = m_interval(g, lo, hi, CountMode::exact).count;
  if (mode != EngineMode::exact) v.numeric_m = m_interval(g, lo, hi, CountMode::numeric).count;
  v.m = v.exact_m ? v.exact_m : v.numeric_m;
  if (v.d + 1 == v.n) {
    // A connected graph whose diameter is n-1 is the path P_n.
    v.status = BoundStatus::not_applicable;
    v.reason = "path";
    return v;
  }
  if (*v.m < v.bound) {
    v.status = BoundStatus::strict;
  } else if (*v.m == v.bound) {
    v.status = BoundStatus::equality;
  } else {
    v.status = BoundStatus::violation;
  }
  return v;
}

FamilyMatch classify_equality(const Graph& g) {
  const BoundVerdict verdict = check_bound(g, EngineMode::exact);
  if (verdict.status != BoundStatus::equality) {
    throw std::invalid_argument("classify_equality: graph does not attain the bound (status " +
                                std::string(to_string(verdict.status)) + ")");
  }
  for (const FamilySpec& spec : canonical_equality_specs(verdict.n, verdict.d)) {
    const Graph candidate = build(spec);
    if (auto witness = find_isomorphism(g, candidate)) {
      if (!is_isomorphism(g, candidate, *witness)) throw std::logic_error("classify_equality: bad witness");
      return {spec, std::move(*witness)};
    }
  }
  return {};
}

bool engine_counts_agree(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return true;
  const ExactSpectrum ex(g);
  const Spectrum s = laplacian_spectrum(g);
  for (std::size_t c = 0; c <= n; ++c) {
    if (ex.count_in(rat(c), rat(n)) != numeric_count(s, static_cast<double>(c), static_cast<double>(n))) return false;
  }
  return true;
}

// Matrix inequalities ---------------------------------------------------------

LemmaReport weyl_check(const IntegerSymmetricMatrix& a, const IntegerSymmetricMatrix& b, std::size_t i,
                       std::size_t j) {
  const std::size_t n = a.order();
  if (b.order() != n) throw std::invalid_argument("weyl_check: matrix orders differ");
  if (i < 1 || j < 1 || i + j - 1 > n) {
    throw std::out_of_range("weyl_check: need i, j >= 1 and i+j-1 <= n (i=" + std::to_string(i) +
                            ", j=" + std::to_string(j) + ", n=" + std::to_string(n) + ")");
  }
  const Spectrum sa = numeric_spectrum(a), sb = numeric_spectrum(b), ssum = numeric_spectrum(a + b);
  LemmaReport r;
  r.lemma = "2.3";
  r.params = "n=" + std::to_string(n) + ",i=" + std::to_string(i) + ",j=" + std::to_string(j);
  r.relation = "rho_{i+j-1}(A+B) <= rho_i(A) + rho_j(B)";
  r.lhs = ssum(i + j - 1);
  r.rhs = sa(i) + sb(j);
  r.margin = r.rhs - r.lhs;
  r.pass = r.margin >= -kInequalitySlack;
  return r;
}

LemmaReport submatrix_interlacing_check(const IntegerSymmetricMatrix& m, const std::vector<std::size_t>& rows) {
  if (rows.empty()) throw std::invalid_argument("submatrix_interlacing_check: empty row set");
  const std::size_t n = m.order();
  const std::size_t p = rows.size();
  const Spectrum sm = numeric_spectrum(m);
  const Spectrum sb = numeric_spectrum(m.principal_submatrix(rows));
  LemmaReport r;
  r.lemma = "2.4";
  r.params = "n=" + std::to_string(n) + ",p=" + std::to_string(p);
  r.relation = "rho_{n-p+i}(M) <= rho_i(B) <= rho_i(M)";
  r.margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i <= p; ++i) {
    const double lower_gap = sb(i) - sm(n - p + i);
    const double upper_gap = sm(i) - sb(i);
    if (lower_gap < r.margin) {
      r.margin = lower_gap;
      r.lhs = sm(n - p + i);
      r.rhs = sb(i);
    }
    if (upper_gap < r.margin) {
      r.margin = upper_gap;
      r.lhs = sb(i);
      r.rhs = sm(i);
    }
  }
  r.pass = r.margin >= -kInequalitySlack;
  return r;
}

LemmaReport edge_interlacing_check(const Graph& g, Edge e) {
  if (e.first >= g.order() || e.second >= g.order() || !g.has_edge(e.first, e.second)) {
    throw std::invalid_argument("edge_interlacing_check: not an edge");
  }
  const std::size_t n = g.order();
  const Graph h = delete_edge(g, e);
  const Spectrum sg = laplacian_spectrum(g), sh = laplacian_spectrum(h);
  LemmaReport r;
  r.lemma = "2.5";
  r.params = graph6_encode(g) + ",e=" + std::to_string(e.first) + "-" + std::to_string(e.second);
  r.relation = "mu_1(G) >= mu_1(G-e) >= mu_2(G) >= ... >= mu_n(G) = mu_n(G-e) = 0";
  r.margin = std::numeric_limits<double>::infinity();
  auto link = [&](double big, double small) {
    if (big - small < r.margin) {
      r.margin = big - small;
      r.lhs = small;
      r.rhs = big;
    }
  };
  for (std::size_t i = 1; i <= n; ++i) {
    link(sg(i), sh(i));
    if (i < n) link(sh(i), sg(i + 1));
  }
  const bool zeros = std::abs(sg(n)) <= kInequalitySlack && std::abs(sh(n)) <= kInequalitySlack;

  // Exact: the chain is equivalent to N_G(x) - 1 <= N_{G-e}(x) <= N_G(x) for
  // all x, where N(x) counts eigenvalues >= x. Check on the half-integer grid
  // of [0, n] together with the zero eigenvalue.
  const ExactSpectrum eg(g), eh(h);
  bool exact_ok = eg.polynomial().coefficient(0) == 0 && eh.polynomial().coefficient(0) == 0;
  for (std::size_t twice = 0; twice <= 2 * n && exact_ok; ++twice) {
    const Rational x(static_cast<unsigned long>(twice), 2UL);
    const std::size_t ng = eg.count_geq(x), nh = eh.count_geq(x);
    exact_ok = nh <= ng && ng <= nh + 1;
  }
  r.exact = exact_ok;
  const bool engines = engine_counts_agree(g) && engine_counts_agree(h);
  if (!zeros) r.detail = "smallest eigenvalue not zero within slack";
  if (!engines) r.detail += (r.detail.empty() ? "" : "; ") + std::string("numeric and exact engines disagree");
  r.pass = r.margin >= -kInequalitySlack && zeros && exact_ok && engines;
  return r;
}

LemmaReport max_degree_bound_check(const Graph& g) {
  if (g.edge_count() == 0) throw std::invalid_argument("max_degree_bound_check: graph has no edges");
  const std::size_t n = g.order();
  const std::size_t delta = g.max_degree();
  const Spectrum s = laplacian_spectrum(g);
  const ExactSpectrum ex(g);
  const Rational target = rat(delta + 1);

  LemmaReport r;
  r.lemma = "2.2";
  r.params = graph6_encode(g);
  r.relation = "mu_1 >= Delta+1, equality iff Delta = n-1 (connected)";
  r.lhs = static_cast<double>(delta + 1);
  r.rhs = s(1);
  r.margin = r.rhs - r.lhs;
  const bool lower = ex.count_geq(target) >= 1;
  const bool attained = lower && ex.count_greater(target) == 0;
  bool ok = lower;
  if (is_connected(g)) ok = ok && attained == (delta + 1 == n);
  r.exact = ok;
  r.detail = std::string("Delta=") + std::to_string(delta) + (attained ? ", mu_1 = Delta+1" : ", mu_1 > Delta+1");
  const bool engines = engine_counts_agree(g);
  if (!engines) r.detail += "; numeric and exact engines disagree";
  r.pass = ok && engines && r.margin >= -kInequalitySlack;
  return r;
}

LemmaReport complement_identity_check(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) throw std::invalid_argument("complement_identity_check: order must be at least 2");
  const Graph c = complement(g);
  const Spectrum sg = laplacian_spectrum(g), sc = laplacian_spectrum(c);
  LemmaReport r;
  r.lemma = "complement";
  r.params = graph6_encode(g);
  r.relation = "mu_i(G) + mu_{n-i}(complement) = n";
  r.margin = 0.0;
  double worst = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double sum = sg(i) + sc(n - i);
    if (std::abs(sum - static_cast<double>(n)) >= worst) {
      worst = std::abs(sum - static_cast<double>(n));
      r.lhs = sum;
    }
  }
  r.rhs = static_cast<double>(n);
  r.margin = -worst;
  // p_G(x) = x r_G(x) and p_C(x) = x r_C(x) with r_C(x) = (-1)^{n-1} r_G(n - x).
  const IntegerPolynomial rg = char_poly(laplacian(g)).shift_down(1);
  const IntegerPolynomial rc = char_poly(laplacian(c)).shift_down(1);
  IntegerPolynomial mirrored = rg.reflect(BigInt(static_cast<unsigned long>(n)));
  if ((n - 1) % 2 == 1) mirrored = -mirrored;
  r.exact = mirrored == rc;
  const bool engines = engine_counts_agree(g) && engine_counts_agree(c);
  if (!engines) r.detail = "numeric and exact engines disagree";
  r.pass = *r.exact && engines && worst <= kInequalitySlack;
  return r;
}

LemmaReport path_closed_form_check(std::size_t n) {
  const Spectrum closed = path_spectrum_closed_form(n);
  const Spectrum numeric = laplacian_spectrum(path(n));
  LemmaReport r;
  r.lemma = "2.1";
  r.params = "n=" + std::to_string(n);
  r.relation = "mu_j(P_n) = 4 sin^2((n-j) pi / 2n)";
  double worst = 0.0;
  for (std::size_t j = 1; j <= n; ++j) {
    const double diff = std::abs(closed(j) - numeric(j));
    if (diff >= worst) {
      worst = diff;
      r.lhs = numeric(j);
      r.rhs = closed(j);
    }
  }
  r.margin = -worst;
  r.detail = "max deviation " + fmt_double(worst);
  r.pass = worst <= 1e-8;
  return r;
}

LemmaReport path_interval_check(std::size_t n) {
  LemmaReport r;
  r.lemma = "path-count";
  r.params = "n=" + std::to_string(n);
  r.relation = "m_{P_n}[3, n] = floor(n/3)";
  const std::size_t expected = n / 3;
  std::size_t exact = 0, numeric = 0;
  if (n >= 3) {
    const Graph p = path(n);
    exact = m_interval(p, Rational(3), rat(n), CountMode::exact).count;
    numeric = m_interval(p, Rational(3), rat(n), CountMode::numeric).count;
  }
  r.lhs = static_cast<double>(exact);
  r.rhs = static_cast<double>(expected);
  r.margin = -std::abs(r.lhs - r.rhs);
  r.exact = exact == expected;
  r.detail = "exact " + std::to_string(exact) + ", numeric " + std::to_string(numeric);
  r.pass = *r.exact && numeric == exact;
  return r;
}

// Family lemmas -----------------------------------------------------------------

LemmaReport verify_family_lemma(std::string_view id, const FamilySpec& spec) {
  if (id == "2.6" || id == "2.7") {
    require_kind(id, spec, id == "2.6" ? FamilyKind::gndt : FamilyKind::gndra);
    const Graph g = build(spec);
    const std::size_t n = spec.n, d = spec.d;
    const std::size_t k = n - d, c = n - d + 2;
    const Spectrum s = laplacian_spectrum(g);
    const ExactSpectrum ex(g);
    const std::size_t m = ex.count_in(rat(c), rat(n));
    const std::size_t m_numeric = numeric_count(s, static_cast<double>(c), static_cast<double>(n));
    const std::size_t mult = ex.multiplicity(rat(c));
    const bool kth = ex.kth_equals(k, rat(c));
    const bool diam = diameter(g) == d;

    LemmaReport r;
    r.lemma = std::string(id);
    r.params = to_string(spec);
    r.relation = id == "2.6" ? "m[n-d+2, n] = n-d and mu_{n-d} = n-d+2" : "m[n-d+2, n] = n-d";
    r.lhs = s(k);
    r.rhs = static_cast<double>(c);
    r.margin = -std::abs(r.lhs - r.rhs);
    bool ok = m == k && mult + 1 >= k && diam;
    if (id == "2.6") ok = ok && kth;
    r.exact = ok;
    r.detail = "m=" + std::to_string(m) + " (numeric " + std::to_string(m_numeric) + "), multiplicity of " +
               std::to_string(c) + " is " + std::to_string(mult) + ", mu_" + std::to_string(k) +
               (kth ? " = " : " != ") + std::to_string(c) + (diam ? "" : ", wrong diameter");
    r.pass = ok && m_numeric == m;
    return r;
  }
  if (id == "4.1" || id == "4.2") {
    require_kind(id, spec, id == "4.1" ? FamilyKind::hab : FamilyKind::habc);
    return strict_bound_report(std::string(id), to_string(spec), build(spec), spec.n - spec.d,
                               spec.n - spec.d + 2);
  }
  if (id == "4.3") {
    require_kind(id, spec, FamilyKind::pplusplus);
    return strict_bound_report("4.3", to_string(spec), build(spec), 2, 4);
  }
  throw std::invalid_argument("unknown family lemma '" + std::string(id) + "'");
}

// Edge-deleted lemmas -------------------------------------------------------------

std::string_view to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::prev: return "prev";
    case EdgeClass::at: return "at";
    case EdgeClass::next: return "next";
    case EdgeClass::prev_w1: return "prev-w1";
    case EdgeClass::at_w1: return "at-w1";
    case EdgeClass::at_w2: return "at-w2";
    case EdgeClass::next_w1: return "next-w1";
    case EdgeClass::next_w2: return "next-w2";
    case EdgeClass::next2_w2: return "next2-w2";
  }
  return "prev";
}

EdgeClass parse_edge_class(std::string_view text) {
  for (EdgeClass c : {EdgeClass::prev, EdgeClass::at, EdgeClass::next, EdgeClass::prev_w1, EdgeClass::at_w1,
                      EdgeClass::at_w2, EdgeClass::next_w1, EdgeClass::next_w2, EdgeClass::next2_w2}) {
    if (to_string(c) == text) return c;
  }
  throw std::invalid_argument("unknown edge class '" + std::string(text) + "'");
}

std::vector<EdgeClass> edge_classes(std::string_view lemma_id) {
  if (lemma_id == "4.4") return {EdgeClass::prev, EdgeClass::at, EdgeClass::next};
  if (lemma_id == "4.5") {
    return {EdgeClass::prev_w1, EdgeClass::at_w1,   EdgeClass::at_w2,
            EdgeClass::next_w1, EdgeClass::next_w2, EdgeClass::next2_w2};
  }
  throw std::invalid_argument("unknown edge-deletion lemma '" + std::string(lemma_id) + "'");
}

Edge representative_edge(const FamilySpec& spec, EdgeClass c) {
  validate(spec);
  const std::size_t t = spec.t;
  const Vertex first_w = spec.d + 1;
  auto v = [](std::size_t i) -> Vertex { return i - 1; };
  if (spec.kind == FamilyKind::gndt) {
    if (first_w >= spec.n) throw std::invalid_argument("edge class empty: no vertex outside the path");
    switch (c) {
      case EdgeClass::prev: return {v(t - 1), first_w};
      case EdgeClass::at: return {v(t), first_w};
      case EdgeClass::next: return {v(t + 1), first_w};
      default: break;
    }
    throw std::invalid_argument("edge class " + std::string(to_string(c)) + " does not apply to gndt");
  }
  if (spec.kind == FamilyKind::gndra) {
    // W1 = the first a clique vertices (adjacent to v_{r-1}), W2 = the rest.
    const std::size_t a = spec.a, b = spec.n - spec.d - 1 - spec.a;
    const Vertex w1 = first_w, w2 = first_w + a;
    auto need = [&](std::size_t size) {
      if (size == 0) throw std::invalid_argument("edge class " + std::string(to_string(c)) + " is empty");
    };
    switch (c) {
      case EdgeClass::prev_w1: need(a); return {v(t - 1), w1};
      case EdgeClass::at_w1: need(a); return {v(t), w1};
      case EdgeClass::at_w2: need(b); return {v(t), w2};
      case EdgeClass::next_w1: need(a); return {v(t + 1), w1};
      case EdgeClass::next_w2: need(b); return {v(t + 1), w2};
      case EdgeClass::next2_w2: need(b); return {v(t + 2), w2};
      default: break;
    }
    throw std::invalid_argument("edge class " + std::string(to_string(c)) + " does not apply to gndra");
  }
  throw std::invalid_argument("edge classes are defined for gndt and gndra specs only");
}

namespace {

void check_edge_lemma_spec(std::string_view id, const FamilySpec& spec) {
  if (id == "4.4") {
    require_kind(id, spec, FamilyKind::gndt);
  } else if (id == "4.5") {
    require_kind(id, spec, FamilyKind::gndra);
  } else {
    throw std::invalid_argument("unknown edge-deletion lemma '" + std::string(id) + "'");
  }
  if (spec.d + 3 > spec.n) {
    throw std::invalid_argument("lemma " + std::string(id) + ": requires d <= n-3 (got " + to_string(spec) + ")");
  }
}

}  // namespace

LemmaReport verify_edge_deleted_lemma(std::string_view id, const FamilySpec& spec, EdgeClass c) {
  check_edge_lemma_spec(id, spec);
  const auto allowed = edge_classes(id);
  if (std::find(allowed.begin(), allowed.end(), c) == allowed.end()) {
    throw std::invalid_argument("edge class " + std::string(to_string(c)) + " is not used by lemma " +
                                std::string(id));
  }
  const Edge e = representative_edge(spec, c);
  const Graph g = delete_edge(build(spec), e);
  LemmaReport r = strict_bound_report(std::string(id), to_string(spec) + ",edge=" + std::string(to_string(c)), g,
                                      spec.n - spec.d, spec.n - spec.d + 2);
  if (!is_connected(g)) {
    r.pass = false;
    r.detail += "; deletion disconnects the graph";
  }
  return r;
}

std::optional<EdgeClass> reduce_to_listed_class(std::string_view id, const FamilySpec& spec, Edge e) {
  check_edge_lemma_spec(id, spec);
  const Graph g = build(spec);
  const Graph target = delete_edge(g, e);
  for (EdgeClass c : edge_classes(id)) {
    if (are_isomorphic(target, delete_edge(g, representative_edge(spec, c)))) return c;
  }
  return std::nullopt;
}

}  // namespace lapdist
