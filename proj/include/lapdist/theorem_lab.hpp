#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lapdist/families.hpp"
#include "lapdist/graph.hpp"
#include "lapdist/spectra.hpp"

namespace lapdist {

enum class EngineMode { exact, numeric, both };

std::string_view to_string(EngineMode mode);
EngineMode parse_engine_mode(std::string_view text);

// Diameter bound --------------------------------------------------------------

enum class BoundStatus { strict, equality, violation, not_applicable };

std::string_view to_string(BoundStatus status);

/// Outcome of checking m_G[n-d+2, n] <= n-d on one connected graph.
struct BoundVerdict {
  std::size_t n = 0;
  std::size_t d = 0;
  /// Count used for the status: exact unless the mode is numeric.
  std::optional<std::size_t> m;
  std::optional<std::size_t> exact_m;
  std::optional<std::size_t> numeric_m;
  std::size_t bound = 0;
  BoundStatus status = BoundStatus::not_applicable;
  /// "path" or "diameter < 2" when not applicable.
  std::string reason;

  /// False only when both engines ran and disagree.
  bool engines_agree() const noexcept { return !exact_m || !numeric_m || *exact_m == *numeric_m; }
};

/// Throws std::invalid_argument for disconnected input.
BoundVerdict check_bound(const Graph& g, EngineMode mode = EngineMode::both);

/// Searches the canonical gndt/gndra parameter space for a graph isomorphic
/// to g. Throws std::invalid_argument unless check_bound(g) reports equality.
FamilyMatch classify_equality(const Graph& g);

/// Exact and numeric counts of m[c, n] agree for every integer c in [0, n].
bool engine_counts_agree(const Graph& g);

// Lemma reports -----------------------------------------------------------------

inline constexpr double kInequalitySlack = 1e-8;

struct LemmaReport {
  std::string lemma;
  std::string params;
  std::string relation;
  /// Numeric sides of the relation; for chains, the tightest link.
  double lhs = 0.0;
  double rhs = 0.0;
  /// rhs - lhs for "<=" / "<" relations, -|rhs - lhs| for equalities.
  double margin = 0.0;
  /// Set when an exact certificate was computed.
  std::optional<bool> exact;
  std::string detail;
  bool pass = false;
};

/// rho_{i+j-1}(A+B) <= rho_i(A) + rho_j(B), 1-based, slack kInequalitySlack.
LemmaReport weyl_check(const IntegerSymmetricMatrix& a, const IntegerSymmetricMatrix& b, std::size_t i,
                       std::size_t j);
/// rho_{n-p+i}(M) <= rho_i(B) <= rho_i(M) for the principal submatrix B on `rows`.
LemmaReport submatrix_interlacing_check(const IntegerSymmetricMatrix& m, const std::vector<std::size_t>& rows);
/// mu_1(G) >= mu_1(G-e) >= mu_2(G) >= ... >= mu_n(G) = mu_n(G-e) = 0.
LemmaReport edge_interlacing_check(const Graph& g, Edge e);
/// mu_1 >= Delta + 1, and for connected G equality exactly when Delta = n - 1.
LemmaReport max_degree_bound_check(const Graph& g);
/// mu_i(G) + mu_{n-i}(complement) = n, numerically and as a polynomial identity.
LemmaReport complement_identity_check(const Graph& g);

/// Closed-form path spectrum against the Jacobi solver, within 1e-8.
LemmaReport path_closed_form_check(std::size_t n);
/// m_{P_n}[3, n] = floor(n/3), decided exactly.
LemmaReport path_interval_check(std::size_t n);

/// Family lemmas: "2.6" (gndt), "2.7" (gndra), "4.1" (hab), "4.2" (habc), "4.3" (pplusplus).
/// Equalities are decided exactly; strict bounds mu_k < c are certified by
/// the exact count of eigenvalues >= c being below k.
LemmaReport verify_family_lemma(std::string_view id, const FamilySpec& spec);

/// Which path-to-clique edge gets deleted. Lemma "4.4" (gndt, d <= n-3) uses
/// prev/at/next: v_{t-1}w, v_t w, v_{t+1}w. Lemma "4.5" (gndra) uses the six
/// classes v_{t-1}w (w in W1), v_t w and v_{t+1}w (w in W1 or W2), v_{t+2}w
/// (w in W2), where W1 are the clique vertices adjacent to v_{t-1}.
enum class EdgeClass { prev, at, next, prev_w1, at_w1, at_w2, next_w1, next_w2, next2_w2 };

std::string_view to_string(EdgeClass c);
EdgeClass parse_edge_class(std::string_view text);
std::vector<EdgeClass> edge_classes(std::string_view lemma_id);
/// One edge of the class in build(spec). Throws std::invalid_argument if the class is empty.
Edge representative_edge(const FamilySpec& spec, EdgeClass c);
LemmaReport verify_edge_deleted_lemma(std::string_view id, const FamilySpec& spec, EdgeClass c);
/// The listed class whose representative deletion is isomorphic to build(spec) - e, if any.
std::optional<EdgeClass> reduce_to_listed_class(std::string_view id, const FamilySpec& spec, Edge e);

}  // namespace lapdist
