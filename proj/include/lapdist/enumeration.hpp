#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lapdist/families.hpp"
#include "lapdist/graph.hpp"
#include "lapdist/theorem_lab.hpp"

namespace lapdist {

inline constexpr std::size_t kMaxEnumerationOrder = 7;
inline constexpr std::size_t kOptInEnumerationOrder = 8;

struct EnumerationOptions {
  std::size_t workers = 1;
  bool allow_order_8 = false;
};

/// One canonical representative per isomorphism class of connected graphs on
/// n vertices, sorted by canonical form. 1 <= n <= 7, or n = 8 with
/// allow_order_8. Throws std::out_of_range otherwise. The result does not
/// depend on the worker count.
std::vector<Graph> enumerate_connected(std::size_t n, const EnumerationOptions& opts = {});
/// Same for all graphs (connected or not), 1 <= n <= 7.
std::vector<Graph> enumerate_graphs(std::size_t n, const EnumerationOptions& opts = {});

/// Reads one graph6 string per line; blank lines and lines starting with '#'
/// are skipped. Throws std::invalid_argument naming the bad line.
std::vector<Graph> read_graph6_corpus(const std::string& text);

/// Runs `fn(i)` for i in [0, count) on `workers` threads and returns the
/// results in index order.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, std::size_t workers, Fn fn);

// Bound sweep -------------------------------------------------------------------

struct BoundTally {
  std::size_t total = 0;
  std::size_t strict = 0;
  std::size_t equality = 0;
  std::size_t not_applicable = 0;
  std::size_t violations = 0;
  std::vector<std::string> equality_graphs;
};

struct BoundSweep {
  /// Keyed by (n, d).
  std::map<std::pair<std::size_t, std::size_t>, BoundTally> tallies;
  std::vector<std::string> equality_graphs;
  std::vector<std::string> violation_graphs;
  std::vector<std::string> engine_mismatches;
  std::size_t disconnected_skipped = 0;

  std::size_t violations() const noexcept { return violation_graphs.size(); }
  bool ok() const noexcept { return violation_graphs.empty() && engine_mismatches.empty(); }
};

/// check_bound over every connected graph of the list; disconnected ones are counted and skipped.
BoundSweep sweep_bound(const std::vector<Graph>& graphs, EngineMode mode = EngineMode::both,
                       std::size_t workers = 1);

// Extremal census ---------------------------------------------------------------

struct CensusRecord {
  std::size_t n = 0;
  std::size_t d = 0;
  /// Connected classes of diameter d.
  std::size_t total = 0;
  std::size_t strict = 0;
  /// Equality graphs (graph6 of the canonical representative), sorted.
  std::vector<std::string> equality;
  /// Equality graph and the family spec it was matched with.
  std::vector<std::pair<std::string, FamilySpec>> matches;
  std::vector<std::string> unmatched;
  /// Canonical family specs with no isomorphic graph in the equality set.
  std::vector<FamilySpec> missing;
  std::vector<std::string> violations;
  std::vector<std::string> engine_mismatches;
  /// Distinct isomorphism classes among the canonical family specs.
  std::size_t expected_classes = 0;

  bool ok() const noexcept {
    return unmatched.empty() && missing.empty() && violations.empty() && engine_mismatches.empty();
  }
};

/// Census over the enumerated connected graphs of order n. Requires 2 <= d <= n-2.
CensusRecord extremal_census(std::size_t n, std::size_t d, const EnumerationOptions& opts = {});
/// Census over an explicit universe; graphs of other orders, disconnected
/// graphs and other diameters are ignored. Duplicated classes count once.
CensusRecord extremal_census(const std::vector<Graph>& universe, std::size_t n, std::size_t d,
                             std::size_t workers = 1);

}  // namespace lapdist

#include "lapdist/detail/parallel.hpp"
