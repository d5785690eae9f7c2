#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lapdist/theorem_lab.hpp"

namespace lapdist {

struct SuiteOptions {
  /// Largest order in parameter grids and random instances.
  std::size_t max_n = 10;
  /// Random instances for the "weyl" and "interlacing" suites.
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  std::size_t workers = 1;
};

/// Suite ids in run order:
///   2.1 path closed form        path-count  m_{P_n}[3, n] = floor(n/3)
///   2.2 mu_1 >= Delta+1         2.3 / weyl  2.4 / interlacing (random, order <= 8)
///   2.5 edge deletion           complement
///   2.6 gndt  2.7 gndra  4.1 hab  4.2 habc  4.3 pplusplus
///   4.4 gndt minus an edge      4.5 gndra minus an edge
/// Exhaustive graph suites cap the order at 6 (2.2, 2.5) or 7 (complement).
std::vector<std::string> lemma_suite_ids();

/// Maps "weyl" and "interlacing" to "2.3" and "2.4"; throws
/// std::invalid_argument for unknown ids.
std::string canonical_suite_id(std::string_view id);

/// One report per instance, in a fixed order for fixed options.
std::vector<LemmaReport> run_lemma_suite(std::string_view id, const SuiteOptions& opts = {});

}  // namespace lapdist
