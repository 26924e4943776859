#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncpart/census.hpp"

namespace ncpart {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  std::size_t failures() const;
  void add(std::string name, bool passed, std::string detail = {});
};

// Transpose acting on even-size achiral rotation classes.
struct TransposeSwapReport {
  int n = 0;
  std::size_t even_order_classes = 0;
  std::size_t odd_order_classes = 0;
  // Every member maps into an achiral even-size class of opposite parity,
  // members of one class share an image class, and the class map is an
  // involution.
  bool swaps_families = true;
  bool involution = true;
};

TransposeSwapReport check_transpose_swap(int n);

struct TrichotomyReport {
  int n = 0;
  std::size_t achiral_classes = 0;
  std::size_t odd_orbit = 0;
  std::size_t even_orbit_even_order = 0;
  std::size_t even_orbit_odd_order = 0;
  // Classes breaking the trichotomy or, for even orbits, with members of
  // mixed complement-order parity.
  std::size_t violations = 0;
};

TrichotomyReport check_achiral_trichotomy(int n);

struct SymmetryHistogram {
  // counts[s][a]: partitions with s singletons and a adjacencies.
  std::vector<std::vector<std::uint64_t>> counts;
  bool symmetric() const;
};

SymmetryHistogram singleton_adjacency_histogram(int n, bool noncrossing_only);

/// Names accepted by run_suite.
std::vector<std::string_view> suite_names();

/// Budget for a suite's `n` under the given oracle budgets.
int suite_budget(std::string_view suite, const BruteForceBudget& budget);

/// Runs a suite cumulatively for every ground set size 1..n. Throws
/// BudgetError above the suite's budget and std::invalid_argument for
/// unknown names.
SuiteReport run_suite(std::string_view suite, int n,
                      const BruteForceBudget& budget = {});

}  // namespace ncpart
