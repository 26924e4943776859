#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncpart/natural.hpp"
#include "ncpart/partition.hpp"

namespace ncpart {

// ---------------------------------------------------------------------------
// Exact integer sequences. All results are checked for overflow.

/// C_{numerator / denominator}; zero when the argument is not a
/// non-negative integer.
Natural catalan(long long numerator, long long denominator = 1);
Natural bell(int n);
Natural binom(int n, int k);
/// binom(n, floor(n / 2)).
Natural central_binomial(int n);
std::uint64_t euler_phi(std::uint64_t m);
/// Positive divisors of n, ascending.
std::vector<int> divisors(int n);

/// Rotation classes of noncrossing partitions of [n], by averaging fixed
/// points over the cyclic group.
Natural ncpp_formula(int n);
/// Free (uncolored) plane trees with n edges.
Natural fpt_formula(int n);
/// 2 * fpt(n) - C_{(n-1)/2}; equals ncpp_formula(n).
Natural bicolored_tree_formula(int n);
/// (ncpp + central_binomial) / 2.
Natural dihedral_formula(int n);
/// (ncpp - central_binomial) / 2.
Natural chiral_pairs_formula(int n);

// ---------------------------------------------------------------------------
// Fixed points of rotations.

/// True iff rotating by d positions fixes p. Requires d | n and n / d >= 2.
bool is_clickable(const SetPartition& p, int d);

/// Noncrossing partitions of [n] fixed by rotation through d positions.
std::uint64_t clickable_count_brute(int n, int d);

/// Noncrossing partitions of [n] fixed by rotate(., k), any k.
std::uint64_t rotation_fixed_count_brute(int n, int k);

// ---------------------------------------------------------------------------
// Brute-force oracles. Each counts by explicit orbit construction over the
// exhaustive generators and refuses inputs above its budget.

class BudgetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BruteForceBudget {
  int self_complementary = 14;
  int orbits = 12;
  int conjecture = 10;

  /// Same limit for every oracle.
  static BruteForceBudget uniform(int limit) { return {limit, limit, limit}; }
};

std::uint64_t ncpp_brute(int n, const BruteForceBudget& budget = {});
std::uint64_t dihedral_brute(int n, const BruteForceBudget& budget = {});
std::uint64_t sc_nc_brute(int n, const BruteForceBudget& budget = {});
std::uint64_t achiral_classes_brute(int n, const BruteForceBudget& budget = {});
/// Distinct plane trees (colors forgotten) reached by nc_to_tree.
std::uint64_t fpt_brute(int n, const BruteForceBudget& budget = {});

struct ConjectureResult {
  int n = 0;
  std::uint64_t sc_partitions = 0;
  std::uint64_t sc_rotation_classes = 0;
  bool equal = false;
};

/// Over all partitions of [n] (crossing or not): self-complementary
/// partitions versus rotation classes mapped to themselves by complement.
ConjectureResult conjecture_check(int n, const BruteForceBudget& budget = {});

// ---------------------------------------------------------------------------
// Tabulation.

struct CountRow {
  int n = 0;
  Natural ncpp;
  Natural dihedral;
  Natural chiral_pairs;
  Natural sc_nc;
  Natural achiral_classes;
  Natural catalan;
  Natural bell;
  Natural fpt;
  Natural bicolored_trees;
  bool brute_verified = false;

  /// Row identities: dihedral and chiral pairs split ncpp exactly,
  /// bicolored trees equal ncpp, sc_nc equals achiral classes.
  bool consistent() const;
};

CountRow count_row(int n);

/// Rows 1..n_max from the closed formulas. Rows with n <= brute_up_to are
/// additionally checked against the orbit oracles; a mismatch throws
/// std::logic_error.
std::vector<CountRow> table(int n_max, int brute_up_to = 0);

/// CSV with header "n,ncpp,dihedral,chiral_pairs,sc_nc,catalan,fpt".
std::string table_csv(const std::vector<CountRow>& rows);
/// JSON array of objects with the CSV field names.
std::string table_json(const std::vector<CountRow>& rows);
/// Right-aligned columns under the CSV field names.
std::string table_text(const std::vector<CountRow>& rows);

struct ReferenceRow {
  int n;
  std::uint64_t ncpp;
  std::uint64_t dihedral;
  std::uint64_t chiral_pairs;
};

/// Published rotation, dihedral and chiral-pair counts for n = 1..22.
std::span<const ReferenceRow> reference_table();

}  // namespace ncpart
