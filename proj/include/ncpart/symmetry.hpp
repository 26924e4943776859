#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ncpart/partition.hpp"

namespace ncpart {

/// Relabels i -> ((i - 1 + k) mod n) + 1. Negative k rotates backwards.
SetPartition rotate(const SetPartition& p, long long k);

/// Relabels i -> n + 1 - i.
SetPartition complement(const SetPartition& p);

/// Kreweras complement on the gap points 1', ..., n' where i' sits between
/// i and i + 1 on the circle: the coarsest partition of the gaps whose
/// union with `p` stays noncrossing. Satisfies kreweras(kreweras(p)) ==
/// rotate(p, -1). Throws NotNoncrossingError.
SetPartition kreweras(const SetPartition& p);

/// Inverse of kreweras: rotate(kreweras(p), 1) == kreweras^{-1}(p).
SetPartition kreweras_inverse(const SetPartition& p);

/// complement(kreweras(p)); an involution on noncrossing partitions.
SetPartition transpose(const SetPartition& p);

bool is_self_complementary(const SetPartition& p);

enum class Parity { kEven, kOdd, kNotApplicable };

std::string_view to_string(Parity parity);

struct RotationClass {
  // Member whose formatted string is lexicographically least.
  SetPartition representative;
  int orbit_size = 0;
  bool achiral = false;
  // Offsets i in [0, orbit_size) with rotate(representative, i)
  // self-complementary.
  std::vector<int> sc_members;
  // Parity of complement_order(representative); kNotApplicable iff chiral.
  Parity complement_order_parity = Parity::kNotApplicable;
};

RotationClass rotation_orbit(const SetPartition& p);

/// Members rotate(p, 0), ..., rotate(p, t - 1) of the rotation orbit.
std::vector<SetPartition> orbit_members(const SetPartition& p);

/// Smallest t >= 1 with rotate(p, t) == p.
int rotation_period(const SetPartition& p);

/// Least i >= 1 with complement(p) == rotate(p, i). Throws
/// std::domain_error when the rotation class of p is chiral.
int complement_order(const SetPartition& p);

/// Classification of an achiral class into the three cases: an odd orbit
/// holds exactly one self-complementary member; an even orbit holds two
/// when all complement orders are even and none when they are all odd.
struct AchiralClassification {
  int orbit_size = 0;
  Parity orbit_size_parity = Parity::kEven;
  // Class-wide parity for even orbits; kNotApplicable for odd orbits,
  // whose members mix both parities.
  Parity complement_order_parity = Parity::kNotApplicable;
  int sc_count = 0;

  bool consistent() const;
  std::string to_json() const;
};

/// Throws std::domain_error when `c` is chiral.
AchiralClassification classify_achiral(const RotationClass& c);

struct IdentityCheck {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  // First counterexample, formatted, when failures > 0.
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

struct IdentityReport {
  int n = 0;
  std::vector<IdentityCheck> checks;

  bool all_passed() const;
};

/// Checks the operator relations on every noncrossing partition of [n]:
/// H^2 = R^-1, T^2 = I, T = CH, TR = R^-1 T, CT = TRC, CR = R^-1 C,
/// H^(2n) = I and CHC = H^-1.
IdentityReport verify_operator_identities(int n);

}  // namespace ncpart
