#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ncpart/partition.hpp"

namespace ncpart {

enum class Step : unsigned char { kUp, kDown };

class PathParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Lattice path of unit Up (1,1) and Down (1,-1) steps starting at height 0.
class LatticePath {
 public:
  LatticePath() = default;
  explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {}

  std::size_t length() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }
  const std::vector<Step>& steps() const noexcept { return steps_; }
  Step operator[](std::size_t i) const { return steps_[i]; }

  std::size_t up_count() const;
  std::size_t down_count() const;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
  friend auto operator<=>(const LatticePath&, const LatticePath&) = default;

 private:
  std::vector<Step> steps_;
};

/// Text over {U, D}; the empty string is the empty path.
LatticePath parse_path(std::string_view text);
std::string format_path(const LatticePath& path);

/// Never below the axis and ends at height 0.
bool is_dyck(const LatticePath& path);
/// Equal numbers of Up and Down steps.
bool is_balanced(const LatticePath& path);

/// Swaps Up and Down throughout.
LatticePath flip(const LatticePath& path);

std::size_t peak_count(const LatticePath& path);
/// Steps that bring the walk back to height 0.
std::size_t return_count(const LatticePath& path);

struct StepPair {
  std::size_t down;
  std::size_t up;

  friend bool operator==(const StepPair&, const StepPair&) = default;
};

/// Pairs each Down step with the nearest unmatched earlier Up step, in Down
/// order. Throws std::invalid_argument if `path` is not Dyck.
std::vector<StepPair> match_steps(const LatticePath& path);

/// Numbers Up steps 1..n left to right, labels each Down step with its
/// matching Up step; each descent's labels form a block.
SetPartition dyck_to_nc(const LatticePath& path);

/// Inverse of dyck_to_nc. Throws NotNoncrossingError.
LatticePath nc_to_dyck(const SetPartition& p);

/// Self-complementary noncrossing partition of [2m] -> balanced path with m
/// Up steps. Restricting blocks to [m] gives a noncrossing partition whose
/// maximal blocks are marked when they merge with their mirror image; the
/// Dyck path of the restriction has every component ending in a marked
/// return turned upside down.
LatticePath sc_to_balanced(const SetPartition& p);

/// Inverse of sc_to_balanced. Throws std::invalid_argument unless `path`
/// is balanced with m Up steps.
SetPartition balanced_to_sc(const LatticePath& path, int m);

}  // namespace ncpart
