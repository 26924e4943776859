#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ncpart {

// Blocks are bit-sets over the ground set: element i (1-based) is bit i-1.
using Mask = std::uint64_t;

inline constexpr int kMaxGroundSize = 64;

enum class ParseErrorKind {
  kMalformed,
  kEmptyBlock,
  kDuplicateElement,
  kOutOfRange,
  kMissingElement,
};

std::string_view to_string(ParseErrorKind kind);

class ParseError : public std::invalid_argument {
 public:
  ParseError(ParseErrorKind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  ParseErrorKind kind() const noexcept { return kind_; }

 private:
  ParseErrorKind kind_;
};

// Raised by operations whose precondition is a noncrossing input.
class NotNoncrossingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A partition of {1, ..., n} held in canonical form: blocks are sorted by
/// their minimum element, and within a block elements ascend (implicit in
/// the bit-set representation).
class SetPartition {
 public:
  /// Validates that `blocks` are non-empty, pairwise disjoint and cover
  /// [n]; reorders them canonically.
  SetPartition(int n, std::vector<Mask> blocks);

  static SetPartition from_blocks(int n,
                                  const std::vector<std::vector<int>>& blocks);

  /// `labels[i-1]` names the block of element i; any label values work.
  static SetPartition from_labels(std::span<const int> labels);

  /// The one-block partition {1..n}.
  static SetPartition single_block(int n);
  /// The all-singletons partition.
  static SetPartition singletons(int n);

  int size() const noexcept { return n_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  std::span<const Mask> blocks() const noexcept { return blocks_; }
  Mask block(std::size_t index) const { return blocks_.at(index); }

  /// Index (in canonical order) of the block holding `element`.
  std::size_t block_index_of(int element) const;

  std::vector<std::vector<int>> block_elements() const;

  /// Restricted growth string: entry i-1 is the canonical block index of i.
  std::vector<int> restricted_growth() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

 private:
  struct Trusted {};
  SetPartition(Trusted, int n, std::vector<Mask> blocks)
      : n_(n), blocks_(std::move(blocks)) {}

  template <class Visit>
  friend void for_each_partition(int n, Visit&& visit);
  template <class Visit>
  friend void for_each_noncrossing(int n, Visit&& visit);

  int n_;
  std::vector<Mask> blocks_;
};

inline Mask ground_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline int min_element(Mask block) { return std::countr_zero(block) + 1; }
inline int max_element(Mask block) { return 64 - std::countl_zero(block); }

/// Parses "1,3,4/2/5,6". Without `expected_n` the ground set size is the
/// largest element seen.
SetPartition parse_partition(std::string_view text,
                             std::optional<int> expected_n = std::nullopt);

std::string format_partition(const SetPartition& p);

std::ostream& operator<<(std::ostream& os, const SetPartition& p);

/// Linear stack scan; no quadruple enumeration.
bool is_noncrossing(const SetPartition& p);

struct PartitionStats {
  int singletons = 0;
  // i with i and i+1 (circularly, n+1 = 1) in the same block.
  int adjacencies = 0;
  int block_count = 0;
  // Blocks not nested under an arc of another block.
  int maximal_block_count = 0;

  friend bool operator==(const PartitionStats&,
                         const PartitionStats&) = default;
};

PartitionStats stats(const SetPartition& p);

/// Canonical indices of the maximal blocks, ascending by minimum element.
std::vector<std::size_t> maximal_blocks(const SetPartition& p);

void require_noncrossing(const SetPartition& p, std::string_view operation);

// ---------------------------------------------------------------------------
// Exhaustive generation.
//
// Both generators visit partitions in lexicographic order of their
// restricted growth strings. for_each_noncrossing yields exactly the
// noncrossing subsequence of for_each_partition, but prunes crossing
// prefixes instead of filtering.

template <class Visit>
void for_each_partition(int n, Visit&& visit) {
  if (n < 1 || n > kMaxGroundSize) {
    throw std::invalid_argument("ground set size out of range: " +
                                std::to_string(n));
  }
  // rgs[i] is the block of element i+1; prefix_max[i] = max(rgs[0..i]).
  std::vector<int> rgs(n, 0);
  std::vector<int> prefix_max(n, 0);
  std::vector<Mask> blocks;
  blocks.reserve(n);
  for (;;) {
    blocks.assign(prefix_max[n - 1] + 1, 0);
    for (int i = 0; i < n; ++i) blocks[rgs[i]] |= Mask{1} << i;
    visit(SetPartition(SetPartition::Trusted{}, n, blocks));

    int i = n - 1;
    while (i > 0 && rgs[i] > prefix_max[i - 1]) --i;
    if (i == 0) return;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (int j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

namespace detail {

// Blocks that may still receive elements form a stack ordered by block
// index. Joining block b at position i closes every open block above b.
template <class Visit>
void extend_noncrossing(int n, int next, std::vector<Mask>& blocks,
                        std::vector<int>& open, Visit& visit,
                        const auto& emit) {
  if (next > n) {
    emit(blocks);
    return;
  }
  const Mask bit = Mask{1} << (next - 1);
  for (std::size_t depth = 0; depth < open.size(); ++depth) {
    const int b = open[depth];
    std::vector<int> saved(open.begin() + depth + 1, open.end());
    open.resize(depth + 1);
    blocks[b] |= bit;
    extend_noncrossing(n, next + 1, blocks, open, visit, emit);
    blocks[b] &= ~bit;
    open.insert(open.end(), saved.begin(), saved.end());
  }
  blocks.push_back(bit);
  open.push_back(static_cast<int>(blocks.size()) - 1);
  extend_noncrossing(n, next + 1, blocks, open, visit, emit);
  open.pop_back();
  blocks.pop_back();
}

}  // namespace detail

template <class Visit>
void for_each_noncrossing(int n, Visit&& visit) {
  if (n < 1 || n > kMaxGroundSize) {
    throw std::invalid_argument("ground set size out of range: " +
                                std::to_string(n));
  }
  std::vector<Mask> blocks;
  std::vector<int> open;
  blocks.reserve(n);
  open.reserve(n);
  auto emit = [&](const std::vector<Mask>& b) {
    visit(SetPartition(SetPartition::Trusted{}, n, b));
  };
  detail::extend_noncrossing(n, 1, blocks, open, visit, emit);
}

std::vector<SetPartition> enumerate_all(int n);
std::vector<SetPartition> enumerate_nc(int n);

}  // namespace ncpart
