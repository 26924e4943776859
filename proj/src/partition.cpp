#include "ncpart/partition.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace ncpart {

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kMalformed:
      return "malformed";
    case ParseErrorKind::kEmptyBlock:
      return "empty block";
    case ParseErrorKind::kDuplicateElement:
      return "duplicate element";
    case ParseErrorKind::kOutOfRange:
      return "element out of range";
    case ParseErrorKind::kMissingElement:
      return "missing element";
  }
  return "unknown";
}

namespace {

void sort_blocks(std::vector<Mask>& blocks) {
  std::sort(blocks.begin(), blocks.end(), [](Mask a, Mask b) {
    return std::countr_zero(a) < std::countr_zero(b);
  });
}

}  // namespace

SetPartition::SetPartition(int n, std::vector<Mask> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n_ < 1 || n_ > kMaxGroundSize) {
    throw std::invalid_argument("ground set size out of range: " +
                                std::to_string(n_));
  }
  Mask seen = 0;
  for (Mask b : blocks_) {
    if (b == 0) throw std::invalid_argument("empty block");
    if (b & ~ground_mask(n_)) {
      throw std::invalid_argument("block element outside [n]");
    }
    if (seen & b) throw std::invalid_argument("blocks overlap");
    seen |= b;
  }
  if (seen != ground_mask(n_)) {
    throw std::invalid_argument("blocks do not cover [n]");
  }
  sort_blocks(blocks_);
}

SetPartition SetPartition::from_blocks(
    int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<Mask> masks;
  masks.reserve(blocks.size());
  for (const auto& block : blocks) {
    Mask m = 0;
    for (int e : block) {
      if (e < 1 || e > n) {
        throw std::invalid_argument("block element outside [n]");
      }
      const Mask bit = Mask{1} << (e - 1);
      if (m & bit) throw std::invalid_argument("duplicate element");
      m |= bit;
    }
    masks.push_back(m);
  }
  return SetPartition(n, std::move(masks));
}

SetPartition SetPartition::from_labels(std::span<const int> labels) {
  const int n = static_cast<int>(labels.size());
  std::vector<int> seen_labels;
  std::vector<Mask> masks;
  for (int i = 0; i < n; ++i) {
    auto it = std::find(seen_labels.begin(), seen_labels.end(), labels[i]);
    if (it == seen_labels.end()) {
      seen_labels.push_back(labels[i]);
      masks.push_back(0);
      it = seen_labels.end() - 1;
    }
    masks[it - seen_labels.begin()] |= Mask{1} << i;
  }
  return SetPartition(n, std::move(masks));
}

SetPartition SetPartition::single_block(int n) {
  return SetPartition(n, {ground_mask(n)});
}

SetPartition SetPartition::singletons(int n) {
  std::vector<Mask> masks;
  for (int i = 0; i < n; ++i) masks.push_back(Mask{1} << i);
  return SetPartition(n, std::move(masks));
}

std::size_t SetPartition::block_index_of(int element) const {
  if (element < 1 || element > n_) {
    throw std::out_of_range("element outside [n]");
  }
  const Mask bit = Mask{1} << (element - 1);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i] & bit) return i;
  }
  throw std::logic_error("partition does not cover its ground set");
}

std::vector<std::vector<int>> SetPartition::block_elements() const {
  std::vector<std::vector<int>> out;
  out.reserve(blocks_.size());
  for (Mask b : blocks_) {
    std::vector<int> elems;
    for (Mask rest = b; rest; rest &= rest - 1) {
      elems.push_back(std::countr_zero(rest) + 1);
    }
    out.push_back(std::move(elems));
  }
  return out;
}

std::vector<int> SetPartition::restricted_growth() const {
  std::vector<int> rgs(n_);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (Mask rest = blocks_[b]; rest; rest &= rest - 1) {
      rgs[std::countr_zero(rest)] = static_cast<int>(b);
    }
  }
  return rgs;
}

SetPartition parse_partition(std::string_view text,
                             std::optional<int> expected_n) {
  auto fail = [&](ParseErrorKind kind, const std::string& detail) {
    throw ParseError(kind, std::string(to_string(kind)) + ": " + detail +
                               " in \"" + std::string(text) + "\"");
  };

  std::vector<std::vector<int>> blocks(1);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  int max_seen = 0;
  bool expect_element = true;
  for (;;) {
    skip_space();
    if (expect_element) {
      if (pos >= text.size() || text[pos] == '/') {
        if (blocks.back().empty()) fail(ParseErrorKind::kEmptyBlock, "block");
        fail(ParseErrorKind::kMalformed, "dangling separator");
      }
      if (text[pos] == ',') {
        fail(ParseErrorKind::kMalformed, "dangling separator");
      }
      if (text[pos] == '-' || text[pos] == '+') {
        fail(ParseErrorKind::kOutOfRange, "signed element");
      }
      int value = 0;
      const auto [end, ec] =
          std::from_chars(text.data() + pos, text.data() + text.size(), value);
      if (ec == std::errc::result_out_of_range) {
        fail(ParseErrorKind::kOutOfRange, "element too large");
      }
      if (ec != std::errc()) {
        fail(ParseErrorKind::kMalformed,
             "unexpected character '" + std::string(1, text[pos]) + "'");
      }
      pos = static_cast<std::size_t>(end - text.data());
      blocks.back().push_back(value);
      max_seen = std::max(max_seen, value);
      expect_element = false;
      continue;
    }
    if (pos >= text.size()) break;
    const char c = text[pos++];
    if (c == ',') {
      expect_element = true;
    } else if (c == '/') {
      blocks.emplace_back();
      skip_space();
      if (pos < text.size() && (text[pos] == '/' || text[pos] == ',')) {
        fail(ParseErrorKind::kEmptyBlock, "block between separators");
      }
      if (pos >= text.size()) fail(ParseErrorKind::kEmptyBlock, "final block");
      expect_element = true;
    } else {
      fail(ParseErrorKind::kMalformed,
           "unexpected character '" + std::string(1, c) + "'");
    }
  }

  const int n = expected_n.value_or(max_seen);
  if (n < 1 || n > kMaxGroundSize) {
    fail(ParseErrorKind::kOutOfRange,
         "ground set size " + std::to_string(n) + " unsupported");
  }
  Mask seen = 0;
  std::vector<Mask> masks;
  masks.reserve(blocks.size());
  for (const auto& block : blocks) {
    Mask m = 0;
    for (int e : block) {
      if (e < 1 || e > n) {
        fail(ParseErrorKind::kOutOfRange,
             "element " + std::to_string(e) + " outside [1," +
                 std::to_string(n) + "]");
      }
      const Mask bit = Mask{1} << (e - 1);
      if (seen & bit) {
        fail(ParseErrorKind::kDuplicateElement,
             "element " + std::to_string(e));
      }
      seen |= bit;
      m |= bit;
    }
    masks.push_back(m);
  }
  if (seen != ground_mask(n)) {
    const int gap = std::countr_one(seen) + 1;
    fail(ParseErrorKind::kMissingElement, "element " + std::to_string(gap));
  }
  return SetPartition(n, std::move(masks));
}

std::string format_partition(const SetPartition& p) {
  std::string out;
  out.reserve(3 * static_cast<std::size_t>(p.size()));
  bool first_block = true;
  for (Mask b : p.blocks()) {
    if (!first_block) out.push_back('/');
    first_block = false;
    bool first = true;
    for (Mask rest = b; rest; rest &= rest - 1) {
      if (!first) out.push_back(',');
      first = false;
      out += std::to_string(std::countr_zero(rest) + 1);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const SetPartition& p) {
  return os << format_partition(p);
}

bool is_noncrossing(const SetPartition& p) {
  // Scan 1..n keeping the blocks that have been opened but not finished.
  // Revisiting a block is legal only if it is the innermost open one.
  const auto rgs = p.restricted_growth();
  std::vector<int> open;
  open.reserve(p.block_count());
  for (int i = 1; i <= p.size(); ++i) {
    const int b = rgs[i - 1];
    const Mask block = p.blocks()[b];
    const bool first = min_element(block) == i;
    const bool last = max_element(block) == i;
    if (first) {
      if (!last) open.push_back(b);
      continue;
    }
    if (open.empty() || open.back() != b) return false;
    if (last) open.pop_back();
  }
  return true;
}

std::vector<std::size_t> maximal_blocks(const SetPartition& p) {
  std::vector<std::size_t> out;
  int reach = 0;  // largest max among blocks with smaller minimum
  for (std::size_t i = 0; i < p.block_count(); ++i) {
    const int hi = max_element(p.blocks()[i]);
    if (hi > reach) out.push_back(i);
    reach = std::max(reach, hi);
  }
  return out;
}

PartitionStats stats(const SetPartition& p) {
  PartitionStats s;
  s.block_count = static_cast<int>(p.block_count());
  const int n = p.size();
  for (Mask b : p.blocks()) {
    if (std::has_single_bit(b)) ++s.singletons;
    // Bit i-1 and bit i (wrapping n -> 1) both set.
    const Mask next = ((b >> 1) | ((b & 1) << (n - 1))) & ground_mask(n);
    s.adjacencies += std::popcount(b & next);
  }
  s.maximal_block_count = static_cast<int>(maximal_blocks(p).size());
  return s;
}

void require_noncrossing(const SetPartition& p, std::string_view operation) {
  if (!is_noncrossing(p)) {
    throw NotNoncrossingError(std::string(operation) +
                              " requires a noncrossing partition, got " +
                              format_partition(p));
  }
}

std::vector<SetPartition> enumerate_all(int n) {
  std::vector<SetPartition> out;
  for_each_partition(n, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

std::vector<SetPartition> enumerate_nc(int n) {
  std::vector<SetPartition> out;
  for_each_noncrossing(n, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

}  // namespace ncpart
