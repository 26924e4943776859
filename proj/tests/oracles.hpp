#pragma once

// Slow reference implementations. Nothing here calls into the library
// except SetPartition construction and formatting.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncpart/partition.hpp"

namespace oracle {

using ncpart::SetPartition;

// labels[i] = block id of element i+1
inline std::vector<int> labels_of(const SetPartition& p) {
  std::vector<int> labels(p.size());
  for (int i = 1; i <= p.size(); ++i) {
    labels[i - 1] = static_cast<int>(p.block_index_of(i));
  }
  return labels;
}

// straight from the definition: no a<b<c<d with a~c, b~d, a!~b
inline bool noncrossing(const std::vector<int>& labels) {
  const int n = static_cast<int>(labels.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (labels[a] == labels[c] && labels[b] == labels[d] &&
              labels[a] != labels[b])
            return false;
  return true;
}

inline bool noncrossing(const SetPartition& p) {
  return noncrossing(labels_of(p));
}

// every restricted growth string of length n
inline std::vector<std::vector<int>> all_label_vectors(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> rgs(n, 0);
  auto rec = [&](auto&& self, int i, int max_label) -> void {
    if (i == n) {
      out.push_back(rgs);
      return;
    }
    for (int v = 0; v <= max_label + 1; ++v) {
      rgs[i] = v;
      self(self, i + 1, std::max(max_label, v));
    }
  };
  if (n == 0) return {{}};
  rgs[0] = 0;
  rec(rec, 1, 0);
  return out;
}

inline SetPartition from_labels(const std::vector<int>& labels) {
  return SetPartition::from_labels(labels);
}

inline int block_total(const std::vector<int>& labels) {
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

// Coarsest partition of the primed points such that, placing i' just after
// i on the circle, the union with p is still noncrossing.
inline SetPartition kreweras(const SetPartition& p) {
  const int n = p.size();
  const std::vector<int> base = labels_of(p);
  const int offset = block_total(base);
  std::vector<int> best;
  int best_blocks = n + 1;
  int ties = 0;
  for (const auto& primed : all_label_vectors(n)) {
    std::vector<int> joint(2 * n);
    for (int i = 0; i < n; ++i) {
      joint[2 * i] = base[i];
      joint[2 * i + 1] = offset + primed[i];
    }
    if (!noncrossing(joint)) continue;
    const int blocks = block_total(primed);
    if (blocks < best_blocks) {
      best_blocks = blocks;
      best = primed;
      ties = 1;
    } else if (blocks == best_blocks) {
      ++ties;
    }
  }
  if (ties != 1) throw std::logic_error("coarsest companion is not unique");
  return from_labels(best);
}

inline SetPartition rotate(const SetPartition& p, int k) {
  const int n = p.size();
  const std::vector<int> labels = labels_of(p);
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[((i + k) % n + n) % n] = labels[i];
  return from_labels(out);
}

inline SetPartition complement(const SetPartition& p) {
  const std::vector<int> labels = labels_of(p);
  return from_labels(std::vector<int>(labels.rbegin(), labels.rend()));
}

inline std::uint64_t catalan(int m) {
  std::vector<std::uint64_t> c(m + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= m; ++k)
    for (int i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
  return c[m];
}

inline std::uint64_t binom(int n, int k) {
  std::vector<std::uint64_t> row(n + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j >= 1; --j) row[j] += row[j - 1];
  return row[k];
}

inline std::uint64_t bell(int n) {
  // Stirling numbers of the second kind
  std::vector<std::vector<std::uint64_t>> s(n + 1,
                                            std::vector<std::uint64_t>(n + 1));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= i; ++k) s[i][k] = k * s[i - 1][k] + s[i - 1][k - 1];
  return std::accumulate(s[n].begin(), s[n].end(), std::uint64_t{0});
}

// rotation classes among the noncrossing partitions, by naive orbit sweep
inline std::set<std::string> nc_rotation_classes(int n) {
  std::set<std::string> seen, reps;
  for (const auto& labels : all_label_vectors(n)) {
    const SetPartition p = from_labels(labels);
    if (!noncrossing(p)) continue;
    const std::string s = ncpart::format_partition(p);
    if (seen.count(s)) continue;
    std::string least = s;
    for (int k = 0; k < n; ++k) {
      const std::string r = ncpart::format_partition(rotate(p, k));
      seen.insert(r);
      least = std::min(least, r);
    }
    reps.insert(least);
  }
  return reps;
}

}  // namespace oracle
