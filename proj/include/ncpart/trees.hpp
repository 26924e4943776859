#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ncpart/partition.hpp"

namespace ncpart {

enum class Color : unsigned char { kYellow, kWhite };

inline Color opposite(Color c) {
  return c == Color::kYellow ? Color::kWhite : Color::kYellow;
}

/// Plane tree stored rooted with ordered children. The cyclic order at a
/// non-root vertex is (parent, children...); at the root it is the children
/// read cyclically. The root is a representation detail.
struct BicoloredPlaneTree {
  Color color = Color::kWhite;
  std::vector<BicoloredPlaneTree> children;

  std::size_t node_count() const;
  std::size_t edge_count() const { return node_count() - 1; }
  bool properly_colored() const;

  friend bool operator==(const BicoloredPlaneTree&,
                         const BicoloredPlaneTree&) = default;
};

class TreeParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ColoringError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "W(Y,Y,Y)": a color letter, then optionally the parenthesized,
/// comma-separated child trees.
BicoloredPlaneTree parse_tree(std::string_view text);
std::string format_tree(const BicoloredPlaneTree& t);

/// Reverses every cyclic order (the reflected embedding).
BicoloredPlaneTree mirror(const BicoloredPlaneTree& t);
BicoloredPlaneTree swap_colors(const BicoloredPlaneTree& t);

/// Yellow vertices are the blocks of `p`, white vertices the blocks of
/// kreweras(p); element i is the edge from its block to the gap block of i'.
/// Cyclic orders follow the circle. Rooted at the white end of edge 1, whose
/// first child edge is edge 1.
BicoloredPlaneTree nc_to_tree(const SetPartition& p);

/// Walks the boundary of the tree starting along the root's first child
/// edge and numbers edges as they are crossed from yellow to white; each
/// yellow vertex contributes the block of its edge numbers.
/// tree_to_nc(nc_to_tree(p)) == p.
SetPartition tree_to_nc(const BicoloredPlaneTree& t);

enum class Chirality { kRotationOnly, kRotationAndReflection };

std::string_view to_string(Chirality chirality);

struct TreeCode {
  std::string code;
  Chirality chirality = Chirality::kRotationOnly;

  friend bool operator==(const TreeCode&, const TreeCode&) = default;
  friend auto operator<=>(const TreeCode&, const TreeCode&) = default;
};

/// Canonical code of the unrooted plane tree. The code is itself a rooted
/// tree text: rooted at the center (or the better end of the center edge),
/// with the lexicographically least cyclic reading of the root's neighbors.
TreeCode canonical_code(const BicoloredPlaneTree& t,
                        Chirality chirality = Chirality::kRotationOnly);

/// Preorder indices (root = 0) of the vertices minimizing the largest edge
/// count among the components left by deleting the vertex. One vertex, or
/// two adjacent ones.
std::vector<std::size_t> tree_center(const BicoloredPlaneTree& t);

struct LeafStats {
  int yellow_leaves = 0;
  int white_leaves = 0;

  friend bool operator==(const LeafStats&, const LeafStats&) = default;
};

LeafStats leaf_stats(const BicoloredPlaneTree& t);

/// Distinct rotation-only codes of nc_to_tree over the noncrossing
/// partitions of [n], sorted.
std::vector<TreeCode> enumerate_tree_classes(int n);

}  // namespace ncpart
