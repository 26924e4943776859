#include "ncpart/trees.hpp"

#include <algorithm>
#include <set>

#include "ncpart/symmetry.hpp"

namespace ncpart {

std::size_t BicoloredPlaneTree::node_count() const {
  std::size_t count = 1;
  for (const auto& child : children) count += child.node_count();
  return count;
}

bool BicoloredPlaneTree::properly_colored() const {
  return std::all_of(children.begin(), children.end(), [&](const auto& c) {
    return c.color != color && c.properly_colored();
  });
}

namespace {

char color_letter(Color c) { return c == Color::kYellow ? 'Y' : 'W'; }

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  BicoloredPlaneTree parse() {
    BicoloredPlaneTree t = parse_node(0);
    if (pos_ != text_.size()) fail("trailing characters");
    return t;
  }

 private:
  static constexpr int kMaxDepth = 4096;

  BicoloredPlaneTree parse_node(int depth) {
    if (depth > kMaxDepth) fail("tree nested too deeply");
    if (pos_ >= text_.size()) fail("expected a color letter");
    BicoloredPlaneTree t;
    switch (text_[pos_]) {
      case 'Y':
        t.color = Color::kYellow;
        break;
      case 'W':
        t.color = Color::kWhite;
        break;
      default:
        fail("expected a color letter");
    }
    ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      for (;;) {
        t.children.push_back(parse_node(depth + 1));
        if (pos_ >= text_.size()) fail("unterminated child list");
        if (text_[pos_] == ',') {
          ++pos_;
        } else if (text_[pos_] == ')') {
          ++pos_;
          break;
        } else {
          fail("expected ',' or ')'");
        }
      }
    }
    return t;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw TreeParseError("tree text: " + what + " at position " +
                         std::to_string(pos_) + " in \"" + std::string(text_) +
                         "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void format_into(const BicoloredPlaneTree& t, std::string& out) {
  out.push_back(color_letter(t.color));
  if (t.children.empty()) return;
  out.push_back('(');
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) out.push_back(',');
    format_into(t.children[i], out);
  }
  out.push_back(')');
}

void require_coloring(const BicoloredPlaneTree& t, std::string_view op) {
  if (!t.properly_colored()) {
    throw ColoringError(std::string(op) +
                        ": adjacent vertices share a color in " +
                        format_tree(t));
  }
}

// Flattened embedding: vertices in preorder, each with its cyclic list of
// neighbors (parent first for non-root vertices).
struct Embedding {
  std::vector<Color> color;
  std::vector<std::vector<std::size_t>> rotation;
  std::vector<std::size_t> parent;

  explicit Embedding(const BicoloredPlaneTree& t) { add(t, 0, false); }

  std::size_t size() const { return color.size(); }

  std::size_t next_after(std::size_t v, std::size_t from) const {
    const auto& rot = rotation[v];
    const auto it = std::find(rot.begin(), rot.end(), from);
    return it + 1 == rot.end() ? rot.front() : *(it + 1);
  }

 private:
  std::size_t add(const BicoloredPlaneTree& t, std::size_t up, bool has_up) {
    const std::size_t v = color.size();
    color.push_back(t.color);
    rotation.emplace_back();
    parent.push_back(up);
    if (has_up) rotation[v].push_back(up);
    for (const auto& child : t.children) {
      const std::size_t c = add(child, v, true);
      rotation[v].push_back(c);
    }
    return v;
  }
};

// Code of the branch at `v` seen from neighbor `from`: children are the
// remaining neighbors of v in cyclic order after `from`.
std::string planted_code(const Embedding& e, std::size_t v, std::size_t from) {
  std::string out(1, color_letter(e.color[v]));
  const auto& rot = e.rotation[v];
  if (rot.size() <= 1) return out;
  const auto start = std::find(rot.begin(), rot.end(), from) - rot.begin();
  out.push_back('(');
  for (std::size_t k = 1; k < rot.size(); ++k) {
    if (k > 1) out.push_back(',');
    out += planted_code(e, rot[(start + k) % rot.size()], v);
  }
  out.push_back(')');
  return out;
}

// Root code at `v` reading its neighbors cyclically from index `offset`.
std::string rooted_code(const Embedding& e, std::size_t v,
                        std::size_t offset) {
  std::string out(1, color_letter(e.color[v]));
  const auto& rot = e.rotation[v];
  if (rot.empty()) return out;
  out.push_back('(');
  for (std::size_t k = 0; k < rot.size(); ++k) {
    if (k) out.push_back(',');
    out += planted_code(e, rot[(offset + k) % rot.size()], v);
  }
  out.push_back(')');
  return out;
}

std::vector<std::size_t> centers_of(const Embedding& e) {
  const std::size_t n = e.size();
  std::vector<std::size_t> nodes_below(n, 1);
  for (std::size_t v = n; v-- > 1;) nodes_below[e.parent[v]] += nodes_below[v];
  std::vector<std::size_t> worst(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t w = v == 0 ? 0 : n - nodes_below[v] - 1;
    for (std::size_t u : e.rotation[v]) {
      if (v != 0 && u == e.parent[v]) continue;
      w = std::max(w, nodes_below[u] - 1);
    }
    worst[v] = w;
  }
  const std::size_t best = *std::min_element(worst.begin(), worst.end());
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (worst[v] == best) out.push_back(v);
  }
  return out;
}

std::string rotation_code(const BicoloredPlaneTree& t) {
  const Embedding e(t);
  const auto centers = centers_of(e);
  std::string best;
  auto consider = [&](std::string candidate) {
    if (best.empty() || candidate < best) best = std::move(candidate);
  };
  if (centers.size() == 1) {
    const std::size_t c = centers[0];
    const std::size_t degree = std::max<std::size_t>(e.rotation[c].size(), 1);
    for (std::size_t k = 0; k < degree; ++k) consider(rooted_code(e, c, k));
  } else {
    // Either end of the center edge, reading from the other end first.
    for (std::size_t i = 0; i < 2; ++i) {
      const std::size_t u = centers[i];
      const std::size_t v = centers[1 - i];
      const auto& rot = e.rotation[u];
      const auto k = std::find(rot.begin(), rot.end(), v) - rot.begin();
      consider(rooted_code(e, u, static_cast<std::size_t>(k)));
    }
  }
  return best;
}

}  // namespace

BicoloredPlaneTree parse_tree(std::string_view text) {
  return TreeParser(text).parse();
}

std::string format_tree(const BicoloredPlaneTree& t) {
  std::string out;
  format_into(t, out);
  return out;
}

BicoloredPlaneTree mirror(const BicoloredPlaneTree& t) {
  BicoloredPlaneTree out{t.color, {}};
  out.children.reserve(t.children.size());
  for (auto it = t.children.rbegin(); it != t.children.rend(); ++it) {
    out.children.push_back(mirror(*it));
  }
  return out;
}

BicoloredPlaneTree swap_colors(const BicoloredPlaneTree& t) {
  BicoloredPlaneTree out{opposite(t.color), {}};
  out.children.reserve(t.children.size());
  for (const auto& c : t.children) out.children.push_back(swap_colors(c));
  return out;
}

namespace {

// Cyclic successor maps on [1, n]: within a block of p (yellow side) and
// within a block of kreweras(p) (white side).
struct Rotations {
  std::vector<int> yellow_next;
  std::vector<int> white_next;

  static std::vector<int> successors(const SetPartition& q) {
    std::vector<int> next(q.size() + 1);
    for (Mask b : q.blocks()) {
      int prev = max_element(b);
      for (Mask rest = b; rest; rest &= rest - 1) {
        const int e = std::countr_zero(rest) + 1;
        next[prev] = e;
        prev = e;
      }
    }
    return next;
  }
};

BicoloredPlaneTree build_branch(const Rotations& r, Color color, int edge) {
  const auto& next = color == Color::kYellow ? r.yellow_next : r.white_next;
  BicoloredPlaneTree node{color, {}};
  for (int e = next[edge]; e != edge; e = next[e]) {
    node.children.push_back(build_branch(r, opposite(color), e));
  }
  return node;
}

}  // namespace

BicoloredPlaneTree nc_to_tree(const SetPartition& p) {
  require_noncrossing(p, "nc_to_tree");
  const Rotations r{Rotations::successors(p),
                    Rotations::successors(kreweras(p))};
  BicoloredPlaneTree root{Color::kWhite, {}};
  int e = 1;
  do {
    root.children.push_back(build_branch(r, Color::kYellow, e));
    e = r.white_next[e];
  } while (e != 1);
  return root;
}

SetPartition tree_to_nc(const BicoloredPlaneTree& t) {
  require_coloring(t, "tree_to_nc");
  if (t.children.empty()) {
    throw std::invalid_argument("tree_to_nc: tree has no edges");
  }
  const Embedding e(t);
  const std::size_t n = e.size() - 1;
  if (n > static_cast<std::size_t>(kMaxGroundSize)) {
    throw std::invalid_argument("tree_to_nc: too many edges");
  }
  // Edge k >= 1 joins vertex k to its parent.
  auto edge_between = [&](std::size_t v, std::size_t u) {
    return v != 0 && u == e.parent[v] ? v : u;
  };
  std::vector<int> label(e.size(), 0);
  std::size_t edge = e.rotation[0].front();
  for (std::size_t k = 1; k <= n; ++k) {
    if (label[edge]) throw std::logic_error("boundary walk revisited an edge");
    label[edge] = static_cast<int>(k);
    // Cross from yellow to white, turn to the next edge there, cross it to
    // its yellow end and turn again.
    std::size_t yellow = edge;
    std::size_t white = e.parent[edge];
    if (e.color[yellow] != Color::kYellow) std::swap(yellow, white);
    const std::size_t next_yellow = e.next_after(white, yellow);
    const std::size_t beyond = e.next_after(next_yellow, white);
    edge = edge_between(next_yellow, beyond);
  }
  std::vector<Mask> blocks;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e.color[v] != Color::kYellow) continue;
    Mask m = 0;
    if (v != 0) m |= Mask{1} << (label[v] - 1);
    for (std::size_t u : e.rotation[v]) {
      if (v != 0 && u == e.parent[v]) continue;
      m |= Mask{1} << (label[u] - 1);
    }
    blocks.push_back(m);
  }
  return SetPartition(static_cast<int>(n), std::move(blocks));
}

std::string_view to_string(Chirality chirality) {
  return chirality == Chirality::kRotationOnly ? "rotation"
                                               : "rotation-reflection";
}

TreeCode canonical_code(const BicoloredPlaneTree& t, Chirality chirality) {
  require_coloring(t, "canonical_code");
  std::string code = rotation_code(t);
  if (chirality == Chirality::kRotationAndReflection) {
    code = std::min(code, rotation_code(mirror(t)));
  }
  return {std::move(code), chirality};
}

std::vector<std::size_t> tree_center(const BicoloredPlaneTree& t) {
  return centers_of(Embedding(t));
}

LeafStats leaf_stats(const BicoloredPlaneTree& t) {
  const Embedding e(t);
  LeafStats s;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e.rotation[v].size() != 1) continue;
    if (e.color[v] == Color::kYellow) {
      ++s.yellow_leaves;
    } else {
      ++s.white_leaves;
    }
  }
  return s;
}

std::vector<TreeCode> enumerate_tree_classes(int n) {
  std::set<std::string> codes;
  for_each_noncrossing(n, [&](const SetPartition& p) {
    codes.insert(canonical_code(nc_to_tree(p)).code);
  });
  std::vector<TreeCode> out;
  out.reserve(codes.size());
  for (const auto& c : codes) out.push_back({c, Chirality::kRotationOnly});
  return out;
}

}  // namespace ncpart
