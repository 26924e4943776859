#include "ncpart/paths.hpp"

#include <algorithm>

#include "ncpart/symmetry.hpp"

namespace ncpart {

std::size_t LatticePath::up_count() const {
  return static_cast<std::size_t>(
      std::count(steps_.begin(), steps_.end(), Step::kUp));
}

std::size_t LatticePath::down_count() const {
  return steps_.size() - up_count();
}

LatticePath parse_path(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'U':
        steps.push_back(Step::kUp);
        break;
      case 'D':
        steps.push_back(Step::kDown);
        break;
      default:
        throw PathParseError("illegal path character '" +
                             std::string(1, text[i]) + "' at position " +
                             std::to_string(i));
    }
  }
  return LatticePath(std::move(steps));
}

std::string format_path(const LatticePath& path) {
  std::string out;
  out.reserve(path.length());
  for (Step s : path.steps()) out.push_back(s == Step::kUp ? 'U' : 'D');
  return out;
}

bool is_dyck(const LatticePath& path) {
  long height = 0;
  for (Step s : path.steps()) {
    height += s == Step::kUp ? 1 : -1;
    if (height < 0) return false;
  }
  return height == 0;
}

bool is_balanced(const LatticePath& path) {
  return path.up_count() == path.down_count();
}

LatticePath flip(const LatticePath& path) {
  std::vector<Step> steps = path.steps();
  for (Step& s : steps) s = s == Step::kUp ? Step::kDown : Step::kUp;
  return LatticePath(std::move(steps));
}

std::size_t peak_count(const LatticePath& path) {
  std::size_t peaks = 0;
  for (std::size_t i = 0; i + 1 < path.length(); ++i) {
    if (path[i] == Step::kUp && path[i + 1] == Step::kDown) ++peaks;
  }
  return peaks;
}

std::size_t return_count(const LatticePath& path) {
  std::size_t returns = 0;
  long height = 0;
  for (Step s : path.steps()) {
    height += s == Step::kUp ? 1 : -1;
    if (height == 0) ++returns;
  }
  return returns;
}

namespace {

void require_dyck(const LatticePath& path, std::string_view operation) {
  if (!is_dyck(path)) {
    throw std::invalid_argument(std::string(operation) +
                                " requires a Dyck path, got \"" +
                                format_path(path) + "\"");
  }
}

}  // namespace

std::vector<StepPair> match_steps(const LatticePath& path) {
  require_dyck(path, "match_steps");
  std::vector<StepPair> pairs;
  pairs.reserve(path.length() / 2);
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < path.length(); ++i) {
    if (path[i] == Step::kUp) {
      pending.push_back(i);
    } else {
      pairs.push_back({i, pending.back()});
      pending.pop_back();
    }
  }
  return pairs;
}

SetPartition dyck_to_nc(const LatticePath& path) {
  require_dyck(path, "dyck_to_nc");
  if (path.empty()) {
    throw std::invalid_argument("dyck_to_nc: empty path has no partition");
  }
  const int n = static_cast<int>(path.length() / 2);
  if (n > kMaxGroundSize) {
    throw std::invalid_argument("dyck_to_nc: path too long");
  }
  std::vector<int> up_label(path.length(), 0);
  int next = 0;
  for (std::size_t i = 0; i < path.length(); ++i) {
    if (path[i] == Step::kUp) up_label[i] = ++next;
  }
  std::vector<Mask> blocks;
  bool in_descent = false;
  for (const StepPair& pair : match_steps(path)) {
    const bool continues = in_descent && path[pair.down - 1] == Step::kDown;
    if (!continues) blocks.push_back(0);
    blocks.back() |= Mask{1} << (up_label[pair.up] - 1);
    in_descent = true;
  }
  return SetPartition(n, std::move(blocks));
}

LatticePath nc_to_dyck(const SetPartition& p) {
  require_noncrossing(p, "nc_to_dyck");
  std::vector<Step> steps;
  steps.reserve(2 * static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) {
    steps.push_back(Step::kUp);
    const Mask block = p.block(p.block_index_of(i));
    if (max_element(block) == i) {
      steps.insert(steps.end(), static_cast<std::size_t>(std::popcount(block)),
                   Step::kDown);
    }
  }
  return LatticePath(std::move(steps));
}

namespace {

// Splits a walk at each return to height 0.
std::vector<LatticePath> components(const LatticePath& path) {
  std::vector<LatticePath> out;
  std::vector<Step> current;
  long height = 0;
  for (Step s : path.steps()) {
    current.push_back(s);
    height += s == Step::kUp ? 1 : -1;
    if (height == 0) {
      out.emplace_back(std::move(current));
      current.clear();
    }
  }
  return out;
}

}  // namespace

LatticePath sc_to_balanced(const SetPartition& p) {
  const int n = p.size();
  if (n % 2 != 0) {
    throw std::invalid_argument("sc_to_balanced requires even n, got " +
                                std::to_string(n));
  }
  require_noncrossing(p, "sc_to_balanced");
  if (!is_self_complementary(p)) {
    throw std::invalid_argument(
        "sc_to_balanced requires a self-complementary partition, got " +
        format_partition(p));
  }
  const int m = n / 2;
  const Mask low = ground_mask(m);

  std::vector<Mask> restricted;
  for (Mask b : p.blocks()) {
    if (b & low) restricted.push_back(b & low);
  }
  const SetPartition tau(m, std::move(restricted));

  // Marked: the block of p holding tau_i also holds its mirror image.
  auto marked = [&](Mask tau_block) {
    const Mask owner = p.block(p.block_index_of(min_element(tau_block)));
    return (owner & ~low) != 0;
  };

  const auto pieces = components(nc_to_dyck(tau));
  const auto maximal = maximal_blocks(tau);
  std::vector<Step> steps;
  steps.reserve(2 * static_cast<std::size_t>(m));
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const LatticePath piece =
        marked(tau.block(maximal[k])) ? flip(pieces[k]) : pieces[k];
    steps.insert(steps.end(), piece.steps().begin(), piece.steps().end());
  }
  return LatticePath(std::move(steps));
}

SetPartition balanced_to_sc(const LatticePath& path, int m) {
  if (m < 1 || 2 * m > kMaxGroundSize) {
    throw std::invalid_argument("balanced_to_sc: m out of range");
  }
  if (path.length() != 2 * static_cast<std::size_t>(m) || !is_balanced(path)) {
    throw std::invalid_argument("balanced_to_sc requires a balanced path with " +
                                std::to_string(m) + " Up steps, got \"" +
                                format_path(path) + "\"");
  }
  std::vector<Step> dyck;
  std::vector<bool> marks;
  for (const LatticePath& piece : components(path)) {
    // A component lies entirely on one side of the axis.
    const bool below = piece[0] == Step::kDown;
    const LatticePath upright = below ? flip(piece) : piece;
    dyck.insert(dyck.end(), upright.steps().begin(), upright.steps().end());
    marks.push_back(below);
  }
  const SetPartition tau = dyck_to_nc(LatticePath(std::move(dyck)));
  const auto maximal = maximal_blocks(tau);

  const int n = 2 * m;
  auto mirror = [&](Mask b) {
    Mask out = 0;
    for (Mask rest = b; rest; rest &= rest - 1) {
      out |= Mask{1} << (n - 1 - std::countr_zero(rest));
    }
    return out;
  };
  std::vector<Mask> blocks;
  std::size_t next_maximal = 0;
  for (std::size_t i = 0; i < tau.block_count(); ++i) {
    const Mask b = tau.block(i);
    const bool is_max =
        next_maximal < maximal.size() && maximal[next_maximal] == i;
    const bool merge = is_max && marks[next_maximal];
    if (is_max) ++next_maximal;
    if (merge) {
      blocks.push_back(b | mirror(b));
    } else {
      blocks.push_back(b);
      blocks.push_back(mirror(b));
    }
  }
  return SetPartition(n, std::move(blocks));
}

}  // namespace ncpart
