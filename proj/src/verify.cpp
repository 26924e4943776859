#include "ncpart/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ncpart/paths.hpp"
#include "ncpart/symmetry.hpp"
#include "ncpart/trees.hpp"

namespace ncpart {

bool SuiteReport::all_passed() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

void SuiteReport::add(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, std::move(detail)});
}

namespace {

SetPartition rotation_key(const SetPartition& p) {
  SetPartition best = p;
  for (int k = 1; k < p.size(); ++k) {
    SetPartition r = rotate(p, k);
    if (r < best) best = std::move(r);
  }
  return best;
}

bool achiral(const SetPartition& p) {
  const SetPartition c = complement(p);
  for (int k = 0; k < p.size(); ++k) {
    if (rotate(p, k) == c) return true;
  }
  return false;
}

}  // namespace

TransposeSwapReport check_transpose_swap(int n) {
  TransposeSwapReport r;
  r.n = n;
  std::map<SetPartition, SetPartition> image;
  std::map<SetPartition, int> parity;
  for_each_noncrossing(n, [&](const SetPartition& p) {
    if (!achiral(p) || rotation_period(p) % 2 != 0) return;
    const SetPartition key = rotation_key(p);
    const int own = complement_order(p) % 2;
    if (auto [it, fresh] = parity.emplace(key, own); !fresh && it->second != own) {
      r.swaps_families = false;
    }
    const SetPartition t = transpose(p);
    if (!achiral(t) || rotation_period(t) % 2 != 0 ||
        complement_order(t) % 2 == own) {
      r.swaps_families = false;
    }
    const SetPartition target = rotation_key(t);
    if (auto [it, fresh] = image.emplace(key, target);
        !fresh && it->second != target) {
      r.swaps_families = false;
    }
  });
  for (const auto& [key, p] : parity) {
    (p == 0 ? r.even_order_classes : r.odd_order_classes) += 1;
  }
  for (const auto& [key, target] : image) {
    const auto back = image.find(target);
    if (back == image.end() || back->second != key) r.involution = false;
  }
  return r;
}

TrichotomyReport check_achiral_trichotomy(int n) {
  TrichotomyReport r;
  r.n = n;
  for_each_noncrossing(n, [&](const SetPartition& p) {
    if (rotation_key(p) != p) return;
    const RotationClass c = rotation_orbit(p);
    if (!c.achiral) return;
    ++r.achiral_classes;
    const AchiralClassification k = classify_achiral(c);
    bool ok = k.consistent();
    if (k.orbit_size_parity == Parity::kOdd) {
      ++r.odd_orbit;
    } else {
      const int want = complement_order(c.representative) % 2;
      for (const SetPartition& member : orbit_members(c.representative)) {
        if (complement_order(member) % 2 != want) ok = false;
      }
      ++(k.complement_order_parity == Parity::kEven ? r.even_orbit_even_order
                                                     : r.even_orbit_odd_order);
    }
    if (c.sc_members.size() > 2) ok = false;
    if (!ok) ++r.violations;
  });
  return r;
}

bool SymmetryHistogram::symmetric() const {
  for (std::size_t s = 0; s < counts.size(); ++s) {
    for (std::size_t a = 0; a < counts.size(); ++a) {
      if (counts[s][a] != counts[a][s]) return false;
    }
  }
  return true;
}

SymmetryHistogram singleton_adjacency_histogram(int n, bool noncrossing_only) {
  SymmetryHistogram h;
  h.counts.assign(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  auto tally = [&](const SetPartition& p) {
    const PartitionStats s = stats(p);
    ++h.counts[s.singletons][s.adjacencies];
  };
  if (noncrossing_only) {
    for_each_noncrossing(n, tally);
  } else {
    for_each_partition(n, tally);
  }
  return h;
}

namespace {

std::string eq_detail(const std::string& lhs, const std::string& rhs) {
  return lhs + (lhs == rhs ? " = " : " != ") + rhs;
}

std::string nlabel(int n) { return "n=" + std::to_string(n) + " "; }

void identities_suite(SuiteReport& out, int n) {
  for (const IdentityCheck& c : verify_operator_identities(n).checks) {
    std::string detail = std::to_string(c.cases) + " cases";
    if (!c.passed()) {
      detail += ", " + std::to_string(c.failures) + " failures, first " +
                c.first_failure;
    }
    out.add(nlabel(n) + c.name, c.passed(), detail);
  }
}

void self_complementary_suite(SuiteReport& out, int n, const BruteForceBudget& budget) {
  const Natural want = central_binomial(n);
  const Natural got = sc_nc_brute(n, budget);
  out.add(nlabel(n) + "self-complementary count", got == want,
          eq_detail(got.to_string(), want.to_string()) + " = binom(" +
              std::to_string(n) + "," + std::to_string(n / 2) + ")");
  if (n % 2 != 0) return;

  const int m = n / 2;
  std::set<LatticePath> images;
  bool round_trip = true;
  bool balanced = true;
  std::size_t sources = 0;
  for_each_noncrossing(n, [&](const SetPartition& p) {
    if (!is_self_complementary(p)) return;
    ++sources;
    const LatticePath q = sc_to_balanced(p);
    balanced = balanced && is_balanced(q) && q.length() == 2u * m;
    images.insert(q);
    round_trip = round_trip && balanced_to_sc(q, m) == p;
  });
  out.add(nlabel(n) + "sc_to_balanced injective", images.size() == sources,
          std::to_string(images.size()) + " distinct images of " +
              std::to_string(sources));

  // Every balanced m-path is reached: walk all of them.
  std::size_t paths = 0;
  bool inverse_round_trip = true;
  for (Mask bits = 0; bits < (Mask{1} << n); ++bits) {
    if (std::popcount(bits) != m) continue;
    std::vector<Step> steps(n);
    for (int i = 0; i < n; ++i) {
      steps[i] = (bits >> i) & 1 ? Step::kUp : Step::kDown;
    }
    const LatticePath q(std::move(steps));
    ++paths;
    const SetPartition p = balanced_to_sc(q, m);
    inverse_round_trip = inverse_round_trip && is_noncrossing(p) &&
                         is_self_complementary(p) && sc_to_balanced(p) == q;
  }
  const bool onto = images.size() == paths && balanced;
  out.add(nlabel(n) + "sc_to_balanced surjective", onto,
          std::to_string(images.size()) + " images, " + std::to_string(paths) +
              " balanced paths");
  out.add(nlabel(n) + "balanced round trips", round_trip && inverse_round_trip,
          round_trip && inverse_round_trip ? "both directions" : "mismatch");
}

void achiral_suite(SuiteReport& out, int n, const BruteForceBudget& budget) {
  const Natural want = central_binomial(n);
  const Natural got = achiral_classes_brute(n, budget);
  out.add(nlabel(n) + "achiral classes", got == want,
          eq_detail(got.to_string(), want.to_string()) + " = binom(" +
              std::to_string(n) + "," + std::to_string(n / 2) + ")");
  if (n % 2 != 0) return;
  const TransposeSwapReport t = check_transpose_swap(n);
  const bool ok = t.swaps_families && t.involution &&
                  t.even_order_classes == t.odd_order_classes;
  out.add(nlabel(n) + "transpose swaps complement-order families", ok,
          std::to_string(t.even_order_classes) + " even, " +
              std::to_string(t.odd_order_classes) + " odd" +
              (t.involution ? "" : ", not an involution") +
              (t.swaps_families ? "" : ", parity not swapped"));
}

void trichotomy_suite(SuiteReport& out, int n) {
  const TrichotomyReport r = check_achiral_trichotomy(n);
  out.add(nlabel(n) + "achiral class trichotomy", r.violations == 0,
          std::to_string(r.achiral_classes) + " classes: " +
              std::to_string(r.odd_orbit) + " odd orbit, " +
              std::to_string(r.even_orbit_even_order) + " even/even, " +
              std::to_string(r.even_orbit_odd_order) + " even/odd, " +
              std::to_string(r.violations) + " violations");
}

void clickable_suite(SuiteReport& out, int n) {
  for (int d : divisors(n)) {
    if (d == n) continue;
    const Natural want = binom(2 * d, d);
    const Natural got = clickable_count_brute(n, d);
    out.add(nlabel(n) + "d=" + std::to_string(d) + " clickable", got == want,
            eq_detail(got.to_string(), want.to_string()));
  }
  bool all = true;
  std::string first_bad;
  for (int k = 1; k < n; ++k) {
    const int g = std::gcd(n, k);
    const Natural got = rotation_fixed_count_brute(n, k);
    if (got != binom(2 * g, g)) {
      if (all) first_bad = "k=" + std::to_string(k) + " gives " + got.to_string();
      all = false;
    }
  }
  out.add(nlabel(n) + "fixed points of R^k = binom(2g,g), g=gcd(n,k)", all,
          all ? std::to_string(n - 1) + " rotations" : first_bad);
}

void trees_suite(SuiteReport& out, int n) {
  std::set<std::string> codes;
  std::set<std::string> reflection_fixed;
  bool leaves = true;
  bool round_trip = true;
  bool rotation_invariant = true;
  bool achirality = true;
  std::uint64_t orbit_total = 0;
  for_each_noncrossing(n, [&](const SetPartition& p) {
    const BicoloredPlaneTree t = nc_to_tree(p);
    const std::string code = canonical_code(t).code;
    codes.insert(code);
    const bool mirrored_equal = canonical_code(mirror(t)).code == code;
    if (mirrored_equal) reflection_fixed.insert(code);

    const PartitionStats s = stats(p);
    const LeafStats l = leaf_stats(t);
    leaves = leaves && l.yellow_leaves == s.singletons &&
             l.white_leaves == s.adjacencies;
    round_trip = round_trip && tree_to_nc(t) == p;
    rotation_invariant =
        rotation_invariant && canonical_code(nc_to_tree(rotate(p, 1))).code == code;

    const SetPartition key = rotation_key(p);
    if (key == p) {
      orbit_total += static_cast<std::uint64_t>(rotation_period(p));
      achirality = achirality && (achiral(p) == mirrored_equal);
    }
  });
  const Natural ncpp = ncpp_formula(n);
  out.add(nlabel(n) + "tree classes = ncpp", Natural(codes.size()) == ncpp,
          eq_detail(std::to_string(codes.size()), ncpp.to_string()));
  const Natural cb = central_binomial(n);
  out.add(nlabel(n) + "reflection-fixed trees = binom(n,n/2)",
          Natural(reflection_fixed.size()) == cb,
          eq_detail(std::to_string(reflection_fixed.size()), cb.to_string()));
  out.add(nlabel(n) + "achiral class <=> mirror-symmetric tree", achirality);
  out.add(nlabel(n) + "leaves = (singletons, adjacencies)", leaves);
  out.add(nlabel(n) + "tree_to_nc inverts nc_to_tree", round_trip);
  out.add(nlabel(n) + "codes invariant under rotation", rotation_invariant);
  out.add(nlabel(n) + "sum of orbit sizes = Catalan", Natural(orbit_total) ==
                                                      catalan(n),
          eq_detail(std::to_string(orbit_total), catalan(n).to_string()));
}

void dyck_suite(SuiteReport& out, int n) {
  bool forward = true;
  bool peaks = true;
  bool returns = true;
  std::uint64_t count = 0;
  for_each_noncrossing(n, [&](const SetPartition& p) {
    ++count;
    const LatticePath path = nc_to_dyck(p);
    forward = forward && is_dyck(path) && dyck_to_nc(path) == p;
    const PartitionStats s = stats(p);
    peaks = peaks && peak_count(path) == static_cast<std::size_t>(s.block_count);
    returns = returns &&
              return_count(path) == static_cast<std::size_t>(s.maximal_block_count);
  });
  // Every Dyck path, generated independently of the partitions.
  bool backward = true;
  std::uint64_t dyck_paths = 0;
  for (Mask bits = 0; bits < (Mask{1} << (2 * n)); ++bits) {
    if (std::popcount(bits) != n) continue;
    std::vector<Step> steps(2 * n);
    for (int i = 0; i < 2 * n; ++i) {
      steps[i] = (bits >> i) & 1 ? Step::kUp : Step::kDown;
    }
    const LatticePath path(std::move(steps));
    if (!is_dyck(path)) continue;
    ++dyck_paths;
    backward = backward && nc_to_dyck(dyck_to_nc(path)) == path;
  }
  out.add(nlabel(n) + "nc -> dyck -> nc", forward,
          std::to_string(count) + " partitions");
  out.add(nlabel(n) + "dyck -> nc -> dyck", backward && dyck_paths == count,
          std::to_string(dyck_paths) + " paths");
  out.add(nlabel(n) + "peaks = blocks", peaks);
  out.add(nlabel(n) + "returns = maximal blocks", returns);
}

void statistics_suite(SuiteReport& out, int n, int all_limit) {
  out.add(nlabel(n) + "noncrossing (singletons, adjacencies) symmetric",
          singleton_adjacency_histogram(n, true).symmetric());
  if (n <= all_limit) {
    out.add(nlabel(n) + "all partitions (singletons, adjacencies) symmetric",
            singleton_adjacency_histogram(n, false).symmetric());
  }
}

void table_suite(SuiteReport& out, int n_max) {
  const auto reference = reference_table();
  for (int n = 1; n <= n_max; ++n) {
    const CountRow row = count_row(n);
    std::string detail = "ncpp " + row.ncpp.to_string() + ", dihedral " +
                         row.dihedral.to_string() + ", chiral " +
                         row.chiral_pairs.to_string();
    bool ok = row.consistent() &&
              bicolored_tree_formula(n) == row.ncpp;
    if (static_cast<std::size_t>(n) <= reference.size()) {
      const ReferenceRow& ref = reference[n - 1];
      ok = ok && row.ncpp == ref.ncpp && row.dihedral == ref.dihedral &&
           row.chiral_pairs == ref.chiral_pairs;
      detail += ok ? " (matches reference)" : " (differs from reference)";
    }
    out.add(nlabel(n) + "table row", ok, detail);
  }
}

constexpr std::string_view kSuites[] = {
    "identities", "theorem1", "theorem2",   "trees", "clickable",
    "lemma1",     "table",    "dyck",       "statistics"};

}  // namespace

std::vector<std::string_view> suite_names() {
  return {std::begin(kSuites), std::end(kSuites)};
}

int suite_budget(std::string_view suite, const BruteForceBudget& budget) {
  if (suite == "theorem1") return budget.self_complementary;
  if (suite == "statistics") return budget.conjecture;
  // Formula rows; 128-bit arithmetic overflows somewhat above 60.
  if (suite == "table") return 60;
  return budget.orbits;
}

SuiteReport run_suite(std::string_view suite, int n,
                      const BruteForceBudget& budget) {
  if (std::find(std::begin(kSuites), std::end(kSuites), suite) ==
      std::end(kSuites)) {
    throw std::invalid_argument("unknown suite: " + std::string(suite));
  }
  if (n < 1) throw std::invalid_argument("suite size must be positive");
  const int limit = suite_budget(suite, budget);
  if (n > limit) {
    throw BudgetError("suite " + std::string(suite) + ": n=" +
                      std::to_string(n) + " exceeds the budget " +
                      std::to_string(limit));
  }
  SuiteReport out{std::string(suite), {}};
  if (suite == "table") {
    table_suite(out, n);
    return out;
  }
  for (int k = 1; k <= n; ++k) {
    if (suite == "identities") identities_suite(out, k);
    if (suite == "theorem1") self_complementary_suite(out, k, budget);
    if (suite == "theorem2") achiral_suite(out, k, budget);
    if (suite == "lemma1") trichotomy_suite(out, k);
    if (suite == "clickable" && k >= 2) clickable_suite(out, k);
    if (suite == "trees") trees_suite(out, k);
    if (suite == "dyck") dyck_suite(out, k);
    if (suite == "statistics") statistics_suite(out, k, budget.conjecture);
  }
  return out;
}

}  // namespace ncpart
