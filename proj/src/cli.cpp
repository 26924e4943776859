#include "ncpart/cli.hpp"

#include <functional>
#include <optional>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ncpart/census.hpp"
#include "ncpart/partition.hpp"
#include "ncpart/paths.hpp"
#include "ncpart/symmetry.hpp"
#include "ncpart/trees.hpp"
#include "ncpart/verify.hpp"

namespace ncpart::cli {

namespace {

using json = nlohmann::ordered_json;

// Thrown for bad combinations of otherwise well-formed flags.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string format = "text";
  std::optional<int> budget;

  // count
  std::string sequence;
  std::optional<int> n;
  std::optional<int> n_max;
  bool brute_force = false;

  // enumerate
  bool nc_only = false;
  std::string classes;
  bool self_complementary = false;

  // map / orbit
  std::string operation;
  std::optional<std::string> partition;
  std::optional<std::string> path;
  std::optional<std::string> tree;
  long long k = 1;
  std::optional<std::string> chirality;

  // verify
  std::string suite;

  BruteForceBudget budgets() const {
    return budget ? BruteForceBudget::uniform(*budget) : BruteForceBudget{};
  }
};

json json_count(const Natural& x) {
  if (x.fits_u64()) return x.to_u64();
  return x.to_string();
}

// ---------------------------------------------------------------------------
// count

Natural count_value(const std::string& sequence, int n, bool brute,
                    const BruteForceBudget& budget) {
  if (!brute) {
    if (sequence == "ncpp") return ncpp_formula(n);
    if (sequence == "dihedral") return dihedral_formula(n);
    if (sequence == "chiral") return chiral_pairs_formula(n);
    if (sequence == "sc") return central_binomial(n);
    if (sequence == "trees") return bicolored_tree_formula(n);
    if (sequence == "catalan") return catalan(n);
    if (sequence == "bell") return bell(n);
    if (sequence == "fpt") return fpt_formula(n);
  } else {
    if (sequence == "ncpp") return ncpp_brute(n, budget);
    if (sequence == "dihedral") return dihedral_brute(n, budget);
    if (sequence == "chiral") {
      return ncpp_brute(n, budget) - dihedral_brute(n, budget);
    }
    if (sequence == "sc") return sc_nc_brute(n, budget);
    if (sequence == "fpt") return fpt_brute(n, budget);
    if (n > budget.orbits) {
      throw BudgetError("count --brute-force: n=" + std::to_string(n) +
                        " exceeds the brute-force budget " +
                        std::to_string(budget.orbits));
    }
    if (sequence == "trees") return enumerate_tree_classes(n).size();
    std::uint64_t count = 0;
    auto tally = [&](const SetPartition&) { ++count; };
    if (sequence == "catalan") for_each_noncrossing(n, tally);
    if (sequence == "bell") for_each_partition(n, tally);
    return count;
  }
  throw UsageError("unknown sequence: " + sequence);
}

int do_count(const Options& o, std::ostream& out) {
  if (o.n.has_value() == o.n_max.has_value()) {
    throw UsageError("count needs exactly one of --n and --n-max");
  }
  const int lo = o.n ? *o.n : 1;
  const int hi = o.n ? *o.n : *o.n_max;
  if (lo < 1 || hi < 1) throw UsageError("n must be positive");
  std::vector<std::pair<int, Natural>> values;
  for (int n = lo; n <= hi; ++n) {
    values.emplace_back(n, count_value(o.sequence, n, o.brute_force,
                                       o.budgets()));
  }
  if (o.format == "csv") {
    out << "n," << o.sequence << '\n';
    for (const auto& [n, v] : values) out << n << ',' << v << '\n';
  } else if (o.format == "json") {
    json arr = json::array();
    for (const auto& [n, v] : values) {
      arr.push_back({{"n", n}, {o.sequence, json_count(v)}});
    }
    out << (o.n ? arr[0] : arr).dump() << '\n';
  } else if (o.n) {
    out << values[0].second << '\n';
  } else {
    for (const auto& [n, v] : values) out << n << ' ' << v << '\n';
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------
// enumerate

bool is_class_representative(const SetPartition& p, bool dihedral) {
  const std::string own = format_partition(p);
  auto beats = [&](const SetPartition& q) {
    for (int k = 0; k < q.size(); ++k) {
      if (format_partition(rotate(q, k)) < own) return true;
    }
    return false;
  };
  if (beats(p)) return false;
  return !(dihedral && beats(complement(p)));
}

int do_enumerate(const Options& o, std::ostream& out) {
  if (!o.n) throw UsageError("enumerate needs --n");
  const int n = *o.n;
  const bool with_path = o.nc_only;
  if (o.format == "csv") out << (with_path ? "path,partition\n" : "partition\n");
  auto emit = [&](const SetPartition& p) {
    if (o.self_complementary && !is_self_complementary(p)) return;
    if (!o.classes.empty() &&
        !is_class_representative(p, o.classes == "dihedral")) {
      return;
    }
    const std::string text = format_partition(p);
    if (o.format == "csv") {
      // partitions contain commas, so the field is always quoted
      if (with_path) out << format_path(nc_to_dyck(p)) << ',';
      out << '"' << text << "\"\n";
    } else if (o.format == "json") {
      json j;
      j["partition"] = text;
      if (with_path) j["path"] = format_path(nc_to_dyck(p));
      out << j.dump() << '\n';
    } else {
      out << text << '\n';
    }
  };
  if (o.nc_only) {
    for_each_noncrossing(n, emit);
  } else {
    for_each_partition(n, emit);
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------
// map

const std::string& need(const std::optional<std::string>& value,
                        const char* flag, const std::string& op) {
  if (!value) throw UsageError("map " + op + " needs " + flag);
  return *value;
}

Chirality parse_chirality(const std::string& text) {
  if (text == "rotation") return Chirality::kRotationOnly;
  return Chirality::kRotationAndReflection;
}

std::string map_value(const Options& o) {
  const std::string& op = o.operation;
  auto partition = [&] { return parse_partition(need(o.partition, "--partition", op)); };
  auto path = [&] { return parse_path(need(o.path, "--path", op)); };
  auto tree = [&] { return parse_tree(need(o.tree, "--tree", op)); };

  if (op == "nc-to-dyck") return format_path(nc_to_dyck(partition()));
  if (op == "dyck-to-nc") return format_partition(dyck_to_nc(path()));
  if (op == "sc-to-balanced") return format_path(sc_to_balanced(partition()));
  if (op == "balanced-to-sc") {
    const LatticePath q = path();
    if (q.length() % 2 != 0 || q.empty()) {
      throw std::invalid_argument("balanced-to-sc needs a non-empty path of even length");
    }
    return format_partition(balanced_to_sc(q, static_cast<int>(q.length() / 2)));
  }
  if (op == "nc-to-tree") {
    const BicoloredPlaneTree t = nc_to_tree(partition());
    if (o.chirality) return canonical_code(t, parse_chirality(*o.chirality)).code;
    return format_tree(t);
  }
  if (op == "tree-to-nc") return format_partition(tree_to_nc(tree()));
  if (op == "tree-code") {
    return canonical_code(tree(), parse_chirality(o.chirality.value_or("rotation")))
        .code;
  }
  if (op == "kreweras") return format_partition(kreweras(partition()));
  if (op == "transpose") return format_partition(transpose(partition()));
  if (op == "complement") return format_partition(complement(partition()));
  if (op == "rotate") return format_partition(rotate(partition(), o.k));
  throw UsageError("unknown map operation: " + op);
}

int do_map(const Options& o, std::ostream& out) {
  const std::string value = map_value(o);
  if (o.format == "json") {
    json j;
    j["operation"] = o.operation;
    j["output"] = value;
    out << j.dump() << '\n';
  } else {
    out << value << '\n';
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------
// orbit

int do_orbit(const Options& o, std::ostream& out) {
  if (!o.partition) throw UsageError("orbit needs --partition");
  const RotationClass c = rotation_orbit(parse_partition(*o.partition));
  std::vector<std::string> members;
  for (const auto& m : orbit_members(c.representative)) {
    members.push_back(format_partition(m));
  }
  std::optional<AchiralClassification> k;
  if (c.achiral) k = classify_achiral(c);

  if (o.format == "json") {
    json j;
    j["representative"] = format_partition(c.representative);
    j["orbit_size"] = c.orbit_size;
    j["achiral"] = c.achiral;
    j["sc_members"] = c.sc_members;
    j["complement_order_parity"] = std::string(to_string(c.complement_order_parity));
    j["members"] = members;
    if (k) j["classification"] = json::parse(k->to_json());
    out << j.dump() << '\n';
    return kSuccess;
  }
  out << "representative: " << format_partition(c.representative) << '\n'
      << "orbit_size: " << c.orbit_size << '\n'
      << "achiral: " << (c.achiral ? "true" : "false") << '\n'
      << "sc_members:";
  for (int i : c.sc_members) out << ' ' << i;
  out << '\n'
      << "complement_order_parity: " << to_string(c.complement_order_parity)
      << '\n';
  if (k) out << "classification: " << k->to_json() << '\n';
  out << "members:";
  for (const auto& m : members) out << ' ' << m;
  out << '\n';
  return kSuccess;
}

// ---------------------------------------------------------------------------
// verify / table / conjecture

int do_verify(const Options& o, std::ostream& out) {
  const std::optional<int> size = o.suite == "table" && o.n_max ? o.n_max : o.n;
  if (!size) {
    throw UsageError("verify " + o.suite + " needs --n" +
                     (o.suite == "table" ? std::string(" or --n-max") : ""));
  }
  const SuiteReport r = run_suite(o.suite, *size, o.budgets());
  const std::size_t failed = r.failures();
  if (o.format == "json") {
    json checks = json::array();
    for (const auto& c : r.checks) {
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    json j;
    j["suite"] = r.suite;
    j["checks"] = checks;
    j["passed"] = failed == 0;
    out << j.dump() << '\n';
  } else {
    for (const auto& c : r.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) out << ": " << c.detail;
      out << '\n';
    }
    out << "summary: " << r.suite << ' ' << r.checks.size() - failed
        << " passed, " << failed << " failed\n";
  }
  return failed == 0 ? kSuccess : kVerificationFailed;
}

int do_table(const Options& o, std::ostream& out) {
  const int n_max = o.n_max.value_or(22);
  if (n_max < 1) throw UsageError("--n-max must be positive");
  const int brute = o.brute_force ? std::min(n_max, o.budgets().orbits) : 0;
  const auto rows = table(n_max, brute);
  if (o.format == "csv") {
    out << table_csv(rows);
  } else if (o.format == "json") {
    out << table_json(rows);
  } else {
    out << table_text(rows);
  }
  return kSuccess;
}

int do_conjecture(const Options& o, std::ostream& out) {
  if (!o.n) throw UsageError("conjecture needs --n");
  const ConjectureResult r = conjecture_check(*o.n, o.budgets());
  if (o.format == "json") {
    json j;
    j["n"] = r.n;
    j["sc_partitions"] = r.sc_partitions;
    j["sc_rotation_classes"] = r.sc_rotation_classes;
    j["equal"] = r.equal;
    out << j.dump() << '\n';
  } else if (o.format == "csv") {
    out << "n,sc_partitions,sc_rotation_classes,equal\n"
        << r.n << ',' << r.sc_partitions << ',' << r.sc_rotation_classes << ','
        << (r.equal ? "true" : "false") << '\n';
  } else {
    out << "n=" << r.n << " sc_partitions=" << r.sc_partitions
        << " sc_rotation_classes=" << r.sc_rotation_classes
        << " equal=" << (r.equal ? "true" : "false") << '\n';
  }
  return r.equal ? kSuccess : kVerificationFailed;
}

void add_format(CLI::App* app, Options& o) {
  app->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
}

void add_budget(CLI::App* app, Options& o) {
  app->add_option("--budget", o.budget,
                  "Override every brute-force size limit");
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Noncrossing partitions under rotation and reflection",
               "ncpart"};
  app.require_subcommand(1);

  auto* count = app.add_subcommand("count", "Print a sequence value");
  count->add_option("--sequence", o.sequence)
      ->required()
      ->check(CLI::IsMember(
          {"ncpp", "dihedral", "chiral", "sc", "trees", "catalan", "bell", "fpt"}));
  auto* count_n = count->add_option("--n", o.n);
  count->add_option("--n-max", o.n_max)->excludes(count_n);
  count->add_flag("--brute-force", o.brute_force,
                  "Count by exhaustive enumeration instead of formula");
  add_format(count, o);
  add_budget(count, o);

  auto* enumerate = app.add_subcommand("enumerate", "Stream partitions of [n]");
  enumerate->add_option("--n", o.n)->required();
  enumerate->add_flag("--nc-only", o.nc_only, "Noncrossing partitions only");
  enumerate->add_option("--classes", o.classes,
                        "One lexicographically least member per class")
      ->check(CLI::IsMember({"rotation", "dihedral"}));
  enumerate->add_flag("--self-complementary", o.self_complementary);
  add_format(enumerate, o);

  auto* map = app.add_subcommand("map", "Apply one bijection or operator");
  map->add_option("operation", o.operation)
      ->required()
      ->check(CLI::IsMember({"nc-to-dyck", "dyck-to-nc", "sc-to-balanced",
                             "balanced-to-sc", "nc-to-tree", "tree-to-nc",
                             "tree-code", "kreweras", "transpose",
                             "complement", "rotate"}));
  map->add_option("--partition", o.partition);
  map->add_option("--path", o.path);
  map->add_option("--tree", o.tree);
  map->add_option("--k", o.k, "Rotation amount");
  map->add_option("--chirality", o.chirality)
      ->check(CLI::IsMember({"rotation", "rotation-reflection"}));
  add_format(map, o);

  auto* orbit = app.add_subcommand("orbit", "Describe a rotation class");
  orbit->add_option("--partition", o.partition)->required();
  add_format(orbit, o);

  std::vector<std::string> suites;
  for (auto s : suite_names()) suites.emplace_back(s);
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", o.suite)->required()->check(CLI::IsMember(suites));
  verify->add_option("--n", o.n);
  verify->add_option("--n-max", o.n_max);
  add_format(verify, o);
  add_budget(verify, o);

  auto* tab = app.add_subcommand("table", "Tabulate the counting sequences");
  tab->add_option("--n-max", o.n_max);
  tab->add_flag("--brute-force", o.brute_force,
                "Check rows within the budget against the orbit oracles");
  add_format(tab, o);
  add_budget(tab, o);

  auto* conj = app.add_subcommand(
      "conjecture", "Compare self-complementary partitions and classes");
  conj->add_option("--n", o.n)->required();
  add_format(conj, o);
  add_budget(conj, o);

  std::vector<const char*> argv{"ncpart"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*count) return do_count(o, out);
    if (*enumerate) return do_enumerate(o, out);
    if (*map) return do_map(o, out);
    if (*orbit) return do_orbit(o, out);
    if (*verify) return do_verify(o, out);
    if (*tab) return do_table(o, out);
    if (*conj) return do_conjecture(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::logic_error& e) {
    // Internal consistency checks, e.g. a table row disagreeing with its
    // brute-force count.
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsageError;
}

}  // namespace ncpart::cli
