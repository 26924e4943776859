#include "ncpart/symmetry.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ncpart {

namespace {

Mask rotate_mask(Mask b, int n, int k) {
  if (k == 0) return b;
  return ((b << k) | (b >> (n - k))) & ground_mask(n);
}

Mask reflect_mask(Mask b, int n) {
  Mask out = 0;
  for (Mask rest = b; rest; rest &= rest - 1) {
    out |= Mask{1} << (n - 1 - std::countr_zero(rest));
  }
  return out;
}

}  // namespace

SetPartition rotate(const SetPartition& p, long long k) {
  const int n = p.size();
  const int shift = static_cast<int>(((k % n) + n) % n);
  std::vector<Mask> blocks(p.blocks().begin(), p.blocks().end());
  for (Mask& b : blocks) b = rotate_mask(b, n, shift);
  return SetPartition(n, std::move(blocks));
}

SetPartition complement(const SetPartition& p) {
  const int n = p.size();
  std::vector<Mask> blocks(p.blocks().begin(), p.blocks().end());
  for (Mask& b : blocks) b = reflect_mask(b, n);
  return SetPartition(n, std::move(blocks));
}

SetPartition kreweras(const SetPartition& p) {
  require_noncrossing(p, "kreweras");
  const int n = p.size();
  // Block cycle sigma(i) = next element of i's block, read cyclically.
  // The gap after i joins the gap after sigma^-1(i + 1): the region of the
  // diagram entered through gap i' leaves through that gap.
  std::vector<int> sigma_inverse(n + 1);
  for (Mask b : p.blocks()) {
    int prev = max_element(b);
    for (Mask rest = b; rest; rest &= rest - 1) {
      const int e = std::countr_zero(rest) + 1;
      sigma_inverse[e] = prev;
      prev = e;
    }
  }
  std::vector<int> label(n + 1, 0);
  int next_label = 0;
  for (int start = 1; start <= n; ++start) {
    if (label[start]) continue;
    ++next_label;
    int gap = start;
    while (!label[gap]) {
      label[gap] = next_label;
      gap = sigma_inverse[gap % n + 1];
    }
  }
  return SetPartition::from_labels(std::span<const int>(label).subspan(1));
}

SetPartition kreweras_inverse(const SetPartition& p) {
  return rotate(kreweras(p), 1);
}

SetPartition transpose(const SetPartition& p) {
  return complement(kreweras(p));
}

bool is_self_complementary(const SetPartition& p) {
  return complement(p) == p;
}

std::string_view to_string(Parity parity) {
  switch (parity) {
    case Parity::kEven:
      return "even";
    case Parity::kOdd:
      return "odd";
    case Parity::kNotApplicable:
      return "not-applicable";
  }
  return "unknown";
}

int rotation_period(const SetPartition& p) {
  for (int t = 1; t < p.size(); ++t) {
    if (p.size() % t == 0 && rotate(p, t) == p) return t;
  }
  return p.size();
}

std::vector<SetPartition> orbit_members(const SetPartition& p) {
  const int t = rotation_period(p);
  std::vector<SetPartition> out;
  out.reserve(t);
  for (int i = 0; i < t; ++i) out.push_back(rotate(p, i));
  return out;
}

int complement_order(const SetPartition& p) {
  const SetPartition c = complement(p);
  for (int i = 1; i <= p.size(); ++i) {
    if (rotate(p, i) == c) return i;
  }
  throw std::domain_error("complement order undefined: rotation class of " +
                          format_partition(p) + " is chiral");
}

RotationClass rotation_orbit(const SetPartition& p) {
  const auto members = orbit_members(p);
  std::size_t best = 0;
  std::string best_text = format_partition(members[0]);
  for (std::size_t i = 1; i < members.size(); ++i) {
    std::string text = format_partition(members[i]);
    if (text < best_text) {
      best_text = std::move(text);
      best = i;
    }
  }
  RotationClass c{members[best], static_cast<int>(members.size()), false, {},
                  Parity::kNotApplicable};
  const SetPartition comp = complement(c.representative);
  c.achiral = std::find(members.begin(), members.end(), comp) != members.end();
  for (int i = 0; i < c.orbit_size; ++i) {
    if (is_self_complementary(rotate(c.representative, i))) {
      c.sc_members.push_back(i);
    }
  }
  if (c.achiral) {
    c.complement_order_parity = complement_order(c.representative) % 2 == 0
                                    ? Parity::kEven
                                    : Parity::kOdd;
  }
  return c;
}

bool AchiralClassification::consistent() const {
  if (orbit_size_parity == Parity::kOdd) return sc_count == 1;
  switch (complement_order_parity) {
    case Parity::kEven:
      return sc_count == 2;
    case Parity::kOdd:
      return sc_count == 0;
    case Parity::kNotApplicable:
      return false;
  }
  return false;
}

std::string AchiralClassification::to_json() const {
  nlohmann::ordered_json j;
  j["orbit_size"] = orbit_size;
  j["achiral"] = true;
  j["sc_count"] = sc_count;
  j["complement_order_parity"] = std::string(to_string(complement_order_parity));
  return j.dump();
}

AchiralClassification classify_achiral(const RotationClass& c) {
  if (!c.achiral) {
    throw std::domain_error("classify_achiral: class of " +
                            format_partition(c.representative) +
                            " is chiral");
  }
  AchiralClassification out;
  out.orbit_size = c.orbit_size;
  out.orbit_size_parity = c.orbit_size % 2 == 0 ? Parity::kEven : Parity::kOdd;
  out.complement_order_parity = out.orbit_size_parity == Parity::kEven
                                    ? c.complement_order_parity
                                    : Parity::kNotApplicable;
  out.sc_count = static_cast<int>(c.sc_members.size());
  return out;
}

bool IdentityReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.passed(); });
}

IdentityReport verify_operator_identities(int n) {
  IdentityReport report{n, {}};
  enum Id { kHH, kTT, kTCH, kTR, kCT, kCR, kH2n, kCHC, kCount };
  report.checks = {
      {"H^2 = R^-1", 0, 0, {}},   {"T^2 = I", 0, 0, {}},
      {"T = CH", 0, 0, {}},       {"TR = R^-1 T", 0, 0, {}},
      {"CT = TRC", 0, 0, {}},     {"CR = R^-1 C", 0, 0, {}},
      {"H^(2n) = I", 0, 0, {}},   {"CHC = H^-1", 0, 0, {}},
  };
  auto record = [&](Id id, bool ok, const SetPartition& p) {
    IdentityCheck& check = report.checks[id];
    ++check.cases;
    if (!ok && check.failures++ == 0) check.first_failure = format_partition(p);
  };

  for_each_noncrossing(n, [&](const SetPartition& p) {
    const SetPartition h = kreweras(p);
    const SetPartition t = transpose(p);
    const SetPartition c = complement(p);
    const SetPartition r = rotate(p, 1);

    record(kHH, kreweras(h) == rotate(p, -1), p);
    record(kTT, transpose(t) == p, p);
    record(kTCH, t == complement(h), p);
    record(kTR, transpose(r) == rotate(t, -1), p);
    record(kCT, complement(t) == transpose(rotate(c, 1)), p);
    record(kCR, complement(r) == rotate(c, -1), p);

    SetPartition power = p;
    for (int i = 0; i < 2 * n; ++i) power = kreweras(power);
    record(kH2n, power == p, p);

    // C H C is the inverse of H: applying it after H returns p.
    record(kCHC, complement(kreweras(complement(h))) == p, p);
  });
  static_assert(kCount == 8);
  return report;
}

}  // namespace ncpart
