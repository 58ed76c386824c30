#include "clb/family/phases.hpp"

#include <algorithm>
#include <stdexcept>

namespace clb::family {

namespace {

constexpr int kAllow0 = 1, kAllow1 = 2;
int only(int bit) { return bit ? kAllow1 : kAllow0; }

// allowed values of sigma(kind_i) in the given column
int allowed(char kind, int i, int p, CounterConfig b, int j, int k) {
  CounterConfig bp = b.increment(), bn = b.with_nu0_set();
  int m0 = b.nu0(), m1 = b.nu1();
  switch (kind) {
    case 'a':
      if (p < 5) return only(b.bit(i));
      return only(i <= j ? b.bit(i) : bp.bit(i));
    case 'b':
      if (p == 1) return only(j > i ? i == m0 : i == m1);
      return only(i == m0);
    case 'c':
      return only(p <= 2 ? i == m1 : i == m0);
    case 'd':
      if (p == 1) return (j > i || (j == i && k > 1)) ? only(bn.bit(i)) : only(1);
      if (p == 2 || p == 3) return only(bn.bit(i));
      if (p == 4) return only(1) | only(bn.bit(i));
      return only(1);
    case 'e':
      if (p == 1) return (j > i || (j == i && k > 2)) ? only(1) : only(b.bit(i));
      if (p == 2) return only(1);
      if (p == 3) return only(1) | only(bp.bit(i));
      return only(bp.bit(i));
  }
  return 0;
}

struct Slot {
  char kind;
  int index;
  std::size_t pos;
};

std::vector<Slot> slots(int n) {
  std::vector<Slot> out;
  BitStrategy probe(n);
  for (const auto& node : binary_layout(n)) out.push_back({node.kind, node.index, *probe.index(node.kind, node.index)});
  return out;
}

bool column_ok(const BitStrategy& s, const std::vector<Slot>& layout, int p, CounterConfig b, int j, int k) {
  for (const auto& node : layout) {
    int a = allowed(node.kind, node.index, p, b, j, k);
    if (!(a & only(s.bit(node.pos)))) return false;
  }
  return true;
}

void classify_config(const BitStrategy& s, const std::vector<Slot>& layout, CounterConfig b,
                     std::vector<PhaseAssignment>& out) {
  const int n = s.n();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  int m0 = b.nu0();
  for (int j = m0; j <= n + 1; ++j) {
    bool hit = false;
    for (int k = 1; k <= 3 && !hit; ++k)
      if (column_ok(s, layout, 1, b, j, k)) {
        out.push_back({1, b, std::make_pair(j, k), std::nullopt});
        hit = true;
      }
    if (hit) break;
  }
  if (b.value() >= full) return;
  for (int p = 2; p <= 4; ++p)
    if (column_ok(s, layout, p, b, 0, 0)) out.push_back({p, b, std::nullopt, std::nullopt});
  for (int j = 1; j <= m0; ++j)
    if (column_ok(s, layout, 5, b, j, 0)) {
      out.push_back({5, b, std::nullopt, j});
      break;
    }
}

PhaseClassification finish(std::vector<PhaseAssignment> v) {
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
    return std::make_pair(x.config, x.phase) < std::make_pair(y.config, y.phase);
  });
  return PhaseClassification{std::move(v)};
}

}  // namespace

const PhaseAssignment& PhaseClassification::display() const {
  if (matches.empty()) throw std::logic_error("strategy is unclassified");
  return matches.back();
}

bool satisfies_phase(const BitStrategy& s, int phase, CounterConfig b, int j, int k) {
  return column_ok(s, slots(s.n()), phase, b, j, k);
}

PhaseClassification classify_phase(const BitStrategy& s) {
  const int n = s.n();
  std::set<std::uint64_t> cand;
  std::uint64_t high = 0;
  for (int i = 2; i <= n; ++i) high |= std::uint64_t(s.get('a', i)) << (i - 1);
  cand.insert(high);
  cand.insert(high | 1);
  for (int m = 1; m <= n; ++m) {
    std::uint64_t below = (std::uint64_t{1} << (m - 1)) - 1;
    std::uint64_t above = high & ~((std::uint64_t{1} << m) - 1);
    cand.insert(above | below);
  }
  std::vector<PhaseAssignment> out;
  auto layout = slots(n);
  for (auto v : cand)
    if (v > 0 && v < (std::uint64_t{1} << n)) classify_config(s, layout, CounterConfig(v), out);
  return finish(std::move(out));
}

PhaseClassification classify_phase_exhaustive(const BitStrategy& s) {
  std::vector<PhaseAssignment> out;
  auto layout = slots(s.n());
  for (std::uint64_t v = 1; v < (std::uint64_t{1} << s.n()); ++v) classify_config(s, layout, CounterConfig(v), out);
  return finish(std::move(out));
}

PhaseClassification classify_phase(const parity::ParityGame& g, const parity::Strategy0& s, int n) {
  return classify_phase(BitStrategy::from_strategy(n, g, s));
}

SwitchConstraints expected_switch_constraints(const PhaseAssignment& a, const BitStrategy& s) {
  SwitchConstraints out;
  const int p = a.phase;
  const CounterConfig b = a.config, bp = b.increment();
  const int m0 = b.nu0(), m1 = b.nu1();
  auto bit_or = [&](char kind, int i, int dflt) { return s.get_if(kind, i).value_or(dflt); };
  for (const auto& node : binary_layout(s.n())) {
    const int i = node.index;
    const int other = 1 - s.get(node.kind, i);
    std::optional<bool> in;
    switch (node.kind) {
      case 'a':
        if (p == 5)
          in = other == 1 ? i == m0 : (i < m0 && s.get_if('a', i + 1) == std::optional<int>(bp.bit(i + 1)));
        break;
      case 'b':
        if (p == 1) in = other == 1 ? (i == m0 && s.get('e', i) == 1) : (i > m0 && bit_or('e', m0, 0) == 1);
        break;
      case 'c':
        if (p == 2) in = other == 1 ? i == m0 : i != m0;
        break;
      case 'd':
        if (other == 1 && p == 4) in = true;
        if (other == 0 && p == 1)
          in = b.bit(i) == 0 && i > m0 && bit_or('e', m0, 0) == 1 && bit_or('b', m0, 1) == 1 &&
               (i - 1 < m1 || bit_or('b', m1, 0) == 0);
        break;
      case 'e':
        if (other == 1 && p == 1) in = true;
        if (other == 0 && p == 3) in = bp.bit(i) == 0;
        break;
    }
    if (!in) continue;
    (*in ? out.must_include : out.must_exclude).insert(switch_name(node.label, other));
  }
  return out;
}

std::map<SwitchId, int> increment_switches(CounterConfig b, int n) {
  std::map<SwitchId, int> out;
  auto add = [&](char kind, int i, int bit) { ++out[switch_name(node_label(kind, i), bit)]; };
  CounterConfig bp = b.increment();
  int mu = b.nu0(), lambda = b.nu1();
  std::vector<int> zeros;
  for (int i = 1; i <= n; ++i)
    if (!b.bit(i)) zeros.push_back(i);
  for (int i : zeros) add('e', i, 1);
  if (mu > 1 && mu <= n - 1) add('b', mu, 1);
  if (mu == 1 && lambda <= n - 1) add('b', lambda, 0);
  for (std::size_t z = 1; z < zeros.size(); ++z) add('d', zeros[z], 0);
  if (mu > 1) add('c', mu, 1);
  else if (lambda >= 2) add('c', lambda, 0);
  for (int i = 1; i <= n; ++i)
    if (!bp.bit(i)) add('e', i, 0);
  for (std::size_t z = 1; z < zeros.size(); ++z) add('d', zeros[z], 1);
  for (int i = 2; i <= std::min(mu, n); ++i) add('a', i, bp.bit(i));
  return out;
}

std::map<std::uint64_t, std::vector<SwitchId>> group_by_increment(BitStrategy s, std::span<const SwitchId> seq) {
  std::map<std::uint64_t, std::vector<SwitchId>> out;
  for (const auto& e : seq) {
    auto c = classify_phase(s);
    if (c.empty()) throw std::runtime_error("unclassified strategy before switch " + e);
    out[c.max_config().value()].push_back(e);
    s.apply(e);
  }
  return out;
}

}  // namespace clb::family
