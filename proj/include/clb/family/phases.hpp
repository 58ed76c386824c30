#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "clb/family/counter.hpp"
#include "clb/family/lower_bound.hpp"

namespace clb::family {

struct PhaseAssignment {
  int phase = 1;
  CounterConfig config;
  std::optional<std::pair<int, int>> phase1_witness;  // (j, k)
  std::optional<int> phase5_witness;                   // j
  friend bool operator==(const PhaseAssignment&, const PhaseAssignment&) = default;
};

struct PhaseClassification {
  std::vector<PhaseAssignment> matches;  // sorted by (config, phase)
  bool empty() const { return matches.empty(); }
  bool ambiguous() const { return matches.size() > 1; }
  // latest phase of the largest matching configuration
  const PhaseAssignment& display() const;
  CounterConfig max_config() const { return display().config; }
};

// does s satisfy every cell of the column (phase, config, witness)?
bool satisfies_phase(const BitStrategy& s, int phase, CounterConfig b, int j = 0, int k = 0);

// candidate configurations inferred from the a-bits
PhaseClassification classify_phase(const BitStrategy& s);
// tries every configuration 0 < |b| < 2^n
PhaseClassification classify_phase_exhaustive(const BitStrategy& s);
PhaseClassification classify_phase(const parity::ParityGame& g, const parity::Strategy0& s, int n);

struct SwitchConstraints {
  std::set<SwitchId> must_include;
  std::set<SwitchId> must_exclude;
};

SwitchConstraints expected_switch_constraints(const PhaseAssignment& a, const BitStrategy& s);

// multiset of switches that carry the counter from b to b+1
std::map<SwitchId, int> increment_switches(CounterConfig b, int n);

// switches grouped by the largest configuration matched before each switch
std::map<std::uint64_t, std::vector<SwitchId>> group_by_increment(BitStrategy start, std::span<const SwitchId> seq);

}  // namespace clb::family
