#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

namespace clb::cunningham {

// player-0 edge name, e.g. "a_2^1"
using SwitchId = std::string;

class RunError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class EdgeOrdering {
public:
  EdgeOrdering() = default;
  EdgeOrdering(std::vector<SwitchId> sequence, std::string id = "custom");

  // one name per line, blank lines and '#' comments ignored
  static EdgeOrdering parse(std::string_view text, std::string id = "file");

  std::size_t size() const { return seq_.size(); }
  const std::vector<SwitchId>& sequence() const { return seq_; }
  const std::string& id() const { return id_; }
  bool contains(const SwitchId& e) const { return rank_.count(e) != 0; }
  std::size_t rank(const SwitchId& e) const;
  const SwitchId& minimum() const;

  // throws unless the ordering is a permutation of `domain`
  void check_domain(std::span<const SwitchId> domain) const;

private:
  std::vector<SwitchId> seq_;
  std::unordered_map<SwitchId, std::size_t> rank_;
  std::string id_ = "custom";
};

struct RuleState {
  SwitchId last;
};

SwitchId successor(const SwitchId& e, std::span<const SwitchId> F, const EdgeOrdering& ord);

struct Response {
  std::string node;
  std::string to;
  friend bool operator==(const Response&, const Response&) = default;
};

struct StepOutcome {
  std::vector<Response> responses;
  std::string certificate;
  bool improved = true;
  std::optional<SwitchId> leaving;
  bool degenerate = false;
};

class ImprovementInstance {
public:
  virtual ~ImprovementInstance() = default;
  virtual std::string formalism() const = 0;
  virtual int size_parameter() const = 0;
  virtual nlohmann::json parameters() const { return nlohmann::json::object(); }
  virtual std::vector<SwitchId> switch_domain() const = 0;
  virtual std::vector<SwitchId> improving_set() = 0;
  virtual StepOutcome apply(const SwitchId& e) = 0;
  virtual std::string certificate() const = 0;
  bool is_terminal() { return improving_set().empty(); }
};

struct TraceStep {
  int index = 0;
  SwitchId applied;
  std::vector<SwitchId> improving;  // sorted by the ordering
  std::vector<Response> responses;
  std::string certificate;
  std::optional<SwitchId> leaving;
  bool degenerate = false;
};

struct TraceHeader {
  std::string formalism;
  int n = 0;
  std::string ordering;
  SwitchId initial_pointer;
  std::string initial_certificate;
  nlohmann::json parameters = nlohmann::json::object();
};

struct RunTrace {
  TraceHeader header;
  std::vector<TraceStep> steps;
  std::vector<SwitchId> switch_sequence() const;
};

// max(2^(n+4), (n+2) 2^(n+2))
std::int64_t default_step_cap(int n);

struct RunOptions {
  std::int64_t max_steps = 0;  // 0: default_step_cap(n)
  bool require_improvement = true;
};

RunTrace run(ImprovementInstance& inst, const EdgeOrdering& ord, const SwitchId& e0, RunOptions opt = {});

// states are numbered 0..steps.size(); state k is reached after k switches
bool leadsto_check(const RunTrace& trace, std::size_t i, std::size_t j);

// index of the first step whose switch is not successor(previous pointer, improving set); nullopt if none
std::optional<std::size_t> pointer_discipline_violation(const RunTrace& trace, const EdgeOrdering& ord);

}  // namespace clb::cunningham
