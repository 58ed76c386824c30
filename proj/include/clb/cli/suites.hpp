#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "clb/auso/hypercube.hpp"
#include "clb/cunningham/rule.hpp"
#include "clb/family/lower_bound.hpp"
#include "clb/mdp/relaxed_mdp.hpp"

namespace clb::cli {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string summary;
  nlohmann::json detail = nlohmann::json::object();  // counterexample payload
  double seconds = 0;
};

class VerificationReport {
public:
  void add(CheckResult r);  // names are unique
  const std::vector<CheckResult>& checks() const { return checks_; }
  bool passed() const;
  nlohmann::json to_json() const;  // no timings
  nlohmann::json timings() const;

private:
  std::vector<CheckResult> checks_;
};

// runs body; exceptions become a failing result
CheckResult timed_check(std::string name, const std::function<void(CheckResult&)>& body);

struct RunConfig {
  int n = 3;
  std::optional<num::BigInt> N;
  std::optional<num::Rational> eps;
  std::optional<std::string> ordering_file;
  std::optional<std::string> pointer;
  std::string initial = "paper";  // or "all-e-zero"
  std::optional<auso::FaceMode> faces;  // default: all faces for n=3, 10^5 samples otherwise
};

mdp::MdpParams resolve_params(const RunConfig& cfg);
cunningham::EdgeOrdering resolve_ordering(const RunConfig& cfg);
cunningham::SwitchId resolve_pointer(const RunConfig& cfg, const cunningham::EdgeOrdering& ord);
family::BitStrategy resolve_initial(const RunConfig& cfg);
auso::FaceMode resolve_faces(const RunConfig& cfg);

// formalism in {parity, mdp, lp, auso}
cunningham::RunTrace run_formalism(std::string_view formalism, const RunConfig& cfg);

// states 0..seq.size()
std::vector<family::BitStrategy> visited_strategies(const family::BitStrategy& start,
                                                    std::span<const cunningham::SwitchId> seq);

struct PrefixRow {
  int phase;
  std::vector<std::string> improving;
  std::string selected;
  std::vector<cunningham::Response> responses;
};
// the n=3 simulation table, rows 1..9
const std::vector<PrefixRow>& paper_prefix_table();

void suite_structure(int n_lo, int n_hi, VerificationReport& rep);
void suite_golden_prefix(VerificationReport& rep);
void suite_phases(const RunConfig& cfg, VerificationReport& rep);
void suite_switches(const RunConfig& cfg, VerificationReport& rep);
void suite_lengths(int n_lo, int n_hi, VerificationReport& rep);
void suite_cross(const RunConfig& cfg, VerificationReport& rep);
void suite_uso(const RunConfig& cfg, VerificationReport& rep);
// stride 1 checks every state
void suite_oracle(const RunConfig& cfg, std::size_t stride, VerificationReport& rep);
void suite_conformance(const RunConfig& cfg, VerificationReport& rep);

}  // namespace clb::cli
