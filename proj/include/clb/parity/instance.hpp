#pragma once

#include <string>
#include <vector>

#include "clb/cunningham/rule.hpp"
#include "clb/parity/valuation.hpp"

namespace clb::parity {

// "label^k" for successor index k (for the binary lower-bound games k is the edge superscript)
std::string edge_name(const ParityGame& g, const Edge0& e);
Edge0 parse_edge_name(const ParityGame& g, const std::string& name);

// strategy improvement on a parity game, warm-starting player 1's best response
class ParityInstance : public cunningham::ImprovementInstance {
public:
  ParityInstance(ParityGame game, Strategy0 sigma, int size_parameter);

  std::string formalism() const override { return "parity"; }
  int size_parameter() const override { return n_; }
  std::vector<cunningham::SwitchId> switch_domain() const override;
  std::vector<cunningham::SwitchId> improving_set() override { return improving_; }
  cunningham::StepOutcome apply(const cunningham::SwitchId& e) override;
  std::string certificate() const override { return certificate_; }

  const ParityGame& game() const { return game_; }
  const Strategy0& sigma() const { return sigma_; }
  const Strategy1& tau() const { return br_.tau; }
  const GameValuation& valuation() const { return br_.xi; }

private:
  void refresh_improving();

  ParityGame game_;
  Strategy0 sigma_;
  BestResponse br_;
  int n_;
  std::vector<cunningham::SwitchId> improving_;
  std::string certificate_ = "initial";
};

}  // namespace clb::parity
