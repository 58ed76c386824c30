#pragma once

#include <string>
#include <vector>

#include "clb/cunningham/rule.hpp"
#include "clb/family/lower_bound.hpp"
#include "clb/mdp/relaxed_mdp.hpp"

namespace clb::mdp {

Policy policy_from_bits(const RelaxedMdp& m, const family::BitStrategy& s);
family::BitStrategy bits_from_policy(int n, const RelaxedMdp& m, const Policy& p);

// policy iteration; certificate = sum of controller values
class MdpInstance : public cunningham::ImprovementInstance {
public:
  MdpInstance(RelaxedMdp m, Policy start, int size_parameter);

  std::string formalism() const override { return "mdp"; }
  int size_parameter() const override { return n_; }
  nlohmann::json parameters() const override;
  std::vector<cunningham::SwitchId> switch_domain() const override;
  std::vector<cunningham::SwitchId> improving_set() override { return improving_; }
  cunningham::StepOutcome apply(const cunningham::SwitchId& e) override;
  std::string certificate() const override { return sum_.str(); }

  const RelaxedMdp& model() const { return m_; }
  const Policy& policy() const { return policy_; }
  const ValueVector& values() const { return vals_; }
  const Rational& value_sum() const { return sum_; }

private:
  void evaluate();

  RelaxedMdp m_;
  Policy policy_;
  ValueVector vals_;
  Rational sum_;
  int n_;
  std::vector<cunningham::SwitchId> improving_;
};

MdpInstance mdp_instance(int n, const MdpParams& p, const family::BitStrategy& start);

}  // namespace clb::mdp
