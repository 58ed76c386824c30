#include "clb/mdp/instance.hpp"

#include <algorithm>

namespace clb::mdp {

Policy policy_from_bits(const RelaxedMdp& m, const family::BitStrategy& s) {
  Policy p;
  p.choice.assign(m.size(), -1);
  for (const auto& n : m.nodes())
    if (n.owner == Owner::Controller) p.choice[static_cast<std::size_t>(n.id)] = 0;
  for (const auto& b : family::binary_layout(s.n())) {
    NodeId v = m.at(b.label);
    NodeId target = m.at(s.get(b.kind, b.index) ? b.succ1 : b.succ0);
    int k = -1;
    for (int j = 0; j < static_cast<int>(m.out(v).size()); ++j)
      if (m.out_edge(v, j).to == target) k = j;
    if (k < 0) throw MdpError("no edge " + b.label + " -> " + m.node(target).label);
    p.choice[static_cast<std::size_t>(v)] = k;
  }
  check_policy(m, p);
  return p;
}

family::BitStrategy bits_from_policy(int n, const RelaxedMdp& m, const Policy& p) {
  family::BitStrategy s(n);
  for (const auto& b : family::binary_layout(n)) {
    NodeId v = m.at(b.label);
    NodeId w = m.out_edge(v, p.choice[static_cast<std::size_t>(v)]).to;
    s.set(b.kind, b.index, m.node(w).label == b.succ1 ? 1 : 0);
  }
  return s;
}

MdpInstance::MdpInstance(RelaxedMdp m, Policy start, int size_parameter)
    : m_(std::move(m)), policy_(std::move(start)), n_(size_parameter) {
  check_policy(m_, policy_);
  evaluate();
}

nlohmann::json MdpInstance::parameters() const {
  return {{"N", m_.params.N.get_str()}, {"eps", m_.params.eps.str()}};
}

std::vector<cunningham::SwitchId> MdpInstance::switch_domain() const {
  std::vector<cunningham::SwitchId> out;
  for (const auto& n : m_.nodes())
    if (n.owner == Owner::Controller && !n.auxiliary)
      for (int k = 0; k < static_cast<int>(m_.out(n.id).size()); ++k) out.push_back(switch_name(m_, {n.id, k}));
  return out;
}

void MdpInstance::evaluate() {
  vals_ = policy_values(m_, policy_);
  sum_ = controller_value_sum(m_, vals_);
  improving_.clear();
  for (const auto& s : improving_switches_mdp(m_, policy_, vals_)) improving_.push_back(switch_name(m_, s));
}

cunningham::StepOutcome MdpInstance::apply(const cunningham::SwitchId& e) {
  if (std::find(improving_.begin(), improving_.end(), e) == improving_.end())
    throw cunningham::RunError("mdp: " + e + " is not an improving switch");
  Switch s = parse_switch_name(m_, e);
  ValueVector before = vals_;
  Rational sum_before = sum_;
  policy_.choice[static_cast<std::size_t>(s.from)] = s.choice;
  evaluate();
  cunningham::StepOutcome out;
  bool monotone = true;
  for (std::size_t v = 0; v < vals_.size(); ++v)
    if (vals_[v] < before[v]) monotone = false;
  out.improved = monotone && sum_ > sum_before && vals_[static_cast<std::size_t>(s.from)] > before[static_cast<std::size_t>(s.from)];
  out.certificate = sum_.str();
  return out;
}

MdpInstance mdp_instance(int n, const MdpParams& p, const family::BitStrategy& start) {
  RelaxedMdp m = build_relaxed_mdp(n, p);
  Policy pol = policy_from_bits(m, start);
  return MdpInstance(std::move(m), std::move(pol), n);
}

}  // namespace clb::mdp
