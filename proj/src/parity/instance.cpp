#include "clb/parity/instance.hpp"

#include <algorithm>

namespace clb::parity {

std::string edge_name(const ParityGame& g, const Edge0& e) {
  return g.label(e.from) + "^" + std::to_string(e.choice);
}

Edge0 parse_edge_name(const ParityGame& g, const std::string& name) {
  auto caret = name.rfind('^');
  if (caret == std::string::npos) throw GameError("bad edge name " + name);
  NodeId v = g.at(name.substr(0, caret));
  int k = std::stoi(name.substr(caret + 1));
  if (g.owner(v) != Player::Zero || k < 0 || static_cast<std::size_t>(k) >= g.successors(v).size())
    throw GameError("not a player-0 edge: " + name);
  return {v, k};
}

ParityInstance::ParityInstance(ParityGame game, Strategy0 sigma, int size_parameter)
    : game_(std::move(game)), sigma_(std::move(sigma)), n_(size_parameter) {
  check_strategy(game_, sigma_);
  br_ = best_response(game_, sigma_);
  refresh_improving();
}

std::vector<cunningham::SwitchId> ParityInstance::switch_domain() const {
  std::vector<cunningham::SwitchId> out;
  for (const auto& node : game_.nodes())
    if (node.owner == Player::Zero)
      for (std::size_t k = 0; k < game_.successors(node.id).size(); ++k)
        out.push_back(edge_name(game_, {node.id, static_cast<int>(k)}));
  return out;
}

void ParityInstance::refresh_improving() {
  improving_.clear();
  for (const auto& e : improving_switches(game_, sigma_, br_.xi)) improving_.push_back(edge_name(game_, e));
}

cunningham::StepOutcome ParityInstance::apply(const cunningham::SwitchId& e) {
  if (std::find(improving_.begin(), improving_.end(), e) == improving_.end())
    throw cunningham::RunError("parity: " + e + " is not an improving switch");
  Edge0 edge = parse_edge_name(game_, e);
  GameValuation before = br_.xi;
  Strategy1 tau_before = br_.tau;
  sigma_.choice[edge.from] = edge.choice;
  br_ = best_response(game_, sigma_, &tau_before);

  cunningham::StepOutcome out;
  for (const auto& node : game_.nodes())
    if (node.owner == Player::One && br_.tau.choice[node.id] != tau_before.choice[node.id])
      out.responses.push_back({node.label, game_.label(target(game_, sigma_, br_.tau, node.id))});
  out.improved = strictly_improves(game_, before, br_.xi);
  certificate_ = game_.label(edge.from) + ":" + format_valuation(game_, br_.xi[edge.from]);
  out.certificate = certificate_;
  refresh_improving();
  return out;
}

}  // namespace clb::parity
