#include "clb/parity/game.hpp"

namespace clb::parity {

NodeId ParityGame::add_node(Player owner, int priority, std::string label) {
  if (priority < 0) throw GameError("negative priority for " + label);
  NodeId id = static_cast<NodeId>(nodes_.size());
  if (!by_label_.emplace(label, id).second) throw GameError("duplicate node label " + label);
  nodes_.push_back(Node{id, owner, priority, std::move(label)});
  succ_.emplace_back();
  return id;
}

void ParityGame::add_edge(NodeId from, NodeId to) {
  node(from);
  node(to);
  for (NodeId w : succ_[from])
    if (w == to) throw GameError("duplicate edge " + label(from) + "->" + label(to));
  succ_[from].push_back(to);
}

void ParityGame::set_priority(NodeId v, int priority) {
  node(v);
  nodes_[v].priority = priority;
}

std::size_t ParityGame::edge_count() const {
  std::size_t m = 0;
  for (const auto& s : succ_) m += s.size();
  return m;
}

const Node& ParityGame::node(NodeId v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= nodes_.size())
    throw GameError("unknown node " + std::to_string(v));
  return nodes_[v];
}

std::span<const NodeId> ParityGame::successors(NodeId v) const {
  node(v);
  return succ_[v];
}

std::optional<NodeId> ParityGame::find(std::string_view label) const {
  auto it = by_label_.find(std::string(label));
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

NodeId ParityGame::at(std::string_view label) const {
  auto v = find(label);
  if (!v) throw GameError("unknown node " + std::string(label));
  return *v;
}

int ParityGame::successor_index(NodeId v, NodeId w) const {
  auto s = successors(v);
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == w) return static_cast<int>(i);
  return kNoChoice;
}

void ParityGame::validate() const {
  for (const auto& n : nodes_)
    if (succ_[n.id].empty()) throw GameError("node " + n.label + " has no successor");
}

namespace {
template <class S>
S first_choice(const ParityGame& g, Player p) {
  S s;
  s.choice.assign(g.size(), kNoChoice);
  for (const auto& n : g.nodes())
    if (n.owner == p) s.choice[n.id] = 0;
  return s;
}

template <class S>
void check(const ParityGame& g, const S& s, Player p) {
  if (s.choice.size() != g.size()) throw GameError("strategy size mismatch");
  for (const auto& n : g.nodes()) {
    int c = s.choice[n.id];
    if (n.owner != p) {
      if (c != kNoChoice) throw GameError("strategy chooses at foreign node " + n.label);
      continue;
    }
    if (c < 0 || static_cast<std::size_t>(c) >= g.successors(n.id).size())
      throw GameError("strategy choice out of range at " + n.label);
  }
}
}  // namespace

Strategy0 default_strategy0(const ParityGame& g) { return first_choice<Strategy0>(g, Player::Zero); }
Strategy1 default_strategy1(const ParityGame& g) { return first_choice<Strategy1>(g, Player::One); }

void check_strategy(const ParityGame& g, const Strategy0& s) { check(g, s, Player::Zero); }
void check_strategy(const ParityGame& g, const Strategy1& s) { check(g, s, Player::One); }

NodeId target(const ParityGame& g, const Strategy0& s, const Strategy1& t, NodeId v) {
  int c = g.owner(v) == Player::Zero ? s.choice[v] : t.choice[v];
  return g.successors(v)[static_cast<std::size_t>(c)];
}

}  // namespace clb::parity
