#include "clb/parity/io.hpp"

#include <sstream>

namespace clb::parity {

nlohmann::json to_json(const ParityGame& g) {
  nlohmann::json nodes = nlohmann::json::array(), edges = nlohmann::json::array();
  for (const auto& n : g.nodes()) {
    nodes.push_back({{"id", n.id}, {"owner", n.owner == Player::Zero ? 0 : 1},
                     {"priority", n.priority}, {"label", n.label}});
    for (NodeId w : g.successors(n.id)) edges.push_back({n.id, w});
  }
  return {{"nodes", nodes}, {"edges", edges}};
}

ParityGame game_from_json(const nlohmann::json& j) {
  ParityGame g;
  const auto& nodes = j.at("nodes");
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const auto& n = nodes[k];
    if (n.at("id").get<int>() != static_cast<int>(k)) throw GameError("node ids must be 0..|V|-1 in order");
    int owner = n.at("owner").get<int>();
    if (owner != 0 && owner != 1) throw GameError("owner must be 0 or 1");
    g.add_node(owner == 0 ? Player::Zero : Player::One, n.at("priority").get<int>(),
               n.value("label", std::to_string(k)));
  }
  for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  g.validate();
  return g;
}

std::string to_dot(const ParityGame& g, const Strategy0* s, const Strategy1* t) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (const auto& n : g.nodes())
    os << "  n" << n.id << " [label=\"" << n.label << "\\n" << n.priority << "\", shape="
       << (n.owner == Player::Zero ? "circle" : "box") << "];\n";
  for (const auto& n : g.nodes()) {
    auto succ = g.successors(n.id);
    for (std::size_t k = 0; k < succ.size(); ++k) {
      os << "  n" << n.id << " -> n" << succ[k];
      bool chosen = false;
      if (n.owner == Player::Zero && s) chosen = s->choice[n.id] == static_cast<int>(k);
      if (n.owner == Player::One && t) chosen = t->choice[n.id] == static_cast<int>(k);
      if (chosen) os << " [color=" << (n.owner == Player::Zero ? "blue" : "red") << ", penwidth=2]";
      else if ((n.owner == Player::Zero && s) || (n.owner == Player::One && t)) os << " [style=dotted]";
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace clb::parity
