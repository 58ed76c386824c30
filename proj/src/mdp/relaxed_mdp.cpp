#include "clb/mdp/relaxed_mdp.hpp"

#include <deque>
#include <sstream>

#include "clb/family/lower_bound.hpp"
#include "clb/numerics/matrix.hpp"

namespace clb::mdp {

MdpParams default_params(int n) {
  MdpParams p;
  p.N = 2 * n + 1;
  p.eps = Rational(BigInt(1), num::ipow(p.N, static_cast<unsigned>(2 * n + 10)));
  return p;
}

void check_admissible(int n, const MdpParams& p) {
  if (p.N < 2 * n) throw MdpError("N must be at least 2n");
  if (p.eps.sign() <= 0) throw MdpError("eps must be positive");
  if (p.eps > Rational(BigInt(1), BigInt(2 * n))) throw MdpError("eps must be at most 1/(2n)");
}

NodeId RelaxedMdp::add_node(Owner owner, std::string label, std::optional<int> priority, bool auxiliary) {
  NodeId id = static_cast<NodeId>(nodes_.size());
  if (!by_label_.emplace(label, id).second) throw MdpError("duplicate node label " + label);
  nodes_.push_back(MdpNode{id, owner, priority, std::move(label), auxiliary});
  out_.emplace_back();
  return id;
}

void RelaxedMdp::add_edge(NodeId from, NodeId to, std::optional<Rational> probability, Rational reward) {
  const auto& f = node(from);
  node(to);
  if ((f.owner == Owner::Randomizer) != probability.has_value())
    throw MdpError("edge from " + f.label + ": probabilities exactly on randomizer edges");
  if (probability && (probability->sign() <= 0 || *probability > Rational(1)))
    throw MdpError("edge from " + f.label + ": probability out of (0,1]");
  out_[static_cast<std::size_t>(from)].push_back(static_cast<int>(edges_.size()));
  edges_.push_back(MdpEdge{from, to, std::move(probability), std::move(reward)});
}

std::optional<NodeId> RelaxedMdp::find(std::string_view label) const {
  auto it = by_label_.find(std::string(label));
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

NodeId RelaxedMdp::at(std::string_view label) const {
  auto v = find(label);
  if (!v) throw MdpError("unknown node " + std::string(label));
  return *v;
}

NodeId RelaxedMdp::sink() const {
  std::optional<NodeId> s;
  for (const auto& n : nodes_) {
    auto o = out(n.id);
    if (n.owner != Owner::Randomizer || o.size() != 1) continue;
    const auto& e = edges_[static_cast<std::size_t>(o[0])];
    if (e.to == n.id && e.reward.is_zero()) {
      if (s) throw MdpError("more than one absorbing node");
      s = n.id;
    }
  }
  if (!s) throw MdpError("no absorbing sink");
  return *s;
}

void RelaxedMdp::validate() const {
  for (const auto& n : nodes_) {
    auto o = out(n.id);
    if (o.empty()) throw MdpError("node " + n.label + " has no successor");
    if (n.owner == Owner::Randomizer) {
      Rational total;
      for (int k : o) total += *edges_[static_cast<std::size_t>(k)].probability;
      if (total != Rational(1)) throw MdpError("probabilities at " + n.label + " sum to " + total.str());
    }
  }
  sink();
}

bool RelaxedMdp::is_bipartite() const {
  NodeId t = sink();
  for (const auto& e : edges_) {
    if (e.from == t) continue;
    if (node(e.from).owner == node(e.to).owner) return false;
  }
  return true;
}

RelaxedMdp build_relaxed_mdp(int n, const MdpParams& p) {
  check_admissible(n, p);
  using family::node_label;
  auto layout = family::binary_layout(n);
  RelaxedMdp m;
  m.params = p;
  for (const auto& b : layout) m.add_node(Owner::Controller, b.label);
  for (int i = 1; i <= n; ++i) m.add_node(Owner::Randomizer, node_label('F', i));
  for (int i = 1; i <= n; ++i) m.add_node(Owner::Randomizer, node_label('g', i), 2 * i - 1);
  for (int i = 1; i <= n; ++i) m.add_node(Owner::Randomizer, node_label('h', i), 2 * i);
  m.add_node(Owner::Randomizer, "s", 0);
  m.add_node(Owner::Randomizer, "t");

  auto prio_reward = [&](NodeId v) {
    auto pr = m.node(v).priority;
    if (!pr) return Rational(0);
    BigInt mag = num::ipow(p.N, static_cast<unsigned>(*pr));
    return Rational(*pr % 2 ? BigInt(-mag) : mag);
  };
  for (const auto& b : layout) {
    NodeId v = m.at(b.label);
    m.add_edge(v, m.at(b.succ0), std::nullopt, Rational(0));
    m.add_edge(v, m.at(b.succ1), std::nullopt, Rational(0));
  }
  const Rational one(1), half = Rational(BigInt(1), BigInt(2));
  for (int i = 1; i <= n; ++i) {
    NodeId F = m.at(node_label('F', i));
    m.add_edge(F, m.at(node_label('h', i)), p.eps, Rational(0));
    if (i > 1) {
      m.add_edge(F, m.at(node_label('d', i)), (one - p.eps) * half, Rational(0));
      m.add_edge(F, m.at(node_label('e', i)), (one - p.eps) * half, Rational(0));
    } else {
      m.add_edge(F, m.at(node_label('e', i)), one - p.eps, Rational(0));
    }
    NodeId g = m.at(node_label('g', i)), h = m.at(node_label('h', i));
    m.add_edge(g, F, one, prio_reward(g));
    m.add_edge(h, m.at(i == n ? std::string("t") : node_label('a', i + 1)), one, prio_reward(h));
  }
  NodeId s = m.at("s");
  m.add_edge(s, m.at(node_label('c', n)), one, prio_reward(s));
  NodeId t = m.at("t");
  m.add_edge(t, t, one, Rational(0));
  m.validate();
  return m;
}

RelaxedMdp build_relaxed_mdp(int n) { return build_relaxed_mdp(n, default_params(n)); }

RelaxedMdp expand_relaxed(const RelaxedMdp& m) {
  m.validate();
  RelaxedMdp x;
  x.params = m.params;
  for (const auto& n : m.nodes()) x.add_node(n.owner, n.label, n.priority, n.auxiliary);
  const NodeId t = m.sink();
  auto tag = [&](const MdpEdge& e, const char* kind) {
    return "(" + m.node(e.from).label + "," + m.node(e.to).label + ")" + kind;
  };
  // randomizer -> w with probability 1, splitting again if w is a randomizer
  auto link_randomizer = [&](NodeId r, const MdpEdge& e) {
    if (x.node(e.to).owner == Owner::Controller) {
      x.add_edge(r, e.to, Rational(1), Rational(0));
      return;
    }
    NodeId c = x.add_node(Owner::Controller, tag(e, "c'"), std::nullopt, true);
    x.add_edge(r, c, Rational(1), Rational(0));
    x.add_edge(c, e.to, std::nullopt, Rational(0));
  };
  for (const auto& n : m.nodes()) {
    for (int k : m.out(n.id)) {
      const auto& e = m.edges()[static_cast<std::size_t>(k)];
      Owner to = m.node(e.to).owner;
      if (n.id == t) {
        x.add_edge(e.from, e.to, e.probability, e.reward);
      } else if (n.owner == Owner::Controller) {
        if (to == Owner::Randomizer) {
          x.add_edge(e.from, e.to, std::nullopt, e.reward);
        } else {  // rule 1
          NodeId r = x.add_node(Owner::Randomizer, tag(e, "r"), std::nullopt, true);
          x.add_edge(e.from, r, std::nullopt, e.reward);
          x.add_edge(r, e.to, Rational(1), Rational(0));
        }
      } else if (!e.reward.is_zero()) {  // rule 3, reward pushed to the new controller edge
        NodeId c = x.add_node(Owner::Controller, tag(e, "c"), std::nullopt, true);
        NodeId r = x.add_node(Owner::Randomizer, tag(e, "r"), std::nullopt, true);
        x.add_edge(e.from, c, e.probability, Rational(0));
        x.add_edge(c, r, std::nullopt, e.reward);
        link_randomizer(r, e);
      } else if (to == Owner::Randomizer) {  // rule 2
        NodeId c = x.add_node(Owner::Controller, tag(e, "c"), std::nullopt, true);
        x.add_edge(e.from, c, e.probability, Rational(0));
        x.add_edge(c, e.to, std::nullopt, Rational(0));
      } else {
        x.add_edge(e.from, e.to, e.probability, e.reward);
      }
    }
  }
  x.validate();
  if (!x.is_bipartite()) throw MdpError("expansion is not bipartite");
  return x;
}

Policy lift_policy(const RelaxedMdp& expanded, const Policy& p) {
  Policy out;
  out.choice.assign(expanded.size(), -1);
  for (const auto& n : expanded.nodes()) {
    if (n.owner != Owner::Controller) continue;
    if (n.auxiliary) out.choice[static_cast<std::size_t>(n.id)] = 0;
    else out.choice[static_cast<std::size_t>(n.id)] = p.choice.at(static_cast<std::size_t>(n.id));
  }
  return out;
}

void check_policy(const RelaxedMdp& m, const Policy& p) {
  if (p.choice.size() != m.size()) throw MdpError("policy size mismatch");
  for (const auto& n : m.nodes()) {
    int c = p.choice[static_cast<std::size_t>(n.id)];
    if (n.owner == Owner::Randomizer) {
      if (c != -1) throw MdpError("policy chooses at randomizer " + n.label);
    } else if (c < 0 || static_cast<std::size_t>(c) >= m.out(n.id).size()) {
      throw MdpError("policy choice out of range at " + n.label);
    }
  }
}

namespace {

template <class F>
void for_each_step(const RelaxedMdp& m, const Policy& p, NodeId u, F&& f) {
  if (m.node(u).owner == Owner::Controller) {
    f(m.out_edge(u, p.choice[static_cast<std::size_t>(u)]));
    return;
  }
  for (int k : m.out(u)) f(m.edges()[static_cast<std::size_t>(k)]);
}

}  // namespace

void check_unichain(const RelaxedMdp& m, const Policy& p) {
  check_policy(m, p);
  const NodeId t = m.sink();
  std::vector<std::vector<NodeId>> pred(m.size());
  for (const auto& n : m.nodes())
    for_each_step(m, p, n.id, [&](const MdpEdge& e) { pred[static_cast<std::size_t>(e.to)].push_back(n.id); });
  std::vector<char> seen(m.size(), 0);
  std::deque<NodeId> q{t};
  seen[static_cast<std::size_t>(t)] = 1;
  while (!q.empty()) {
    NodeId u = q.front();
    q.pop_front();
    for (NodeId v : pred[static_cast<std::size_t>(u)])
      if (!seen[static_cast<std::size_t>(v)]) seen[static_cast<std::size_t>(v)] = 1, q.push_back(v);
  }
  for (const auto& n : m.nodes())
    if (!seen[static_cast<std::size_t>(n.id)]) throw UnichainViolation("sink unreachable from " + n.label);
}

ValueVector policy_values(const RelaxedMdp& m, const Policy& p) {
  check_unichain(m, p);
  const NodeId t = m.sink();
  std::vector<int> idx(m.size(), -1);
  int k = 0;
  for (const auto& n : m.nodes())
    if (n.id != t) idx[static_cast<std::size_t>(n.id)] = k++;
  num::RationalMatrix A(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
  std::vector<Rational> b(static_cast<std::size_t>(k));
  for (const auto& n : m.nodes()) {
    int i = idx[static_cast<std::size_t>(n.id)];
    if (i < 0) continue;
    auto r = static_cast<std::size_t>(i);
    A(r, r) += Rational(1);
    for_each_step(m, p, n.id, [&](const MdpEdge& e) {
      Rational prob = e.probability.value_or(Rational(1));
      b[r] += prob * e.reward;
      int j = idx[static_cast<std::size_t>(e.to)];
      if (j >= 0) A(r, static_cast<std::size_t>(j)) -= prob;
    });
  }
  auto x = num::solve_linear_system(A, b);
  ValueVector vals(m.size());
  for (const auto& n : m.nodes()) {
    int i = idx[static_cast<std::size_t>(n.id)];
    if (i >= 0) vals[static_cast<std::size_t>(n.id)] = x[static_cast<std::size_t>(i)];
  }
  return vals;
}

std::vector<Switch> improving_switches_mdp(const RelaxedMdp& m, const Policy& p, const ValueVector& vals) {
  std::vector<Switch> out;
  for (const auto& n : m.nodes()) {
    if (n.owner != Owner::Controller) continue;
    auto o = m.out(n.id);
    for (int k = 0; k < static_cast<int>(o.size()); ++k) {
      if (k == p.choice[static_cast<std::size_t>(n.id)]) continue;
      const auto& e = m.out_edge(n.id, k);
      if (vals[static_cast<std::size_t>(e.to)] + e.reward > vals[static_cast<std::size_t>(n.id)])
        out.push_back({n.id, k});
    }
  }
  return out;
}

std::string switch_name(const RelaxedMdp& m, const Switch& s) {
  return m.node(s.from).label + "^" + std::to_string(s.choice);
}

Switch parse_switch_name(const RelaxedMdp& m, const std::string& name) {
  auto caret = name.rfind('^');
  if (caret == std::string::npos) throw MdpError("bad switch name " + name);
  NodeId v = m.at(name.substr(0, caret));
  int k = std::stoi(name.substr(caret + 1));
  if (m.node(v).owner != Owner::Controller || k < 0 || static_cast<std::size_t>(k) >= m.out(v).size())
    throw MdpError("not a controller edge: " + name);
  return {v, k};
}

Rational controller_value_sum(const RelaxedMdp& m, const ValueVector& vals) {
  mpq_class acc = 0;
  for (const auto& n : m.nodes())
    if (n.owner == Owner::Controller && !n.auxiliary) acc += vals[static_cast<std::size_t>(n.id)].raw();
  return Rational::from_mpq(acc);
}

nlohmann::json to_json(const RelaxedMdp& m) {
  nlohmann::json nodes = nlohmann::json::array(), edges = nlohmann::json::array();
  for (const auto& n : m.nodes()) {
    nlohmann::json j = {{"id", n.id}, {"owner", n.owner == Owner::Controller ? "controller" : "randomizer"},
                        {"label", n.label}};
    if (n.priority) j["priority"] = *n.priority;
    if (n.auxiliary) j["auxiliary"] = true;
    nodes.push_back(j);
  }
  for (const auto& e : m.edges()) {
    nlohmann::json j = {{"from", e.from}, {"to", e.to}, {"r", e.reward.str()}};
    if (e.probability) j["p"] = e.probability->str();
    edges.push_back(j);
  }
  return {{"parameters", {{"N", m.params.N.get_str()}, {"eps", m.params.eps.str()}}},
          {"nodes", nodes},
          {"edges", edges}};
}

std::string to_dot(const RelaxedMdp& m, const Policy* p) {
  std::ostringstream os;
  os << "digraph M {\n";
  for (const auto& n : m.nodes())
    os << "  n" << n.id << " [label=\"" << n.label << "\", shape="
       << (n.owner == Owner::Controller ? "circle" : "box") << "];\n";
  for (const auto& n : m.nodes()) {
    auto o = m.out(n.id);
    for (std::size_t k = 0; k < o.size(); ++k) {
      const auto& e = m.edges()[static_cast<std::size_t>(o[k])];
      os << "  n" << e.from << " -> n" << e.to;
      std::string label;
      if (e.probability) label = e.probability->str();
      if (!e.reward.is_zero()) label += (label.empty() ? "" : " ") + std::string("r=") + e.reward.str();
      std::vector<std::string> attrs;
      if (!label.empty()) attrs.push_back("label=\"" + label + "\"");
      if (p && n.owner == Owner::Controller) {
        if (p->choice[static_cast<std::size_t>(n.id)] == static_cast<int>(k)) attrs.push_back("color=blue, penwidth=2");
        else attrs.push_back("style=dotted");
      }
      if (!attrs.empty()) {
        os << " [";
        for (std::size_t a = 0; a < attrs.size(); ++a) os << (a ? ", " : "") << attrs[a];
        os << "]";
      }
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace clb::mdp
