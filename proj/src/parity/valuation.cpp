#include "clb/parity/valuation.hpp"

#include <algorithm>
#include <utility>

namespace clb::parity {

const char* to_string(CompareResult r) {
  switch (r) {
    case CompareResult::Less: return "Less";
    case CompareResult::Greater: return "Greater";
    case CompareResult::Equal: return "Equal";
    case CompareResult::Incomparable: return "Incomparable";
  }
  return "?";
}

int reward(const ParityGame& g, NodeId v) {
  int p = g.priority(v);
  return p % 2 == 0 ? p : -p;
}

CompareResult compare_path_sets(const ParityGame& g, std::span<const NodeId> M, std::span<const NodeId> N) {
  std::vector<NodeId> m(M.begin(), M.end()), n(N.begin(), N.end());
  std::sort(m.begin(), m.end());
  std::sort(n.begin(), n.end());
  if (m == n) return CompareResult::Equal;

  // (priority, +1 from M / -1 from N) over the symmetric difference
  std::vector<std::pair<int, int>> diff;
  std::size_t i = 0, j = 0;
  while (i < m.size() || j < n.size()) {
    if (j == n.size() || (i < m.size() && m[i] < n[j])) {
      diff.emplace_back(g.priority(m[i++]), 1);
    } else if (i == m.size() || n[j] < m[i]) {
      diff.emplace_back(g.priority(n[j++]), -1);
    } else {
      ++i, ++j;
    }
  }
  std::sort(diff.begin(), diff.end(), [](auto a, auto b) { return a.first > b.first; });
  for (std::size_t k = 0; k < diff.size();) {
    int p = diff[k].first, d = 0;
    for (; k < diff.size() && diff[k].first == p; ++k) d += diff[k].second;
    if (d == 0) continue;
    // odd p: more occurrences is worse; even p: more is better
    bool m_less = (p % 2 == 1) ? d > 0 : d < 0;
    return m_less ? CompareResult::Less : CompareResult::Greater;
  }
  return CompareResult::Incomparable;
}

CompareResult compare_valuations(const ParityGame& g, const NodeValuation& a, const NodeValuation& b) {
  int ra = reward(g, a.cycle), rb = reward(g, b.cycle);
  if (ra != rb) return ra < rb ? CompareResult::Less : CompareResult::Greater;
  auto c = compare_path_sets(g, a.path, b.path);
  if (c != CompareResult::Equal) return c;
  if (a.length != b.length) {
    bool odd = g.priority(a.cycle) % 2 == 1;
    bool a_less = odd ? a.length < b.length : a.length > b.length;
    return a_less ? CompareResult::Less : CompareResult::Greater;
  }
  return a.cycle == b.cycle ? CompareResult::Equal : CompareResult::Incomparable;
}

PlayDecomposition play_decomposition(const ParityGame& g, const Strategy0& s, const Strategy1& t, NodeId v) {
  std::vector<int> seen(g.size(), -1);
  std::vector<NodeId> walk;
  NodeId u = v;
  while (seen[u] < 0) {
    seen[u] = static_cast<int>(walk.size());
    walk.push_back(u);
    u = target(g, s, t, u);
  }
  std::size_t start = static_cast<std::size_t>(seen[u]);
  std::size_t top = start;
  for (std::size_t k = start; k < walk.size(); ++k)
    if (g.priority(walk[k]) > g.priority(walk[top])) top = k;
  for (std::size_t k = start; k < walk.size(); ++k)
    if (k != top && g.priority(walk[k]) == g.priority(walk[top]))
      throw GameError("cycle through " + g.label(walk[top]) + " repeats its maximal priority");

  PlayDecomposition d;
  d.prefix.assign(walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(top));
  d.cycle.assign(walk.begin() + static_cast<std::ptrdiff_t>(top), walk.end());
  d.cycle.insert(d.cycle.end(), walk.begin() + static_cast<std::ptrdiff_t>(start),
                 walk.begin() + static_cast<std::ptrdiff_t>(top));
  return d;
}

NodeValuation node_valuation(const ParityGame& g, const Strategy0& s, const Strategy1& t, NodeId v) {
  auto d = play_decomposition(g, s, t, v);
  NodeValuation out;
  out.cycle = d.cycle.front();
  int floor = g.priority(out.cycle);
  for (NodeId u : d.prefix)
    if (g.priority(u) > floor) out.path.push_back(u);
  std::sort(out.path.begin(), out.path.end());
  out.length = static_cast<int>(d.prefix.size());
  return out;
}

GameValuation game_valuation(const ParityGame& g, const Strategy0& s, const Strategy1& t) {
  GameValuation xi;
  xi.reserve(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) xi.push_back(node_valuation(g, s, t, static_cast<NodeId>(v)));
  return xi;
}

BestResponse best_response(const ParityGame& g, const Strategy0& s, const Strategy1* warm) {
  check_strategy(g, s);
  BestResponse br;
  br.tau = warm ? *warm : default_strategy1(g);
  check_strategy(g, br.tau);
  const int cap = 4 * static_cast<int>(g.size()) + 16;
  for (;;) {
    br.xi = game_valuation(g, s, br.tau);
    bool changed = false;
    for (const auto& node : g.nodes()) {
      if (node.owner != Player::One) continue;
      auto succ = g.successors(node.id);
      if (succ.size() < 2) continue;
      int best = br.tau.choice[node.id];
      for (int k = 0; k < static_cast<int>(succ.size()); ++k) {
        if (k == best) continue;
        auto c = compare_valuations(g, br.xi[succ[k]], br.xi[succ[best]]);
        if (c == CompareResult::Incomparable)
          throw IncomparableError("best response: successors of " + node.label + " are incomparable");
        if (c == CompareResult::Less) best = k;
      }
      if (best != br.tau.choice[node.id]) {
        br.tau.choice[node.id] = best;
        changed = true;
      }
    }
    if (!changed) return br;
    if (++br.rounds > cap) throw GameError("best response did not converge");
  }
}

std::vector<Edge0> improving_switches(const ParityGame& g, const Strategy0& s, const GameValuation& xi) {
  std::vector<Edge0> out;
  for (const auto& node : g.nodes()) {
    if (node.owner != Player::Zero) continue;
    auto succ = g.successors(node.id);
    const auto& cur = xi[succ[static_cast<std::size_t>(s.choice[node.id])]];
    for (int k = 0; k < static_cast<int>(succ.size()); ++k) {
      if (k == s.choice[node.id]) continue;
      auto c = compare_valuations(g, cur, xi[succ[k]]);
      if (c == CompareResult::Incomparable)
        throw IncomparableError("improving switches: " + node.label + " successors are incomparable");
      if (c == CompareResult::Less) out.push_back(Edge0{node.id, k});
    }
  }
  return out;
}

bool strictly_improves(const ParityGame& g, const GameValuation& before, const GameValuation& after) {
  bool strict = false;
  for (std::size_t v = 0; v < before.size(); ++v) {
    auto c = compare_valuations(g, before[v], after[v]);
    if (c == CompareResult::Less) strict = true;
    else if (c != CompareResult::Equal) return false;
  }
  return strict;
}

std::vector<NodeId> filtered_valuation(const ParityGame& g, const GameValuation& xi, NodeId v, NodeId r) {
  std::vector<NodeId> out;
  int floor = g.priority(r);
  for (NodeId u : xi.at(static_cast<std::size_t>(v)).path)
    if (g.priority(u) > floor) out.push_back(u);
  return out;
}

std::string format_valuation(const ParityGame& g, const NodeValuation& v) {
  std::vector<std::string> names;
  for (NodeId u : v.path) names.push_back(g.label(u));
  std::sort(names.begin(), names.end());
  std::string out = "(" + g.label(v.cycle) + ",{";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  return out + "}," + std::to_string(v.length) + ")";
}

}  // namespace clb::parity
