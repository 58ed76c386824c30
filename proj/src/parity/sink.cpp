#include "clb/parity/sink.hpp"

#include <deque>

#include "clb/parity/valuation.hpp"

namespace clb::parity {

namespace {

bool all_cycles_at(const GameValuation& xi, NodeId sink) {
  for (const auto& v : xi)
    if (v.cycle != sink) return false;
  return true;
}

// all-switches improvement from theta; returns the optimal valuation
GameValuation optimal_valuation(const ParityGame& g, Strategy0 s) {
  for (int iter = 0; iter < 4096; ++iter) {
    auto br = best_response(g, s);
    auto imp = improving_switches(g, s, br.xi);
    if (imp.empty()) return br.xi;
    std::vector<int> pick(g.size(), kNoChoice);
    for (const auto& e : imp) {
      int& p = pick[e.from];
      if (p == kNoChoice) { p = e.choice; continue; }
      auto succ = g.successors(e.from);
      if (compare_valuations(g, br.xi[succ[p]], br.xi[succ[e.choice]]) == CompareResult::Less) p = e.choice;
    }
    for (std::size_t v = 0; v < g.size(); ++v)
      if (pick[v] != kNoChoice) s.choice[v] = pick[v];
  }
  throw GameError("strategy improvement did not terminate");
}

}  // namespace

SinkReport validate_sink_game(const ParityGame& g, const Strategy0& theta) {
  SinkReport r;
  g.validate();
  for (const auto& n : g.nodes()) {
    if (n.priority > 1) continue;
    bool loop = g.successor_index(n.id, n.id) != kNoChoice;
    if (n.priority == 1 && loop && !r.sink) {
      r.sink = n.id;
    } else {
      r.failures.push_back("node " + n.label + " has priority <= 1 but is not the sink");
    }
  }
  r.sink_exists = r.sink.has_value() && r.failures.empty();
  if (!r.sink) r.failures.push_back("no self-loop node of priority 1");
  if (!r.sink_exists) return r;

  std::vector<std::vector<NodeId>> pred(g.size());
  for (const auto& n : g.nodes())
    for (NodeId w : g.successors(n.id)) pred[w].push_back(n.id);
  std::vector<char> seen(g.size(), 0);
  std::deque<NodeId> q{*r.sink};
  seen[*r.sink] = 1;
  std::size_t count = 1;
  while (!q.empty()) {
    NodeId u = q.front();
    q.pop_front();
    for (NodeId p : pred[u])
      if (!seen[p]) { seen[p] = 1; ++count; q.push_back(p); }
  }
  r.reachable_from_all = count == g.size();
  if (!r.reachable_from_all) r.failures.push_back("sink not reachable from every node");

  try {
    auto br = best_response(g, theta);
    r.cycles_at_sink = all_cycles_at(br.xi, *r.sink);
    if (!r.cycles_at_sink) r.failures.push_back("a cycle component of the initial valuation is not the sink");
    r.won_by_player1 = all_cycles_at(optimal_valuation(g, theta), *r.sink);
    if (!r.won_by_player1) r.failures.push_back("player 0 wins some node at the optimum");
  } catch (const std::exception& e) {
    r.failures.push_back(std::string("valuation failure: ") + e.what());
  }
  r.passed = r.failures.empty();
  return r;
}

}  // namespace clb::parity
