#include <doctest.h>

#include <algorithm>
#include <set>

#include "clb/family/lower_bound.hpp"
#include "clb/parity/game.hpp"
#include "clb/parity/instance.hpp"
#include "clb/parity/io.hpp"
#include "clb/parity/sink.hpp"
#include "clb/parity/valuation.hpp"

using namespace clb;
using namespace clb::parity;

namespace {

std::vector<NodeId> ids(const ParityGame& g, std::initializer_list<const char*> labels) {
  std::vector<NodeId> v;
  for (auto l : labels) v.push_back(g.at(l));
  std::sort(v.begin(), v.end());
  return v;
}

NodeValuation val(const ParityGame& g, const char* cycle, std::initializer_list<const char*> path, int len) {
  return {g.at(cycle), ids(g, path), len};
}

std::set<std::string> improving_names(const ParityGame& g, const Strategy0& s) {
  auto br = best_response(g, s);
  std::set<std::string> out;
  for (const auto& e : improving_switches(g, s, br.xi)) out.insert(edge_name(g, e));
  return out;
}

// sigma(a_3)=g_3, sigma(d_3)=F_3, other bits from the initial strategy
Strategy0 example_sigma(const ParityGame& g) {
  auto b = family::initial_strategy(3);
  b.set('a', 3, 1);
  b.set('d', 3, 1);
  b.set('e', 3, 1);
  return b.to_strategy(g);
}

}  // namespace

TEST_CASE("game model basics") {
  ParityGame g;
  auto a = g.add_node(Player::Zero, 2, "a");
  auto b = g.add_node(Player::One, 1, "b");
  CHECK_THROWS_AS(g.add_node(Player::Zero, 0, "a"), GameError);
  CHECK_THROWS_AS(g.add_node(Player::Zero, -1, "c"), GameError);
  g.add_edge(a, b);
  CHECK_THROWS_AS(g.add_edge(a, b), GameError);
  CHECK_THROWS(g.validate());  // b has no successor
  g.add_edge(b, b);
  g.validate();
  CHECK(g.find("zz") == std::nullopt);
  CHECK(g.at("b") == b);
}

TEST_CASE("reward") {
  auto g = family::build_game(3);
  CHECK(reward(g, g.at("F_1")) == 6);
  CHECK(reward(g, g.at("g_2")) == -11);
  CHECK(reward(g, g.at("t")) == -1);
}

TEST_CASE("compare_path_sets") {
  auto g = family::build_game(3);
  auto M = ids(g, {"c_3", "c_2", "g_2"});
  auto N = ids(g, {"h_1", "a_2", "g_2"});
  CHECK(compare_path_sets(g, M, N) == CompareResult::Less);
  CHECK(compare_path_sets(g, N, M) == CompareResult::Greater);
  CHECK(compare_path_sets(g, M, M) == CompareResult::Equal);
  CHECK(compare_path_sets(g, ids(g, {"a_2"}), ids(g, {"b_2"})) == CompareResult::Incomparable);
  // odd highest difference: having it is worse
  CHECK(compare_path_sets(g, ids(g, {"g_2"}), ids(g, {})) == CompareResult::Less);
}

TEST_CASE("compare_valuations") {
  auto g = family::build_game(3);
  // F_2 has even priority, so a longer approach is worse for player 0 (definition of the ordering)
  CHECK(compare_valuations(g, val(g, "F_2", {"g_2"}, 3), val(g, "F_2", {"g_2"}, 2)) == CompareResult::Less);
  CHECK(compare_valuations(g, val(g, "F_2", {"g_2"}, 3), val(g, "F_2", {"h_1", "g_2"}, 3)) == CompareResult::Less);
  CHECK(compare_valuations(g, val(g, "t", {"h_3"}, 9), val(g, "F_1", {}, 0)) == CompareResult::Less);
  CHECK(compare_valuations(g, val(g, "t", {"h_1"}, 3), val(g, "t", {"h_1"}, 3)) == CompareResult::Equal);
  // odd cycle node: shorter is worse
  CHECK(compare_valuations(g, val(g, "t", {"h_1"}, 2), val(g, "t", {"h_1"}, 3)) == CompareResult::Less);
}

TEST_CASE("play decomposition and node valuation, worked example") {
  auto g = family::build_game(3);
  auto s = example_sigma(g);
  auto t = default_strategy1(g);
  auto F3 = g.at("F_3");
  t.choice[static_cast<std::size_t>(F3)] = g.successor_index(F3, g.at("d_3"));
  auto pd = play_decomposition(g, s, t, g.at("h_2"));
  CHECK(pd.prefix == std::vector<NodeId>{g.at("h_2"), g.at("a_3"), g.at("g_3")});
  CHECK(pd.cycle == std::vector<NodeId>{g.at("F_3"), g.at("d_3")});
  CHECK(node_valuation(g, s, t, g.at("h_2")) == val(g, "F_3", {"h_2", "g_3"}, 3));
  CHECK(node_valuation(g, s, t, g.at("F_3")) == NodeValuation{F3, {}, 0});

  auto tt = play_decomposition(g, s, t, g.at("t"));
  CHECK(tt.prefix.empty());
  CHECK(tt.cycle == std::vector<NodeId>{g.at("t")});

  t.choice[static_cast<std::size_t>(F3)] = g.successor_index(F3, g.at("h_3"));
  CHECK(node_valuation(g, s, t, g.at("a_3")) == val(g, "t", {"a_3", "g_3", "F_3", "h_3"}, 4));
}

TEST_CASE("best response") {
  auto g = family::build_game(3);
  SUBCASE("counter-strategy F_3 -> h_3 in the worked example") {
    auto br = best_response(g, example_sigma(g));
    auto F3 = g.at("F_3");
    CHECK(g.successors(F3)[static_cast<std::size_t>(br.tau.choice[static_cast<std::size_t>(F3)])] == g.at("h_3"));
  }
  SUBCASE("terminal strategy: every cycle component is t") {
    auto br = best_response(g, family::terminal_strategy(3).to_strategy(g));
    for (const auto& v : br.xi) CHECK(v.cycle == g.at("t"));
  }
  SUBCASE("initial strategy: pointwise minimum over all player-1 strategies") {
    auto s = family::initial_strategy(3).to_strategy(g);
    auto br = best_response(g, s);
    std::vector<NodeId> free;
    for (const auto& v : g.nodes())
      if (v.owner == Player::One && g.successors(v.id).size() > 1) free.push_back(v.id);
    std::size_t combos = 1;
    for (auto v : free) combos *= g.successors(v).size();
    CHECK(combos == 18);
    auto t = default_strategy1(g);
    for (std::size_t code = 0; code < combos; ++code) {
      std::size_t c = code;
      for (auto v : free) {
        t.choice[static_cast<std::size_t>(v)] = static_cast<int>(c % g.successors(v).size());
        c /= g.successors(v).size();
      }
      auto xi = game_valuation(g, s, t);
      for (std::size_t v = 0; v < g.size(); ++v) {
        auto r = compare_valuations(g, br.xi[v], xi[v]);
        CHECK((r == CompareResult::Less || r == CompareResult::Equal));
      }
    }
  }
}

TEST_CASE("improving switches") {
  auto g = family::build_game(3);
  auto b = family::initial_strategy(3);
  CHECK(improving_names(g, b.to_strategy(g)) == std::set<std::string>{"e_2^1", "e_3^1"});
  b.apply("e_2^1");
  CHECK(improving_names(g, b.to_strategy(g)) == std::set<std::string>{"a_2^1", "b_2^1", "c_2^1", "e_3^1"});
  CHECK(improving_names(g, family::terminal_strategy(3).to_strategy(g)).empty());
}

TEST_CASE("strict improvement after a switch") {
  auto g = family::build_game(3);
  auto b = family::initial_strategy(3);
  auto before = best_response(g, b.to_strategy(g)).xi;
  b.apply("e_2^1");
  auto after = best_response(g, b.to_strategy(g)).xi;
  CHECK(strictly_improves(g, before, after));
  CHECK_FALSE(strictly_improves(g, after, before));
  CHECK_FALSE(strictly_improves(g, after, after));
}

TEST_CASE("sink game validation") {
  auto g = family::build_game(3);
  auto rep = validate_sink_game(g, family::initial_strategy(3).to_strategy(g));
  CHECK(rep.passed);
  REQUIRE(rep.sink);
  CHECK(g.label(*rep.sink) == "t");
  for (int n = 4; n <= 8; ++n) {
    auto gn = family::build_game(n);
    CHECK(validate_sink_game(gn, family::initial_strategy(n).to_strategy(gn)).passed);
  }
  auto bad = family::build_game(3);
  bad.set_priority(bad.at("t"), 2);
  auto r2 = validate_sink_game(bad, family::initial_strategy(3).to_strategy(bad));
  CHECK_FALSE(r2.passed);
  CHECK_FALSE(r2.sink_exists);
}

TEST_CASE("filtered valuation") {
  auto g = family::build_game(3);
  auto s = family::initial_strategy(3).to_strategy(g);
  auto xi = best_response(g, s).xi;
  for (const auto& v : g.nodes()) {
    CHECK(filtered_valuation(g, xi, v.id, g.at("t")) == xi[static_cast<std::size_t>(v.id)].path);
    CHECK(filtered_valuation(g, xi, v.id, g.at("h_3")).empty());
  }
  // phase 1 of 001 with sigma(d_2)=sigma(e_2)=1: F_2 filtered at priority 6 is {h_2}
  auto b = family::initial_strategy(3);
  b.apply("e_2^1");
  auto s2 = b.to_strategy(g);
  auto xi2 = best_response(g, s2).xi;
  CHECK(filtered_valuation(g, xi2, g.at("F_2"), g.at("F_1")) == ids(g, {"h_2"}));
}

TEST_CASE("json and dot round trip") {
  auto g = family::build_game(3);
  auto j = to_json(g);
  CHECK(j["nodes"].size() == 21);
  CHECK(j["edges"].size() == 36);
  auto g2 = game_from_json(j);
  CHECK(g2.size() == g.size());
  CHECK(g2.edge_count() == g.edge_count());
  CHECK(to_json(g2) == j);
  auto s = family::initial_strategy(3).to_strategy(g);
  auto dot = to_dot(g, &s);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("color=blue") != std::string::npos);
}

TEST_CASE("edge names") {
  auto g = family::build_game(3);
  auto e = parse_edge_name(g, "d_3^0");
  CHECK(g.label(e.from) == "d_3");
  CHECK(edge_name(g, e) == "d_3^0");
  CHECK_THROWS(parse_edge_name(g, "q_9^0"));
}
