#include <doctest.h>

#include <fstream>
#include <set>

#include <json.hpp>

#include "clb/family/lower_bound.hpp"
#include "clb/mdp/instance.hpp"
#include "clb/mdp/priority_scale.hpp"
#include "clb/mdp/relaxed_mdp.hpp"

using namespace clb;
using namespace clb::mdp;

namespace {
const MdpEdge& edge(const RelaxedMdp& m, const char* from, const char* to) {
  for (int k : m.out(m.at(from)))
    if (m.edges()[static_cast<std::size_t>(k)].to == m.at(to)) return m.edges()[static_cast<std::size_t>(k)];
  throw std::runtime_error("no edge");
}
nlohmann::json frozen(const char* name) {
  std::ifstream in(std::string(CLB_TEST_DATA_DIR) + "/" + name);
  REQUIRE(in);
  return nlohmann::json::parse(in);
}
}  // namespace

TEST_CASE("default parameters and admissibility") {
  auto p = default_params(3);
  CHECK(p.N == 7);
  CHECK(p.eps == pow(Rational(7), -16));
  CHECK_NOTHROW(check_admissible(3, p));
  MdpParams bad = p;
  bad.N = 5;
  CHECK_THROWS(check_admissible(3, bad));
  bad = p;
  bad.eps = Rational(1, 5);
  CHECK_THROWS(check_admissible(3, bad));
  bad.eps = Rational(0);
  CHECK_THROWS(check_admissible(3, bad));
}

TEST_CASE("rewards and probabilities of M_3") {
  auto m = build_relaxed_mdp(3);
  CHECK_NOTHROW(m.validate());
  CHECK(edge(m, "s", "c_3").reward == 1);
  CHECK(edge(m, "g_2", "F_2").reward == -343);
  CHECK(edge(m, "h_3", "t").reward == 117649);
  CHECK(edge(m, "a_2", "a_3").reward == 0);
  auto eps = m.params.eps;
  CHECK(*edge(m, "F_1", "h_1").probability == eps);
  CHECK(*edge(m, "F_2", "d_2").probability == (1 - eps) / 2);
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m.node(static_cast<NodeId>(v)).owner != Owner::Randomizer) continue;
    Rational sum;
    for (int k : m.out(static_cast<NodeId>(v))) sum += *m.edges()[static_cast<std::size_t>(k)].probability;
    CHECK(sum == 1);
  }
  CHECK(m.sink() == m.at("t"));
}

TEST_CASE("bipartite expansion") {
  auto m = build_relaxed_mdp(3);
  CHECK_FALSE(m.is_bipartite());
  auto x = expand_relaxed(m);
  CHECK(x.is_bipartite());
  CHECK_NOTHROW(x.validate());
  CHECK(x.size() > m.size());
  for (std::size_t v = 0; v < m.size(); ++v) CHECK(x.node(static_cast<NodeId>(v)).label == m.node(static_cast<NodeId>(v)).label);
  // a_2 -> a_3 goes through an auxiliary randomizer
  auto mid = x.edges()[static_cast<std::size_t>(x.out(x.at("a_2"))[0])].to;
  CHECK(x.node(mid).auxiliary);
  CHECK(x.node(mid).owner == Owner::Randomizer);

  auto pol = policy_from_bits(m, family::initial_strategy(3));
  auto lifted = lift_policy(x, pol);
  auto vm = policy_values(m, pol);
  auto vx = policy_values(x, lifted);
  for (std::size_t v = 0; v < m.size(); ++v) CHECK(vm[v] == vx[v]);
}

TEST_CASE("values match the independent oracle") {
  auto m = build_relaxed_mdp(3);
  for (auto [file, start] : {std::pair{"mdp_n3_initial_values.json", family::initial_strategy(3)},
                             std::pair{"mdp_n3_terminal_values.json", family::terminal_strategy(3)}}) {
    auto j = frozen(file);
    auto pol = policy_from_bits(m, start);
    auto vals = policy_values(m, pol);
    for (auto& [label, v] : j["values"].items())
      CHECK_MESSAGE(vals[static_cast<std::size_t>(m.at(label))] == Rational::parse(v.get<std::string>()), label);
    CHECK(controller_value_sum(m, vals) == Rational::parse(j["controller_sum"].get<std::string>()));
    CHECK(vals[static_cast<std::size_t>(m.sink())] == 0);
  }
}

TEST_CASE("improving switches") {
  auto m = build_relaxed_mdp(3);
  auto pol = policy_from_bits(m, family::initial_strategy(3));
  auto sw = improving_switches_mdp(m, pol, policy_values(m, pol));
  std::set<std::string> names;
  for (const auto& s : sw) names.insert(switch_name(m, s));
  CHECK(names == std::set<std::string>{"e_2^1", "e_3^1"});
  CHECK(parse_switch_name(m, "e_2^1") == sw.front());

  auto tp = policy_from_bits(m, family::terminal_strategy(3));
  CHECK(improving_switches_mdp(m, tp, policy_values(m, tp)).empty());
}

TEST_CASE("every policy of M_3 is unichain") {
  auto m = build_relaxed_mdp(3);
  const auto dim = family::binary_layout(3).size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim); ++mask) {
    auto pol = policy_from_bits(m, family::BitStrategy::from_mask(3, mask));
    REQUIRE_NOTHROW(check_unichain(m, pol));
    CHECK(bits_from_policy(3, m, pol).mask() == mask);
  }
}

TEST_CASE("a policy that avoids the sink is rejected") {
  RelaxedMdp m;
  auto a = m.add_node(Owner::Controller, "a");
  auto b = m.add_node(Owner::Controller, "b");
  auto t = m.add_node(Owner::Randomizer, "t");
  m.add_edge(a, b, std::nullopt, 0);
  m.add_edge(a, t, std::nullopt, 0);
  m.add_edge(b, a, std::nullopt, 0);
  m.add_edge(t, t, Rational(1), 0);
  CHECK_NOTHROW(check_unichain(m, Policy{{1, 0, -1}}));
  CHECK_THROWS_AS(check_unichain(m, Policy{{0, 0, -1}}), UnichainViolation);
}

TEST_CASE("priority scale") {
  for (int n = 3; n <= 5; ++n) {
    auto r = validate_priority_scale(build_relaxed_mdp(n));
    CHECK(r.passed);
    CHECK(r.property2);
    CHECK(r.eps_below_gap);
  }
  auto pw = validate_priority_scale(build_relaxed_mdp(3), true);
  CHECK(pw.exhaustive_pairs);
  CHECK(pw.passed);
}

TEST_CASE("MDP instance runs the n=3 sequence") {
  auto inst = mdp_instance(3, default_params(3), family::initial_strategy(3));
  auto ord = family::build_ordering(3);
  auto t = cunningham::run(inst, ord, ord.minimum());
  CHECK(t.steps.size() == 36);
  CHECK(inst.certificate() == frozen("mdp_n3_terminal_values.json")["controller_sum"].get<std::string>());
}

TEST_CASE("json and dot export") {
  auto m = build_relaxed_mdp(3);
  auto j = to_json(m);
  CHECK(j["nodes"].size() == m.size());
  CHECK(j["parameters"]["N"] == "7");
  auto pol = policy_from_bits(m, family::initial_strategy(3));
  auto dot = to_dot(m, &pol);
  CHECK(dot.rfind("digraph", 0) == 0);
}
