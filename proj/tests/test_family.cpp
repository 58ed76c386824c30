#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "clb/cunningham/trace_io.hpp"
#include "clb/family/counter.hpp"
#include "clb/family/lower_bound.hpp"
#include "clb/family/phases.hpp"
#include "clb/parity/instance.hpp"

using namespace clb;
using namespace clb::family;

namespace {
std::vector<BitStrategy> states(int n) {
  auto g = build_game(n);
  parity::ParityInstance inst(g, initial_strategy(n).to_strategy(g), n);
  auto ord = build_ordering(n);
  auto t = cunningham::run(inst, ord, ord.minimum());
  std::vector<BitStrategy> out{initial_strategy(n)};
  for (const auto& e : t.switch_sequence()) {
    out.push_back(out.back());
    out.back().apply(e);
  }
  return out;
}
}  // namespace

TEST_CASE("build_game counts") {
  for (int n = 3; n <= 12; ++n) {
    auto g = build_game(n);
    CHECK(g.size() == static_cast<std::size_t>(8 * n - 3));
    CHECK(g.edge_count() == static_cast<std::size_t>(15 * n - 9));
    std::set<int> pr;
    for (const auto& v : g.nodes()) pr.insert(v.priority);
    CHECK(pr.size() == static_cast<std::size_t>(2 * n + 5));
    CHECK(*pr.rbegin() == 2 * n + 8);
  }
  CHECK_THROWS(build_game(2));
}

TEST_CASE("G_3 edges per table") {
  auto g = build_game(3);
  auto succ = [&](const char* v) {
    std::vector<std::string> out;
    for (auto w : g.successors(g.at(v))) out.push_back(g.label(w));
    return out;
  };
  CHECK(succ("a_3") == std::vector<std::string>{"t", "g_3"});
  CHECK(succ("d_2") == std::vector<std::string>{"g_1", "F_2"});
  CHECK(succ("F_1") == std::vector<std::string>{"h_1", "e_1"});
  CHECK(succ("F_3") == std::vector<std::string>{"h_3", "d_3", "e_3"});
  CHECK(succ("h_3") == std::vector<std::string>{"t"});
  CHECK(succ("s") == std::vector<std::string>{"c_3"});
  CHECK(g.priority(g.at("g_2")) == 11);
  CHECK(g.priority(g.at("h_1")) == 10);
}

TEST_CASE("ordering (1)") {
  auto ord = build_ordering(3);
  CHECK(ord.sequence() == std::vector<std::string>{"e_1^1", "d_2^0", "e_2^1", "b_2^1", "b_2^0", "d_3^0", "e_3^1",
                                                   "c_2^0", "c_2^1", "c_3^0", "c_3^1", "e_1^0", "e_2^0", "e_3^0",
                                                   "d_2^1", "d_3^1", "a_3^1", "a_3^0", "a_2^1", "a_2^0"});
  CHECK(build_ordering(5).size() == 40);
  for (int n = 3; n <= 8; ++n) CHECK(build_ordering(n).minimum() == "e_1^1");
}

TEST_CASE("initial and terminal strategies") {
  auto s = initial_strategy(3);
  CHECK(s.str() == "a_2=0 a_3=0 b_2=0 c_2=0 c_3=0 d_2=1 d_3=1 e_1=1 e_2=0 e_3=0");
  auto t = terminal_strategy(3);
  CHECK(t.str() == "a_2=1 a_3=1 b_2=0 c_2=0 c_3=0 d_2=1 d_3=1 e_1=1 e_2=1 e_3=1");
  CHECK(initial_strategy_all_e_zero(3).get('e', 1) == 0);
  CHECK_THROWS(s.apply("a_2^0"));
  CHECK_THROWS(s.get('b', 3));
  CHECK_FALSE(s.get_if('b', 3));
}

TEST_CASE("counter ops") {
  CounterConfig b(1);
  CHECK(b.value() == 1);
  CHECK(b.nu0() == 2);
  CHECK(b.nu1() == 1);
  CHECK(b.increment().str(3) == "010");
  CHECK(CounterConfig(0).nu0() == 1);
  CHECK_THROWS(CounterConfig(0).nu1());
  CHECK(CounterConfig(3).with_nu0_set().str(3) == "111");
  CHECK(CounterConfig(3).nu0() == 3);
}

TEST_CASE("classify_phase examples") {
  auto c0 = classify_phase(initial_strategy(3));
  REQUIRE_FALSE(c0.empty());
  CHECK(c0.display().phase == 1);
  CHECK(c0.display().config.value() == 1);

  auto s = initial_strategy(3);
  for (const char* e : {"e_2^1", "b_2^1", "d_3^0", "e_3^1"}) s.apply(e);
  auto c4 = classify_phase(s);
  CHECK(c4.display().phase == 2);
  CHECK(c4.display().config.value() == 1);

  auto bad = initial_strategy(4);
  bad.set('b', 2, 1);
  bad.set('b', 3, 1);
  CHECK(classify_phase(bad).empty());

  CHECK(classify_phase(terminal_strategy(3)).display().config.value() == 7);
}

TEST_CASE("classify_phase: pruned equals exhaustive along the runs") {
  for (int n = 3; n <= 4; ++n)
    for (const auto& s : states(n)) CHECK(classify_phase(s).matches == classify_phase_exhaustive(s).matches);
}

TEST_CASE("expected switch constraints") {
  auto s = initial_strategy(3);
  auto c = classify_phase(s);
  auto k = expected_switch_constraints(c.display(), s);
  CHECK(k.must_include.count("e_2^1"));
  CHECK(k.must_include.count("e_3^1"));

  // phase 4 and 5 of the first increment
  auto st = states(3);
  auto p4 = classify_phase(st[7]);
  CHECK(p4.display().phase == 4);
  auto k4 = expected_switch_constraints(p4.display(), st[7]);
  CHECK(k4.must_include.count("d_3^1"));
  auto p5 = classify_phase(st[8]);
  CHECK(p5.display().phase == 5);
  CHECK(expected_switch_constraints(p5.display(), st[8]).must_include.count("a_2^1"));
}

TEST_CASE("per-increment switch multisets") {
  for (int n = 3; n <= 6; ++n) {
    auto st = states(n);
    std::vector<SwitchId> seq;
    for (std::size_t k = 1; k < st.size(); ++k)
      for (std::size_t i = 0; i < st[k].dimension(); ++i)
        if (st[k].bit(i) != st[k - 1].bit(i)) {
          auto layout = binary_layout(n);
          seq.push_back(switch_name(layout[i].label, st[k].bit(i)));
        }
    auto groups = group_by_increment(initial_strategy(n), seq);
    CHECK(groups.size() == (std::size_t{1} << n) - 2);
    for (const auto& [b, v] : groups) {
      std::map<SwitchId, int> m;
      for (const auto& e : v) ++m[e];
      CHECK(m == increment_switches(CounterConfig(b), n));
    }
  }
}

TEST_CASE("golden n=3 trace file matches a fresh run") {
  std::ifstream in(std::string(CLB_TEST_DATA_DIR) + "/parity_n3.jsonl");
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  auto g = build_game(3);
  parity::ParityInstance inst(g, initial_strategy(3).to_strategy(g), 3);
  auto ord = build_ordering(3);
  auto t = cunningham::run(inst, ord, ord.minimum());
  CHECK_FALSE(cunningham::diff_traces(cunningham::to_jsonl(t), ss.str()));
}
