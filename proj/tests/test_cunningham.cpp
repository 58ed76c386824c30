#include <doctest.h>

#include "clb/cunningham/rule.hpp"
#include "clb/cunningham/trace_io.hpp"
#include "clb/family/lower_bound.hpp"
#include "clb/parity/instance.hpp"

using namespace clb;
using namespace clb::cunningham;

namespace {

// toy instance: a counter that may only increase to 3 via named steps
class Toy : public ImprovementInstance {
public:
  explicit Toy(int start, bool honest = true) : v_(start), honest_(honest) {}
  std::string formalism() const override { return "toy"; }
  int size_parameter() const override { return 3; }
  std::vector<SwitchId> switch_domain() const override { return {"x", "y", "z"}; }
  std::vector<SwitchId> improving_set() override {
    if (v_ >= 3) return {};
    return {"y", "z"};
  }
  StepOutcome apply(const SwitchId&) override {
    ++v_;
    StepOutcome o;
    o.certificate = std::to_string(v_);
    o.improved = honest_;
    return o;
  }
  std::string certificate() const override { return std::to_string(v_); }

private:
  int v_;
  bool honest_;
};

RunTrace parity_trace(int n) {
  auto g = family::build_game(n);
  parity::ParityInstance inst(g, family::initial_strategy(n).to_strategy(g), n);
  auto ord = family::build_ordering(n);
  return run(inst, ord, ord.minimum());
}

}  // namespace

TEST_CASE("edge ordering") {
  auto ord = EdgeOrdering::parse("# comment\nb\n\na\n c \n");
  CHECK(ord.size() == 3);
  CHECK(ord.minimum() == "b");
  CHECK(ord.rank("c") == 2);
  CHECK_THROWS(EdgeOrdering({"a", "a"}));
  CHECK_THROWS(ord.rank("zz"));
  std::vector<SwitchId> dom{"a", "b"};
  CHECK_THROWS(ord.check_domain(dom));
}

TEST_CASE("successor operator") {
  auto ord = family::build_ordering(3);
  std::vector<SwitchId> F{"e_2^1", "e_3^1"};
  CHECK(successor("e_1^1", F, ord) == "e_2^1");
  std::vector<SwitchId> one{"c_3^0"};
  CHECK(successor("a_2^1", one, ord) == "c_3^0");
  std::vector<SwitchId> wrap{"e_1^1", "e_2^1"};
  CHECK(successor("a_2^0", wrap, ord) == "e_1^1");
  CHECK(successor("e_2^1", wrap, ord) == "e_2^1");  // inclusive
  std::vector<SwitchId> none;
  CHECK_THROWS(successor("e_1^1", none, ord));
}

TEST_CASE("run on the n=3 parity instance") {
  auto t = parity_trace(3);
  CHECK(t.steps.size() == 36);
  auto seq = t.switch_sequence();
  std::vector<SwitchId> first9(seq.begin(), seq.begin() + 9);
  CHECK(first9 == std::vector<SwitchId>{"e_2^1", "b_2^1", "d_3^0", "e_3^1", "c_2^1", "e_1^0", "e_3^0", "d_3^1", "a_2^1"});
  for (const auto& s : t.steps)
    CHECK(std::find(s.improving.begin(), s.improving.end(), s.applied) != s.improving.end());
  CHECK_FALSE(pointer_discipline_violation(t, family::build_ordering(3)));
}

TEST_CASE("run: terminal start, cap and non-improvement") {
  EdgeOrdering ord({"x", "y", "z"});
  Toy done(3);
  CHECK(run(done, ord, "x").steps.empty());
  Toy fine(0);
  auto t = run(fine, ord, "x");
  CHECK(t.switch_sequence() == std::vector<SwitchId>{"y", "y", "y"});
  Toy slow(0);
  RunOptions cap;
  cap.max_steps = 2;
  CHECK_THROWS_AS(run(slow, ord, "x", cap), RunError);
  Toy liar(0, false);
  CHECK_THROWS_AS(run(liar, ord, "x"), RunError);
  Toy any(0);
  CHECK_THROWS(run(any, ord, "w"));
}

TEST_CASE("leadsto") {
  auto t = parity_trace(3);
  CHECK(leadsto_check(t, 0, 5));
  CHECK_FALSE(leadsto_check(t, 5, 5));
  CHECK_FALSE(leadsto_check(t, 6, 5));
  // phase-1 state of 001 (state 0) reaches the phase-1 state of 010 (after the 9 switches)
  CHECK(leadsto_check(t, 0, 9));
  CHECK_FALSE(leadsto_check(t, 0, 100));
}

TEST_CASE("jsonl round trip and diff") {
  auto t = parity_trace(3);
  auto text = to_jsonl(t);
  auto back = from_jsonl(text);
  CHECK(back.steps.size() == 36);
  CHECK(back.switch_sequence() == t.switch_sequence());
  CHECK(to_jsonl(back) == text);
  CHECK_FALSE(diff_traces(text, text));
  auto altered = text;
  altered.replace(altered.find("b_2^1"), 5, "c_2^1");
  auto d = diff_traces(altered, text);
  REQUIRE(d);
  CHECK(d->find("line") != std::string::npos);
}

TEST_CASE("default step cap covers the observed run lengths") {
  CHECK(default_step_cap(3) >= 36);
  CHECK(default_step_cap(8) >= 4302);
  CHECK(default_step_cap(10) >= 21442);
}
