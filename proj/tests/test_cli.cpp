#include <doctest.h>

#include "clb/cli/suites.hpp"

using namespace clb;
using namespace clb::cli;

TEST_CASE("verification report") {
  VerificationReport rep;
  rep.add(CheckResult{"a", true, "ok"});
  CHECK(rep.passed());
  CHECK_THROWS(rep.add(CheckResult{"a", true, "again"}));
  rep.add(CheckResult{"b", false, "bad"});
  CHECK_FALSE(rep.passed());
  auto j = rep.to_json();
  CHECK(j.dump().find("seconds") == std::string::npos);
  CHECK(rep.timings().size() == 2);
}

TEST_CASE("timed_check turns exceptions into failures") {
  auto r = timed_check("boom", [](CheckResult&) { throw std::runtime_error("nope"); });
  CHECK_FALSE(r.passed);
  CHECK(r.summary.find("nope") != std::string::npos);
  auto ok = timed_check("fine", [](CheckResult& c) { c.passed = true; });
  CHECK(ok.passed);
  CHECK(ok.seconds >= 0);
}

TEST_CASE("config resolution") {
  RunConfig cfg;
  CHECK(resolve_params(cfg).N == 7);
  cfg.eps = num::Rational(1, 2);
  CHECK_THROWS(resolve_params(cfg));
  cfg.eps.reset();
  cfg.N = num::BigInt(3);
  CHECK_THROWS(resolve_params(cfg));

  RunConfig c2;
  auto ord = resolve_ordering(c2);
  CHECK(resolve_pointer(c2, ord) == "e_1^1");
  c2.pointer = "nope^1";
  CHECK_THROWS(resolve_pointer(c2, ord));
  c2.initial = "all-e-zero";
  CHECK(resolve_initial(c2).get('e', 1) == 0);
  c2.initial = "other";
  CHECK_THROWS(resolve_initial(c2));
  c2.ordering_file = "/nonexistent/ordering.txt";
  CHECK_THROWS(resolve_ordering(c2));

  RunConfig c3;
  CHECK(resolve_faces(c3).exhaustive);
  c3.n = 5;
  CHECK_FALSE(resolve_faces(c3).exhaustive);
  CHECK_THROWS(run_formalism("auso", c3));
  CHECK_THROWS(run_formalism("nope", c3));
}

TEST_CASE("prefix table") {
  const auto& t = paper_prefix_table();
  REQUIRE(t.size() == 9);
  CHECK(t[0].phase == 1);
  CHECK(t[0].selected == "e_2^1");
  CHECK(t[0].improving == std::vector<std::string>{"e_2^1", "e_3^1"});
}

TEST_CASE("small suites pass") {
  VerificationReport rep;
  RunConfig cfg;
  suite_structure(3, 4, rep);
  suite_phases(cfg, rep);
  suite_switches(cfg, rep);
  suite_lengths(3, 4, rep);
  suite_cross(cfg, rep);
  for (const auto& c : rep.checks()) CHECK_MESSAGE(c.passed, c.name << ": " << c.summary);
}

TEST_CASE("golden prefix suite reports the known table differences") {
  VerificationReport rep;
  suite_golden_prefix(rep);
  CHECK_FALSE(rep.passed());
}
