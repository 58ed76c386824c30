#include <doctest.h>

#include "clb/family/lower_bound.hpp"
#include "clb/lp/simplex.hpp"
#include "clb/lp/standard_form.hpp"
#include "clb/mdp/instance.hpp"
#include "clb/parity/instance.hpp"

using namespace clb;
using namespace clb::lp;

TEST_CASE("shape of LP_3") {
  auto lp = build_lp(3);
  CHECK(lp.cols() == 20);
  CHECK(lp.rows() == 10);
  CHECK(lp.b.size() == 10);
  for (const auto& b : lp.b) CHECK(b == 1);
  CHECK(lp.var_index("e_1^0") >= 0);
  CHECK(lp.row_index("d_2") >= 0);
  CHECK(lp.var_index("zz^0") == -1);
  
  auto r = static_cast<std::size_t>(lp.row_index("d_2"));
  CHECK(lp.A(r, static_cast<std::size_t>(lp.var_index("d_2^0"))) == 1);
  // d_2^1 returns to d_2 through F_2 with probability (1 - eps) / 2
  auto eps = mdp::default_params(3).eps;
  CHECK(lp.A(r, static_cast<std::size_t>(lp.var_index("d_2^1"))) == 1 - (1 - eps) / 2);
  CHECK(lp.c[static_cast<std::size_t>(lp.var_index("e_1^0"))] == 1);
}

TEST_CASE("LP_n equals the primal of M_n and of its expansion") {
  for (int n = 3; n <= 5; ++n) {
    auto p = mdp::default_params(n);
    auto m = mdp::build_relaxed_mdp(n, p);
    auto a = compare_lps(build_lp(n, p), lp_from_mdp(m));
    CHECK_MESSAGE(a.passed(), n);
    auto b = compare_lps(build_lp(n, p), lp_from_mdp(mdp::expand_relaxed(m)));
    CHECK_MESSAGE(b.passed(), n);
  }
}

TEST_CASE("a perturbed LP is detected") {
  auto x = build_lp(3);
  auto y = x;
  y.c[0] += 1;
  CHECK_FALSE(compare_lps(x, y).objective_equal);
  auto z = x;
  z.var_names[0] = "q";
  CHECK_FALSE(compare_lps(x, z).passed());
}

TEST_CASE("bases and basic solutions") {
  auto lp = build_lp(3);
  auto B = starting_basis(lp, 3);
  CHECK(B == basis_from_bits(lp, family::initial_strategy(3)));
  CHECK(bits_from_basis(lp, B, 3) == family::initial_strategy(3));
  auto sol = basic_solution(lp, B);
  CHECK(is_feasible(sol));
  for (const auto& name : {"a_2^0", "d_2^1", "e_1^1", "e_2^0"})
    CHECK(sol.x[static_cast<std::size_t>(lp.var_index(name))] > 0);
  CHECK(sol.x[static_cast<std::size_t>(lp.var_index("a_2^1"))] == 0);

  // objective equals the MDP controller value sum
  auto m = mdp::build_relaxed_mdp(3);
  auto vals = mdp::policy_values(m, mdp::policy_from_bits(m, family::initial_strategy(3)));
  CHECK(sol.objective == mdp::controller_value_sum(m, vals));

  for (std::uint64_t mask : {0ULL, 5ULL, 1023ULL, 777ULL}) {
    auto s = family::BitStrategy::from_mask(3, mask);
    CHECK(bits_from_basis(lp, basis_from_bits(lp, s), 3) == s);
  }
  Basis bad = B;
  bad.basic[0] = lp.var_index("b_2^0");
  bad.basic[2] = lp.var_index("b_2^1");
  CHECK_THROWS_AS(bits_from_basis(lp, bad, 3), std::invalid_argument);
}

TEST_CASE("simplex run equals the parity run at n=3") {
  auto inst = simplex_instance(3, mdp::default_params(3), family::initial_strategy(3));
  auto ord = family::build_ordering(3);
  auto t = cunningham::run(inst, ord, ord.minimum());
  CHECK(t.steps.size() == 36);
  for (const auto& p : inst.pivots()) {
    CHECK(p.objective_after > p.objective_before);
    CHECK_FALSE(p.degenerate);
  }
  for (const auto& s : t.steps) CHECK(s.leaving.has_value());
  CHECK(bits_from_basis(inst.program(), inst.basis(), 3) == family::terminal_strategy(3));

  auto g = family::build_game(3);
  parity::ParityInstance par(g, family::initial_strategy(3).to_strategy(g), 3);
  CHECK(cunningham::run(par, ord, ord.minimum()).switch_sequence() == t.switch_sequence());
}

TEST_CASE("dual certificate at the optimum") {
  auto lp = build_lp(3);
  auto opt = check_dual(lp, basis_from_bits(lp, family::terminal_strategy(3)));
  CHECK(opt.feasible);
  CHECK(opt.tight_on_basis);
  CHECK(opt.violations.empty());
  auto start = check_dual(lp, starting_basis(lp, 3));
  CHECK(start.tight_on_basis);
  CHECK_FALSE(start.feasible);
  CHECK(start.violations.size() == 2);
}

TEST_CASE("lp text export") {
  auto text = to_lp_text(build_lp(3), "LP_3");
  CHECK(text.find("Maximize") != std::string::npos);
  CHECK(text.find("Subject To") != std::string::npos);
  CHECK(text.find("End") != std::string::npos);
  CHECK(to_json(build_lp(3))["var_names"].size() == 20);
}
