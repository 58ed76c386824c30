#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clb/cunningham/rule.hpp"
#include "clb/family/lower_bound.hpp"
#include "clb/lp/standard_form.hpp"

namespace clb::lp {

// basic[r] = column basic in slot r
struct Basis {
  std::vector<int> basic;
  friend bool operator==(const Basis&, const Basis&) = default;
};

struct BasicSolution {
  std::vector<Rational> x;  // full length, zero off the basis
  Rational objective;
};

struct PivotRecord {
  std::string entering, leaving;
  Rational objective_before, objective_after;
  bool degenerate = false;
};

BasicSolution basic_solution(const StandardFormLP& lp, const Basis& B);
bool is_feasible(const BasicSolution& s);

// u^{bit(u)} for every row u (rows named by player-0 nodes)
Basis basis_from_bits(const StandardFormLP& lp, const family::BitStrategy& s);
// throws std::invalid_argument naming the row whose node has no / two basic columns
family::BitStrategy bits_from_basis(const StandardFormLP& lp, const Basis& B, int n);

Basis starting_basis(const StandardFormLP& lp, int n);

struct DualCheck {
  bool feasible = false;        // A^T y >= c
  bool tight_on_basis = false;  // equality on basic columns
  std::vector<Rational> y;
  std::vector<std::string> violations;
};

DualCheck check_dual(const StandardFormLP& lp, const Basis& B);

// revised simplex; entering variables are named switches, ties and degenerate pivots abort
class SimplexInstance : public cunningham::ImprovementInstance {
public:
  SimplexInstance(StandardFormLP lp, Basis start, int size_parameter);

  std::string formalism() const override { return "lp"; }
  int size_parameter() const override { return n_; }
  nlohmann::json parameters() const override { return params_; }
  void set_parameters(nlohmann::json j) { params_ = std::move(j); }
  std::vector<cunningham::SwitchId> switch_domain() const override { return lp_.var_names; }
  std::vector<cunningham::SwitchId> improving_set() override { return improving_; }
  cunningham::StepOutcome apply(const cunningham::SwitchId& e) override;
  std::string certificate() const override { return sol_.objective.str(); }

  const StandardFormLP& program() const { return lp_; }
  const Basis& basis() const { return basis_; }
  const BasicSolution& solution() const { return sol_; }
  const std::vector<PivotRecord>& pivots() const { return pivots_; }

private:
  void evaluate();

  StandardFormLP lp_;
  Basis basis_;
  BasicSolution sol_;
  int n_;
  std::vector<cunningham::SwitchId> improving_;
  std::vector<PivotRecord> pivots_;
  nlohmann::json params_ = nlohmann::json::object();
};

SimplexInstance simplex_instance(int n, const mdp::MdpParams& p, const family::BitStrategy& start);

}  // namespace clb::lp
