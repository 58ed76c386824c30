#include "clb/lp/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace clb::lp {

namespace {

std::vector<Rational> column(const StandardFormLP& lp, int j) {
  std::vector<Rational> a(lp.rows());
  for (std::size_t i = 0; i < lp.rows(); ++i) a[i] = lp.A(i, static_cast<std::size_t>(j));
  return a;
}

void check_basis(const StandardFormLP& lp, const Basis& B) {
  if (B.basic.size() != lp.rows()) throw std::invalid_argument("basis size differs from row count");
  for (int j : B.basic)
    if (j < 0 || static_cast<std::size_t>(j) >= lp.cols()) throw std::invalid_argument("basis column out of range");
}

std::vector<Rational> duals(const StandardFormLP& lp, const Basis& B) {
  std::vector<Rational> cB;
  for (int j : B.basic) cB.push_back(lp.c[static_cast<std::size_t>(j)]);
  return num::solve_linear_system(lp.A.select_columns(B.basic).transpose(), cB);
}

Rational reduced_cost(const StandardFormLP& lp, const std::vector<Rational>& y, std::size_t j) {
  mpq_class acc = lp.c[j].raw();
  for (std::size_t i = 0; i < lp.rows(); ++i)
    if (!lp.A(i, j).is_zero()) acc -= y[i].raw() * lp.A(i, j).raw();
  return Rational::from_mpq(acc);
}

}  // namespace

BasicSolution basic_solution(const StandardFormLP& lp, const Basis& B) {
  check_basis(lp, B);
  auto xB = num::solve_linear_system(lp.A.select_columns(B.basic), lp.b);
  BasicSolution s;
  s.x.assign(lp.cols(), Rational(0));
  mpq_class obj = 0;
  for (std::size_t r = 0; r < B.basic.size(); ++r) {
    auto j = static_cast<std::size_t>(B.basic[r]);
    s.x[j] = xB[r];
    obj += lp.c[j].raw() * xB[r].raw();
  }
  s.objective = Rational::from_mpq(obj);
  return s;
}

bool is_feasible(const BasicSolution& s) {
  return std::all_of(s.x.begin(), s.x.end(), [](const Rational& v) { return v.sign() >= 0; });
}

Basis basis_from_bits(const StandardFormLP& lp, const family::BitStrategy& s) {
  Basis B;
  for (const auto& node : family::binary_layout(s.n())) {
    if (lp.row_index(node.label) < 0) throw std::invalid_argument("LP has no row " + node.label);
    int j = lp.var_index(family::switch_name(node.label, s.get(node.kind, node.index)));
    if (j < 0) throw std::invalid_argument("LP has no column for " + node.label);
    B.basic.push_back(j);
  }
  // slot order follows the row order
  std::vector<int> ordered(lp.rows(), -1);
  auto layout = family::binary_layout(s.n());
  for (std::size_t k = 0; k < layout.size(); ++k)
    ordered[static_cast<std::size_t>(lp.row_index(layout[k].label))] = B.basic[k];
  B.basic = ordered;
  return B;
}

family::BitStrategy bits_from_basis(const StandardFormLP& lp, const Basis& B, int n) {
  check_basis(lp, B);
  family::BitStrategy s(n);
  for (const auto& node : family::binary_layout(n)) {
    int hits = 0;
    for (int bit = 0; bit <= 1; ++bit) {
      int j = lp.var_index(family::switch_name(node.label, bit));
      if (std::find(B.basic.begin(), B.basic.end(), j) != B.basic.end()) {
        s.set(node.kind, node.index, bit);
        ++hits;
      }
    }
    if (hits != 1)
      throw std::invalid_argument("basis is not policy-shaped at node " + node.label + " (" + std::to_string(hits) +
                                  " basic columns)");
  }
  return s;
}

Basis starting_basis(const StandardFormLP& lp, int n) {
  Basis B = basis_from_bits(lp, family::initial_strategy(n));
  if (!is_feasible(basic_solution(lp, B))) throw std::runtime_error("starting basis is infeasible");
  return B;
}

DualCheck check_dual(const StandardFormLP& lp, const Basis& B) {
  DualCheck d;
  d.y = duals(lp, B);
  d.feasible = d.tight_on_basis = true;
  for (std::size_t j = 0; j < lp.cols(); ++j) {
    Rational r = reduced_cost(lp, d.y, j);
    bool basic = std::find(B.basic.begin(), B.basic.end(), static_cast<int>(j)) != B.basic.end();
    if (r.sign() > 0) {
      d.feasible = false;
      d.violations.push_back("dual row " + lp.var_names[j] + " violated by " + r.str());
    }
    if (basic && !r.is_zero()) {
      d.tight_on_basis = false;
      d.violations.push_back("basic column " + lp.var_names[j] + " not tight");
    }
  }
  return d;
}

SimplexInstance::SimplexInstance(StandardFormLP lp, Basis start, int size_parameter)
    : lp_(std::move(lp)), basis_(std::move(start)), n_(size_parameter) {
  evaluate();
  if (!is_feasible(sol_)) throw std::runtime_error("simplex: infeasible start basis");
}

void SimplexInstance::evaluate() {
  sol_ = basic_solution(lp_, basis_);
  auto y = duals(lp_, basis_);
  improving_.clear();
  for (std::size_t j = 0; j < lp_.cols(); ++j) {
    if (std::find(basis_.basic.begin(), basis_.basic.end(), static_cast<int>(j)) != basis_.basic.end()) continue;
    if (reduced_cost(lp_, y, j).sign() > 0) improving_.push_back(lp_.var_names[j]);
  }
}

cunningham::StepOutcome SimplexInstance::apply(const cunningham::SwitchId& e) {
  if (std::find(improving_.begin(), improving_.end(), e) == improving_.end())
    throw cunningham::RunError("lp: " + e + " has no positive reduced cost");
  int j = lp_.var_index(e);
  auto d = num::solve_linear_system(lp_.A.select_columns(basis_.basic), column(lp_, j));
  std::optional<std::size_t> leave;
  Rational best;
  bool tie = false;
  for (std::size_t r = 0; r < d.size(); ++r) {
    if (d[r].sign() <= 0) continue;
    Rational ratio = sol_.x[static_cast<std::size_t>(basis_.basic[r])] / d[r];
    if (!leave || ratio < best) {
      leave = r;
      best = ratio;
      tie = false;
    } else if (ratio == best) {
      tie = true;
    }
  }
  if (!leave) throw cunningham::RunError("lp: unbounded direction for " + e);
  if (tie) throw cunningham::RunError("lp: ratio-test tie when entering " + e);

  PivotRecord rec;
  rec.entering = e;
  rec.leaving = lp_.var_names[static_cast<std::size_t>(basis_.basic[*leave])];
  rec.objective_before = sol_.objective;
  basis_.basic[*leave] = j;
  evaluate();
  rec.objective_after = sol_.objective;
  rec.degenerate = rec.objective_after == rec.objective_before;
  if (rec.degenerate) throw cunningham::RunError("lp: degenerate pivot entering " + e + " (leaving " + rec.leaving + ")");
  if (!is_feasible(sol_)) throw cunningham::RunError("lp: pivot on " + e + " left the feasible region");
  pivots_.push_back(rec);

  cunningham::StepOutcome out;
  out.certificate = sol_.objective.str();
  out.improved = rec.objective_after > rec.objective_before;
  out.leaving = rec.leaving;
  out.degenerate = rec.degenerate;
  return out;
}

SimplexInstance simplex_instance(int n, const mdp::MdpParams& p, const family::BitStrategy& start) {
  StandardFormLP lp = build_lp(n, p);
  Basis B = basis_from_bits(lp, start);
  SimplexInstance inst(std::move(lp), std::move(B), n);
  inst.set_parameters({{"N", p.N.get_str()}, {"eps", p.eps.str()}});
  return inst;
}

}  // namespace clb::lp
