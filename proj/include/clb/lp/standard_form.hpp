#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "clb/mdp/relaxed_mdp.hpp"
#include "clb/numerics/matrix.hpp"

namespace clb::lp {

using num::Rational;
using num::RationalMatrix;

// max c^T x s.t. A x = b, x >= 0
struct StandardFormLP {
  RationalMatrix A;
  std::vector<Rational> b, c;
  std::vector<std::string> var_names;
  std::vector<std::string> row_names;

  std::size_t rows() const { return A.rows(); }
  std::size_t cols() const { return A.cols(); }
  int var_index(const std::string& name) const;
  int row_index(const std::string& name) const;
};

// the displayed LP_n; the i=1 objective term is read as the edges entering g_1
StandardFormLP build_lp(int n, const mdp::MdpParams& p);
StandardFormLP build_lp(int n);

// conservation-constraint primal of a relaxed MDP; randomizer chains and auxiliary
// controllers are composed so variables are the edges of the original controllers
StandardFormLP lp_from_mdp(const mdp::RelaxedMdp& m);

struct LpComparison {
  bool same_names = false;
  bool rows_equivalent = false;  // every [A|b] row a rational multiple of its partner
  bool objective_equal = false;
  std::vector<std::string> mismatches;
  bool passed() const { return same_names && rows_equivalent && objective_equal; }
};

LpComparison compare_lps(const StandardFormLP& x, const StandardFormLP& y);

std::string to_lp_text(const StandardFormLP& lp, const std::string& title = "LP");
nlohmann::json to_json(const StandardFormLP& lp);

}  // namespace clb::lp
