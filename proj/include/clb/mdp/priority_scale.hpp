#pragma once

#include <string>
#include <vector>

#include "clb/mdp/relaxed_mdp.hpp"

namespace clb::mdp {

struct PriorityScaleReport {
  bool passed = false;
  bool property2 = false;          // |v_S| < |v_S'| implies |sum S| < |sum S'|
  bool exhaustive_pairs = false;   // property 2 checked pair by pair (else via per-maximum extremes)
  bool eps_below_gap = false;      // eps * max|sum S| < min positive gap between distinct sums
  bool sum_below_n_plus_1 = false; // informational only, fails for any N >= 2
  Rational max_abs_sum;
  Rational min_gap;
  std::vector<std::string> failures;
};

// priority nodes of m carry reward (-N)^priority on their outgoing edges
PriorityScaleReport validate_priority_scale(const RelaxedMdp& m, bool force_pairwise = false);

}  // namespace clb::mdp
