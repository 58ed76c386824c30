#include "clb/mdp/priority_scale.hpp"

#include <algorithm>
#include <map>

namespace clb::mdp {

PriorityScaleReport validate_priority_scale(const RelaxedMdp& m, bool force_pairwise) {
  PriorityScaleReport r;
  std::vector<std::pair<int, BigInt>> P;  // (priority, reward)
  for (const auto& n : m.nodes())
    if (n.priority) {
      BigInt mag = num::ipow(m.params.N, static_cast<unsigned>(*n.priority));
      P.emplace_back(*n.priority, *n.priority % 2 ? BigInt(-mag) : mag);
    }
  std::sort(P.begin(), P.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < P.size(); ++i)
    if (P[i].first == P[i - 1].first) r.failures.push_back("priority " + std::to_string(P[i].first) + " repeated");
  const std::size_t k = P.size();
  if (k == 0 || k > 24) {
    r.failures.push_back("priority node count " + std::to_string(k) + " outside the checkable range");
    return r;
  }

  const std::size_t total = std::size_t{1} << k;
  std::vector<BigInt> sums(total);
  std::vector<int> top(total, -1);  // index into P of the maximal element
  for (std::size_t s = 1; s < total; ++s) {
    std::size_t low = static_cast<std::size_t>(__builtin_ctzll(s));
    sums[s] = sums[s & (s - 1)] + P[low].second;
    top[s] = 63 - __builtin_clzll(s);
  }

  r.exhaustive_pairs = force_pairwise || total <= 512;
  r.property2 = true;
  if (r.exhaustive_pairs) {
    for (std::size_t a = 1; a < total && r.property2; ++a)
      for (std::size_t b = 1; b < total; ++b) {
        if (abs(P[top[a]].second) >= abs(P[top[b]].second)) continue;
        if (abs(sums[a]) >= abs(sums[b])) {
          r.property2 = false;
          r.failures.push_back("property 2 violated for subsets " + std::to_string(a) + " and " + std::to_string(b));
          break;
        }
      }
  } else {
    std::vector<BigInt> hi(k), lo(k);
    std::vector<char> init(k, 0);
    for (std::size_t s = 1; s < total; ++s) {
      auto t = static_cast<std::size_t>(top[s]);
      BigInt v = abs(sums[s]);
      if (!init[t]) { hi[t] = lo[t] = v; init[t] = 1; continue; }
      if (v > hi[t]) hi[t] = v;
      if (v < lo[t]) lo[t] = v;
    }
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        if (abs(P[a].second) < abs(P[b].second) && hi[a] >= lo[b]) {
          r.property2 = false;
          r.failures.push_back("property 2 violated between maxima of priority " + std::to_string(P[a].first) +
                               " and " + std::to_string(P[b].first));
        }
  }

  BigInt max_abs = 0;
  for (const auto& s : sums) max_abs = std::max(max_abs, BigInt(abs(s)));
  std::vector<BigInt> sorted = sums;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  BigInt gap = 0;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    BigInt d = sorted[i] - sorted[i - 1];
    if (gap == 0 || d < gap) gap = d;
  }
  r.max_abs_sum = Rational(max_abs);
  r.min_gap = Rational(gap);
  r.eps_below_gap = m.params.eps * r.max_abs_sum < r.min_gap;
  if (!r.eps_below_gap) r.failures.push_back("eps * max|sum| = " + (m.params.eps * r.max_abs_sum).str() +
                                             " is not below the minimal gap " + r.min_gap.str());
  r.sum_below_n_plus_1 = r.max_abs_sum < Rational(BigInt(m.params.N + 1));
  r.passed = r.property2 && r.eps_below_gap && r.failures.empty();
  return r;
}

}  // namespace clb::mdp
