#include "clb/family/counter.hpp"

#include <bit>
#include <stdexcept>

namespace clb::family {

int CounterConfig::nu0() const { return std::countr_one(v_) + 1; }

int CounterConfig::nu1() const {
  if (v_ == 0) throw std::domain_error("nu1 undefined on the zero configuration");
  return std::countr_zero(v_) + 1;
}

std::string CounterConfig::str(int n) const {
  std::string s;
  for (int i = n; i >= 1; --i) s += bit(i) ? '1' : '0';
  return s;
}

}  // namespace clb::family
