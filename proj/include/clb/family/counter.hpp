#pragma once

#include <cstdint>
#include <string>

namespace clb::family {

// binary counter configuration, bit 1 least significant, zero-extended
class CounterConfig {
public:
  CounterConfig() = default;
  explicit CounterConfig(std::uint64_t value) : v_(value) {}

  std::uint64_t value() const { return v_; }
  int bit(int i) const { return i >= 1 && i <= 64 ? static_cast<int>((v_ >> (i - 1)) & 1) : 0; }
  bool fits(int n) const { return n >= 64 || v_ < (std::uint64_t{1} << n); }

  CounterConfig increment() const { return CounterConfig(v_ + 1); }
  int nu0() const;  // least unset bit
  int nu1() const;  // least set bit; throws on zero
  CounterConfig with_nu0_set() const { return CounterConfig(v_ | (std::uint64_t{1} << (nu0() - 1))); }

  // most significant first, n digits
  std::string str(int n) const;

  friend auto operator<=>(const CounterConfig&, const CounterConfig&) = default;

private:
  std::uint64_t v_ = 0;
};

}  // namespace clb::family
