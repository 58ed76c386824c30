#include "clb/numerics/rational.hpp"

#include <ostream>

namespace clb::num {

Rational::Rational(const BigInt& p, const BigInt& q) {
  if (q == 0) throw DivisionByZero("rational with zero denominator");
  q_ = mpq_class(p, q);
  q_.canonicalize();
}

Rational Rational::from_mpq(const mpq_class& q) {
  Rational r;
  r.q_ = q;
  r.q_.canonicalize();
  return r;
}

Rational Rational::parse(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("not a rational: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  auto slash = text.find('/');
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw bad();
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw bad();
    for (std::size_t k = i; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') throw bad();
    BigInt v;
    if (v.set_str(std::string(s[0] == '+' ? s.substr(1) : s), 10) != 0) throw bad();
    return v;
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt den = parse_int(text.substr(slash + 1));
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::abs() const { return from_mpq(::abs(q_)); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

BigInt ipow(const BigInt& base, unsigned exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational pow(const Rational& base, int exponent) {
  if (exponent >= 0) {
    unsigned e = static_cast<unsigned>(exponent);
    return Rational(ipow(base.numerator(), e), ipow(base.denominator(), e));
  }
  if (base.is_zero()) throw DivisionByZero("zero to a negative power");
  unsigned e = static_cast<unsigned>(-exponent);
  return Rational(ipow(base.denominator(), e), ipow(base.numerator(), e));
}

}  // namespace clb::num
