#include <doctest.h>

#include <random>

#include "clb/numerics/matrix.hpp"
#include "clb/numerics/rational.hpp"

using namespace clb::num;

TEST_CASE("rational arithmetic") {
  CHECK(Rational::parse("1/2") + Rational::parse("1/3") == Rational::parse("5/6"));
  CHECK((Rational::parse("5/6")).str() == "5/6");
  CHECK(pow(Rational(-3), 4) == Rational(81));
  CHECK(pow(Rational(-3), 5) == Rational(-243));
  CHECK(pow(Rational(2), -3) == Rational::parse("1/8"));
  BigInt big = ipow(BigInt(10), 40);
  CHECK(Rational(big) < Rational(big + 1));
  CHECK((Rational(big) <=> Rational(big + 1)) == std::strong_ordering::less);
}

TEST_CASE("canonical form") {
  Rational r(BigInt(6), BigInt(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.str() == "-3/2");
  CHECK(Rational::parse("4/2").str() == "2");
  CHECK(Rational::parse("-0/5").str() == "0");
  CHECK(Rational::parse("10/4") == Rational::parse("5/2"));
  CHECK(Rational(7).is_integer());
  CHECK(Rational::parse("-7/3").abs() == Rational::parse("7/3"));
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), DivisionByZero);
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK_THROWS(pow(Rational(0), -1));
}

TEST_CASE("solve: identity and 2x2") {
  auto I = RationalMatrix::identity(2);
  std::vector<Rational> b{Rational(7), Rational(-2)};
  CHECK(solve_linear_system(I, b) == b);

  RationalMatrix A(2, 2);
  A(0, 0) = 1; A(0, 1) = 1; A(1, 0) = 1; A(1, 1) = -1;
  std::vector<Rational> rhs{Rational(3), Rational(1)};
  auto x = solve_linear_system(A, rhs);
  CHECK(x[0] == Rational(2));
  CHECK(x[1] == Rational(1));
}

TEST_CASE("solve: singular and malformed") {
  RationalMatrix A(2, 2);
  A(0, 0) = 1; A(0, 1) = 2; A(1, 0) = 2; A(1, 1) = 4;
  std::vector<Rational> b{Rational(1), Rational(2)};
  CHECK_THROWS_AS(solve_linear_system(A, b), SingularMatrix);
  RationalMatrix R(2, 3);
  CHECK_THROWS(solve_linear_system(R, b));
}

TEST_CASE("solve: needs a row swap and tiny fractions") {
  RationalMatrix A(3, 3);
  A(0, 1) = 1;
  A(1, 0) = Rational::parse("1/1000000000000000000000");
  A(1, 2) = 1;
  A(2, 0) = 1; A(2, 1) = 1; A(2, 2) = 1;
  std::vector<Rational> b{Rational(2), Rational(3), Rational(10)};
  auto x = solve_linear_system(A, b);
  CHECK(A.multiply(x) == b);
}

TEST_CASE("matrix helpers") {
  RationalMatrix A(2, 3);
  A(0, 2) = 5;
  A(1, 0) = -1;
  auto T = A.transpose();
  CHECK(T.rows() == 3);
  CHECK(T(2, 0) == Rational(5));
  std::vector<int> cols{2, 0};
  auto S = A.select_columns(cols);
  CHECK(S(0, 0) == Rational(5));
  CHECK(S(1, 1) == Rational(-1));
  CHECK(T.transpose() == A);
}
