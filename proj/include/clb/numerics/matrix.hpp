#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "clb/numerics/rational.hpp"

namespace clb::num {

class SingularMatrix : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }

  RationalMatrix transpose() const;
  // columns picked in the given order
  RationalMatrix select_columns(std::span<const int> cols) const;

  std::vector<Rational> multiply(std::span<const Rational> x) const;

  static RationalMatrix identity(std::size_t n);

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// Unique x with A x = b. Throws SingularMatrix.
std::vector<Rational> solve_linear_system(const RationalMatrix& A, std::span<const Rational> b);

}  // namespace clb::num
