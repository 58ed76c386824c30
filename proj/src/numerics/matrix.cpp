#include "clb/numerics/matrix.hpp"

#include <string>

namespace clb::num {

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::select_columns(std::span<const int> cols) const {
  RationalMatrix out(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols.size(); ++k) out(r, k) = (*this)(r, static_cast<std::size_t>(cols[k]));
  return out;
}

std::vector<Rational> RationalMatrix::multiply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix/vector size mismatch");
  std::vector<Rational> y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    mpq_class acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = (*this)(r, c);
      if (!a.is_zero() && !x[c].is_zero()) acc += a.raw() * x[c].raw();
    }
    y[r] = Rational::from_mpq(acc);
  }
  return y;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

namespace {

void divide_content(std::vector<BigInt>& row, std::size_t from) {
  BigInt g = 0;
  for (std::size_t k = from; k < row.size(); ++k) {
    if (row[k] == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[k].get_mpz_t());
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (std::size_t k = from; k < row.size(); ++k)
    if (row[k] != 0) mpz_divexact(row[k].get_mpz_t(), row[k].get_mpz_t(), g.get_mpz_t());
}

}  // namespace

// Fraction-free elimination on the integer-scaled augmented matrix.
std::vector<Rational> solve_linear_system(const RationalMatrix& A, std::span<const Rational> b) {
  const std::size_t n = A.rows();
  if (A.cols() != n) throw std::invalid_argument("solve_linear_system: matrix not square");
  if (b.size() != n) throw std::invalid_argument("solve_linear_system: rhs size mismatch");

  std::vector<std::vector<BigInt>> M(n, std::vector<BigInt>(n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    BigInt l = 1;
    for (std::size_t c = 0; c <= n; ++c) {
      const Rational& v = c < n ? A(r, c) : b[r];
      if (!v.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.raw().get_den_mpz_t());
    }
    for (std::size_t c = 0; c <= n; ++c) {
      const Rational& v = c < n ? A(r, c) : b[r];
      if (v.is_zero()) continue;
      M[r][c] = l / v.raw().get_den();
      M[r][c] *= v.raw().get_num();
    }
    divide_content(M[r], 0);
  }

  BigInt t1, t2;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t r = k; r < n; ++r) {
      if (M[r][k] == 0) continue;
      if (piv == n || mpz_cmpabs(M[r][k].get_mpz_t(), M[piv][k].get_mpz_t()) < 0) piv = r;
    }
    if (piv == n) throw SingularMatrix("singular matrix at column " + std::to_string(k));
    std::swap(M[k], M[piv]);
    const auto& P = M[k];
    for (std::size_t r = k + 1; r < n; ++r) {
      auto& R = M[r];
      if (R[k] == 0) continue;
      BigInt g;
      mpz_gcd(g.get_mpz_t(), P[k].get_mpz_t(), R[k].get_mpz_t());
      BigInt fp = P[k] / g, fr = R[k] / g;
      for (std::size_t c = k + 1; c <= n; ++c) {
        if (P[c] == 0) {
          if (R[c] != 0) R[c] *= fp;
          continue;
        }
        t1 = R[c] * fp;
        t2 = P[c] * fr;
        R[c] = t1 - t2;
      }
      R[k] = 0;
      divide_content(R, k + 1);
    }
  }

  std::vector<mpq_class> x(n);
  for (std::size_t i = n; i-- > 0;) {
    mpq_class acc(M[i][n]);
    for (std::size_t c = i + 1; c < n; ++c)
      if (M[i][c] != 0) acc -= mpq_class(M[i][c]) * x[c];
    acc /= mpq_class(M[i][i]);
    x[i] = acc;
  }
  std::vector<Rational> out;
  out.reserve(n);
  for (auto& v : x) out.push_back(Rational::from_mpq(v));
  return out;
}

}  // namespace clb::num
