#pragma once

#include <vector>

#include "dslap/ds_matrix.hpp"
#include "dslap/graph.hpp"
#include "dslap/rational.hpp"

namespace dslap {

/// Dense matrix of rationals; used for the exact routes (factor products,
/// exact inverses, oracle cross-checks).
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rational(0)) {}

  static RationalMatrix identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

/// Product, skipping zero entries of the left factor (many callers pass
/// bidiagonal or triangular matrices).
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

/// I + h*L as exact rationals. Requires h > 0.
RationalMatrix modified_laplacian_rational(const Graph& g, const Rational& h);

/// Gauss-Jordan inverse; throws std::domain_error on a singular input.
RationalMatrix rational_inverse(RationalMatrix m);

/// Exact inverse of I + h*L via rational elimination. Works for any graph;
/// intended for small orders.
DSMatrix compute_b_exact_dense(const Graph& g, const Rational& h);

/// Fraction-free (Bareiss) determinant of an integer matrix, exact.
BigInt bareiss_det(std::vector<std::vector<BigInt>> m);

/// Integer matrix of L + I (the h = 1 modified Laplacian).
std::vector<std::vector<BigInt>> integer_modified_laplacian(const Graph& g);

}  // namespace dslap
