#pragma once

#include <vector>

#include "dslap/ds_matrix.hpp"
#include "dslap/exact_linalg.hpp"
#include "dslap/graph.hpp"
#include "dslap/rational.hpp"

namespace dslap {

/// Memoized Fibonacci values f_1 = f_2 = 1, f_k = f_{k-1} + f_{k-2}.
/// ensure() extends the table; at() is a plain read afterwards, so a warmed
/// cache can be shared read-only across threads.
class FibCache {
 public:
  FibCache() : vals_{BigInt(0), BigInt(1), BigInt(1)} {}  // slot 0 unused

  void ensure(int k) {
    while (static_cast<int>(vals_.size()) <= k)
      vals_.push_back(vals_[vals_.size() - 1] + vals_[vals_.size() - 2]);
  }

  const BigInt& at(int k) const { return vals_.at(static_cast<size_t>(k)); }

 private:
  std::vector<BigInt> vals_;
};

/// k-th Fibonacci number, exact. Indexing starts at 1; fib(0) is rejected.
const BigInt& fib(int k);

/// Determinant sequence det M_1 = 2, det M_2 = 5, det M_k = 3*det M_{k-1} - det M_{k-2},
/// where M_k is the order-k path matrix with its first diagonal entry bumped
/// from 2 to 3. Computed by its own recurrence (equals fib(2k+1)).
BigInt det_m(int k);

/// L1 * U factorization data for the order-n modified path Laplacian:
/// L1 is unit lower bidiagonal with subdiagonal x, U upper bidiagonal with
/// diagonal y and superdiagonal -1.
struct L1UFactors {
  int n = 0;
  std::vector<Rational> x;  // x_1..x_{n-1}, all negative
  std::vector<Rational> y;  // y_1..y_n, all positive

  const Rational& x_at(int i) const { return x.at(static_cast<size_t>(i) - 1); }  // 1-based
  const Rational& y_at(int i) const { return y.at(static_cast<size_t>(i) - 1); }
};

/// x_i = -f_{2i-1}/f_{2i+1}, y_i = f_{2i+1}/f_{2i-1} (i < n), y_n = f_{2n}/f_{2n-1}.
L1UFactors l1u_factors(int n);

// Entrywise inverse factors, 1-based indices to match the factor layout.
//   U^{-1}[i][j]  = f_{2i-1}/f_{2j+1} for i <= j < n, f_{2i-1}/f_{2n} for j = n, 0 below
//   L1^{-1}[i][j] = f_{2j-1}/f_{2i-1} for j <= i, 0 above
Rational u_inverse_entry(int n, int i, int j);
Rational l1_inverse_entry(int n, int i, int j);

/// Last column of the inverse for the order-n path: component k (1-based)
/// is f_{2k-1}/f_{2n}.
std::vector<Rational> path_last_column(int n);

/// Smallest entry of the path inverse: 1/f_{2n}.
Rational omega_path(int n);

/// Radical closed form sqrt(5)/(((3+sqrt5)/2)^n - ((3-sqrt5)/2)^n); float
/// cross-check of omega_path only.
double omega_path_closed_float(int n);

// Full-matrix assembly of the factors and their inverses, for moderate n.
RationalMatrix assemble_l1(const L1UFactors& f);
RationalMatrix assemble_u(const L1UFactors& f);
RationalMatrix u_inverse_matrix(int n);
RationalMatrix l1_inverse_matrix(int n);

/// Exact inverse of a path graph at h = 1 as the product U^{-1} * L1^{-1}.
/// Accepts any vertex labeling of a path; entries are permuted through the
/// positional order along the path.
DSMatrix compute_b_path_closed(const Graph& g);

}  // namespace dslap
