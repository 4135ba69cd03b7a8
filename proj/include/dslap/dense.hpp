#pragma once

#include <vector>

#include "dslap/ds_matrix.hpp"
#include "dslap/graph.hpp"
#include "dslap/matrix.hpp"

namespace dslap {

/// Lower-triangular Cholesky factor C with C * C^t = M.
class CholeskyFactor {
 public:
  CholeskyFactor(int n, std::vector<double> lower) : n_(n), a_(std::move(lower)) {}

  int size() const { return n_; }
  double at(int i, int j) const { return j <= i ? a_[idx(i, j)] : 0.0; }

  /// Solves M x = rhs by forward and back substitution.
  std::vector<double> solve(std::vector<double> rhs) const;

 private:
  size_t idx(int i, int j) const { return static_cast<size_t>(i) * n_ + j; }

  int n_;
  std::vector<double> a_;  // row-major, lower triangle populated
};

/// Factors a symmetric positive definite matrix; a non-positive pivot
/// throws std::domain_error (the input was not SPD).
CholeskyFactor cholesky_factor(const SymMatrix& m);

/// Inverse of I + h*L by one factorization and n unit-vector solves,
/// then symmetrized as (B + B^t)/2.
DSMatrix compute_b_dense(const Graph& g, double h);

/// Eigenvalues by cyclic Jacobi rotations, sorted descending. Stops when
/// the off-diagonal Frobenius norm drops below 1e-12 times the matrix norm;
/// throws std::runtime_error if 100 sweeps do not converge.
std::vector<double> jacobi_eigenvalues(SymMatrix m);

struct SpectrumReport {
  std::vector<double> laplacian_eigs;  // descending, last is 0 for connected graphs
  double algebraic_connectivity = 0.0;  // second smallest Laplacian eigenvalue
  std::vector<double> b_eigs;           // ascending, pairs with 1/(1 + h*laplacian_eigs[i])
};

SpectrumReport spectrum_report(const Graph& g, double h);

}  // namespace dslap
