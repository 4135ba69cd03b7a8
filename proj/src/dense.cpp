#include "dslap/dense.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dslap {

std::vector<double> CholeskyFactor::solve(std::vector<double> rhs) const {
  // C z = rhs
  for (int i = 0; i < n_; ++i) {
    double s = rhs[i];
    const double* row = &a_[static_cast<size_t>(i) * n_];
    for (int j = 0; j < i; ++j) s -= row[j] * rhs[j];
    rhs[i] = s / row[i];
  }
  // C^t x = z
  for (int i = n_ - 1; i >= 0; --i) {
    double s = rhs[i];
    for (int j = i + 1; j < n_; ++j) s -= a_[idx(j, i)] * rhs[j];
    rhs[i] = s / a_[idx(i, i)];
  }
  return rhs;
}

CholeskyFactor cholesky_factor(const SymMatrix& m) {
  const int n = m.size();
  std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
  for (int j = 0; j < n; ++j) {
    double d = m(j, j);
    for (int k = 0; k < j; ++k) d -= a[static_cast<size_t>(j) * n + k] * a[static_cast<size_t>(j) * n + k];
    if (!(d > 0.0))
      throw std::domain_error("cholesky_factor: non-positive pivot, input not SPD");
    const double ljj = std::sqrt(d);
    a[static_cast<size_t>(j) * n + j] = ljj;
    for (int i = j + 1; i < n; ++i) {
      double s = m(i, j);
      const double* ri = &a[static_cast<size_t>(i) * n];
      const double* rj = &a[static_cast<size_t>(j) * n];
      for (int k = 0; k < j; ++k) s -= ri[k] * rj[k];
      a[static_cast<size_t>(i) * n + j] = s / ljj;
    }
  }
  return CholeskyFactor(n, std::move(a));
}

DSMatrix compute_b_dense(const Graph& g, double h) {
  const int n = g.vertex_count();
  const CholeskyFactor chol = cholesky_factor(modified_laplacian(g, h));
  DSMatrix b = DSMatrix::float_matrix(n, h, Engine::Dense);
  std::vector<double> e(n, 0.0);
  for (int k = 0; k < n; ++k) {
    e[k] = 1.0;
    const auto col = chol.solve(e);
    e[k] = 0.0;
    for (int i = 0; i < n; ++i) b.fv(i, k) = col[i];
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double v = 0.5 * (b.fv(i, j) + b.fv(j, i));
      b.fv(i, j) = v;
      b.fv(j, i) = v;
    }
  }
  return b;
}

std::vector<double> jacobi_eigenvalues(SymMatrix m) {
  const int n = m.size();
  if (n == 0) return {};
  const double norm = m.frobenius_norm();
  const double threshold = 1e-12 * norm;

  auto off_norm = [&]() {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += 2.0 * m(i, j) * m(i, j);
    return std::sqrt(s);
  };

  int sweeps = 0;
  while (off_norm() > threshold) {
    if (++sweeps > 100)
      throw std::runtime_error("jacobi_eigenvalues: no convergence in 100 sweeps");
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = m(p, q);
        if (apq == 0.0) continue;
        const double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        const double app = m(p, p), aqq = m(q, q);
        m.set(p, p, app - t * apq);
        m.set(q, q, aqq + t * apq);
        m.set(p, q, 0.0);
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = m(r, p), arq = m(r, q);
          m.set(r, p, arp - s * (arq + tau * arp));
          m.set(r, q, arq + s * (arp - tau * arq));
        }
      }
    }
  }

  std::vector<double> eigs(n);
  for (int i = 0; i < n; ++i) eigs[i] = m(i, i);
  std::sort(eigs.rbegin(), eigs.rend());
  return eigs;
}

SpectrumReport spectrum_report(const Graph& g, double h) {
  SpectrumReport rep;
  rep.laplacian_eigs = jacobi_eigenvalues(laplacian(g));
  const int n = g.vertex_count();
  rep.algebraic_connectivity = n >= 2 ? rep.laplacian_eigs[n - 2] : 0.0;
  const DSMatrix b = compute_b_dense(g, h);
  SymMatrix bm(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) bm.set(i, j, b.fv(i, j));
  rep.b_eigs = jacobi_eigenvalues(bm);
  std::sort(rep.b_eigs.begin(), rep.b_eigs.end());
  return rep;
}

}  // namespace dslap
