#include "dslap/exact_linalg.hpp"

#include <stdexcept>

namespace dslap {

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  RationalMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        c.at(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

RationalMatrix modified_laplacian_rational(const Graph& g, const Rational& h) {
  if (!h.is_positive()) throw std::invalid_argument("modified_laplacian_rational: h must be > 0");
  const int n = g.vertex_count();
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1) + h * Rational(g.degree(i));
  for (const auto& [u, v] : g.edges()) {
    m.at(u, v) = -h;
    m.at(v, u) = -h;
  }
  return m;
}

RationalMatrix rational_inverse(RationalMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("rational_inverse: not square");
  const int n = m.rows();
  RationalMatrix inv = RationalMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw std::domain_error("rational_inverse: singular matrix");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(m.at(pivot, j), m.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    const Rational inv_pivot = m.at(col, col).inverse();
    for (int j = 0; j < n; ++j) {
      m.at(col, j) *= inv_pivot;
      inv.at(col, j) *= inv_pivot;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const Rational factor = m.at(r, col);
      if (factor.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        m.at(r, j) -= factor * m.at(col, j);
        inv.at(r, j) -= factor * inv.at(col, j);
      }
    }
  }
  return inv;
}

DSMatrix compute_b_exact_dense(const Graph& g, const Rational& h) {
  const int n = g.vertex_count();
  const RationalMatrix inv = rational_inverse(modified_laplacian_rational(g, h));
  DSMatrix b = DSMatrix::exact_matrix(n, h, Engine::Dense);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b.r(i, j) = inv.at(i, j);
  return b;
}

BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return BigInt(1);
  BigInt prev_pivot = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (m[r][k] != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return BigInt(0);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        // Exact division holds at every Bareiss step.
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev_pivot;
      }
      m[i][k] = 0;
    }
    prev_pivot = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

std::vector<std::vector<BigInt>> integer_modified_laplacian(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, BigInt(0)));
  for (int i = 0; i < n; ++i) m[i][i] = g.degree(i) + 1;
  for (const auto& [u, v] : g.edges()) {
    m[u][v] = -1;
    m[v][u] = -1;
  }
  return m;
}

}  // namespace dslap
