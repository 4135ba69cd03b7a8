#include "dslap/path_fib.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dslap {

namespace {

FibCache& global_fib_cache() {
  static FibCache cache;
  return cache;
}

// Reduced f_a/f_b using gcd(f_a, f_b) = f_{gcd(a,b)}; avoids big-integer
// gcd on huge Fibonacci values.
Rational fib_ratio(int a, int b) {
  const int g = std::gcd(a, b);
  if (g <= 2) return Rational::from_coprime(fib(a), fib(b));  // f_1 = f_2 = 1
  const BigInt& fg = fib(g);
  return Rational::from_coprime(fib(a) / fg, fib(b) / fg);
}

}  // namespace

const BigInt& fib(int k) {
  if (k < 1) throw std::invalid_argument("fib: index starts at 1");
  auto& cache = global_fib_cache();
  cache.ensure(k);
  return cache.at(k);
}

BigInt det_m(int k) {
  if (k < 1) throw std::invalid_argument("det_m: k must be >= 1");
  BigInt prev2 = 2, prev1 = 5;
  if (k == 1) return prev2;
  if (k == 2) return prev1;
  BigInt cur;
  for (int i = 3; i <= k; ++i) {
    cur = 3 * prev1 - prev2;
    prev2 = prev1;
    prev1 = cur;
  }
  return cur;
}

L1UFactors l1u_factors(int n) {
  if (n < 2) throw std::invalid_argument("l1u_factors: n must be >= 2");
  fib(2 * n);  // warm the cache once
  L1UFactors f;
  f.n = n;
  f.x.reserve(n - 1);
  f.y.reserve(n);
  for (int i = 1; i <= n - 1; ++i) {
    f.x.push_back(-fib_ratio(2 * i - 1, 2 * i + 1));
    f.y.push_back(fib_ratio(2 * i + 1, 2 * i - 1));
  }
  f.y.push_back(fib_ratio(2 * n, 2 * n - 1));
  return f;
}

Rational u_inverse_entry(int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n)
    throw std::out_of_range("u_inverse_entry: index out of range");
  if (i > j) return Rational(0);
  if (j == n) return fib_ratio(2 * i - 1, 2 * n);
  return fib_ratio(2 * i - 1, 2 * j + 1);
}

Rational l1_inverse_entry(int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n)
    throw std::out_of_range("l1_inverse_entry: index out of range");
  if (j > i) return Rational(0);
  return fib_ratio(2 * j - 1, 2 * i - 1);
}

std::vector<Rational> path_last_column(int n) {
  if (n < 1) throw std::invalid_argument("path_last_column: n must be >= 1");
  if (n == 1) return {Rational(1)};
  fib(2 * n);
  std::vector<Rational> col;
  col.reserve(n);
  for (int k = 1; k <= n; ++k) col.push_back(fib_ratio(2 * k - 1, 2 * n));
  return col;
}

Rational omega_path(int n) {
  if (n < 2) throw std::invalid_argument("omega_path: n must be >= 2");
  return Rational::from_coprime(BigInt(1), fib(2 * n));
}

double omega_path_closed_float(int n) {
  const double s5 = std::sqrt(5.0);
  const double a = (3.0 + s5) / 2.0;
  const double b = (3.0 - s5) / 2.0;
  return s5 / (std::pow(a, n) - std::pow(b, n));
}

RationalMatrix assemble_l1(const L1UFactors& f) {
  RationalMatrix m = RationalMatrix::identity(f.n);
  for (int i = 2; i <= f.n; ++i) m.at(i - 1, i - 2) = f.x_at(i - 1);
  return m;
}

RationalMatrix assemble_u(const L1UFactors& f) {
  RationalMatrix m(f.n, f.n);
  for (int i = 1; i <= f.n; ++i) {
    m.at(i - 1, i - 1) = f.y_at(i);
    if (i < f.n) m.at(i - 1, i) = Rational(-1);
  }
  return m;
}

RationalMatrix u_inverse_matrix(int n) {
  RationalMatrix m(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) m.at(i - 1, j - 1) = u_inverse_entry(n, i, j);
  return m;
}

RationalMatrix l1_inverse_matrix(int n) {
  RationalMatrix m(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) m.at(i - 1, j - 1) = l1_inverse_entry(n, i, j);
  return m;
}

DSMatrix compute_b_path_closed(const Graph& g) {
  const auto order = path_order(g);  // throws on non-paths
  const int n = g.vertex_count();
  DSMatrix b = DSMatrix::exact_matrix(n, Rational(1), Engine::PathClosedForm);
  if (n == 1) {
    b.r(0, 0) = Rational(1);
    return b;
  }
  const RationalMatrix prod = multiply(u_inverse_matrix(n), l1_inverse_matrix(n));
  std::vector<int> pos(n);
  for (int p = 0; p < n; ++p) pos[order[p]] = p;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) b.r(u, v) = prod.at(pos[u], pos[v]);
  return b;
}

}  // namespace dslap
