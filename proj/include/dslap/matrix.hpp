#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

namespace dslap {

/// Dense symmetric matrix of doubles. set() writes both mirror entries, so
/// the stored array is symmetric bit-for-bit.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {}

  static SymMatrix identity(int n) {
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1.0);
    return m;
  }

  int size() const { return n_; }

  double operator()(int i, int j) const { return a_[idx(i, j)]; }

  void set(int i, int j, double v) {
    a_[idx(i, j)] = v;
    a_[idx(j, i)] = v;
  }

  void add(int i, int j, double v) {
    a_[idx(i, j)] += v;
    if (i != j) a_[idx(j, i)] += v;
  }

  std::vector<double> multiply(const std::vector<double>& x) const {
    assert(static_cast<int>(x.size()) == n_);
    std::vector<double> y(n_, 0.0);
    for (int i = 0; i < n_; ++i) {
      double s = 0.0;
      const double* row = &a_[static_cast<size_t>(i) * n_];
      for (int j = 0; j < n_; ++j) s += row[j] * x[j];
      y[i] = s;
    }
    return y;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
  }

  const std::vector<double>& data() const { return a_; }

 private:
  size_t idx(int i, int j) const {
    assert(i >= 0 && i < n_ && j >= 0 && j < n_);
    return static_cast<size_t>(i) * n_ + j;
  }

  int n_ = 0;
  std::vector<double> a_;
};

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

inline double norm1(const std::vector<double>& a) {
  double s = 0.0;
  for (double v : a) s += std::fabs(v);
  return s;
}

}  // namespace dslap
