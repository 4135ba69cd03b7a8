#pragma once

#include <string>
#include <vector>

#include "dslap/rational.hpp"

namespace dslap {

enum class Mode { Float, Exact };
enum class Engine { Dense, Tree, PathClosedForm };

std::string to_string(Mode m);
std::string to_string(Engine e);

/// The computed inverse of I + h*L: symmetric, doubly stochastic,
/// nonnegative (entrywise positive when the source graph is connected).
/// Exact mode carries reduced rationals, float mode doubles.
class DSMatrix {
 public:
  DSMatrix() = default;

  static DSMatrix float_matrix(int n, double h, Engine engine) {
    DSMatrix b;
    b.n_ = n;
    b.h_ = h;
    b.mode_ = Mode::Float;
    b.engine_ = engine;
    b.f_.assign(static_cast<size_t>(n) * n, 0.0);
    return b;
  }

  static DSMatrix exact_matrix(int n, Rational h, Engine engine) {
    DSMatrix b;
    b.n_ = n;
    b.hx_ = std::move(h);
    b.h_ = b.hx_.to_double();
    b.mode_ = Mode::Exact;
    b.engine_ = engine;
    b.r_.assign(static_cast<size_t>(n) * n, Rational(0));
    return b;
  }

  int size() const { return n_; }
  double h() const { return h_; }
  /// Exact step parameter; meaningful only in exact mode.
  const Rational& h_exact() const { return hx_; }
  Mode mode() const { return mode_; }
  Engine engine() const { return engine_; }
  bool is_exact() const { return mode_ == Mode::Exact; }

  const Rational& r(int i, int j) const { return r_[idx(i, j)]; }
  Rational& r(int i, int j) { return r_[idx(i, j)]; }

  double fv(int i, int j) const { return f_[idx(i, j)]; }
  double& fv(int i, int j) { return f_[idx(i, j)]; }

  /// Entry as double in either mode.
  double value(int i, int j) const {
    return is_exact() ? r_[idx(i, j)].to_double() : f_[idx(i, j)];
  }

  DSMatrix to_float() const {
    if (!is_exact()) return *this;
    DSMatrix b = float_matrix(n_, h_, engine_);
    for (size_t k = 0; k < r_.size(); ++k) b.f_[k] = r_[k].to_double();
    return b;
  }

 private:
  size_t idx(int i, int j) const { return static_cast<size_t>(i) * n_ + j; }

  int n_ = 0;
  double h_ = 1.0;
  Rational hx_ = Rational(1);
  Mode mode_ = Mode::Float;
  Engine engine_ = Engine::Dense;
  std::vector<double> f_;
  std::vector<Rational> r_;
};

inline std::string to_string(Mode m) { return m == Mode::Float ? "float" : "exact"; }

inline std::string to_string(Engine e) {
  switch (e) {
    case Engine::Dense: return "dense";
    case Engine::Tree: return "tree";
    default: return "path-closed-form";
  }
}

}  // namespace dslap
