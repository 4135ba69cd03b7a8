#pragma once

#include <memory>
#include <vector>

#include "dslap/dense.hpp"
#include "dslap/graph.hpp"

namespace dslap {

enum class HeatEngine { Auto, Dense, Tree };

struct HeatState {
  std::vector<double> u;
  long step_index = 0;
  double h = 1.0;
};

/// One implicit Euler step solves (I + h*L) u' = u, so u' is the doubly
/// stochastic inverse applied to u: total mass is preserved and each new
/// value is a convex combination of the old ones.
class HeatSolver {
 public:
  /// Auto picks the linear-time tree elimination for trees and a Cholesky
  /// factorization otherwise; either is computed once and reused for every
  /// step. Asking for the tree engine on a non-tree throws.
  static HeatSolver make(const Graph& g, double h, HeatEngine engine = HeatEngine::Auto);

  HeatState step(const HeatState& s) const;
  std::vector<double> apply(const std::vector<double>& u) const;

  HeatEngine engine() const { return engine_; }
  double h() const { return h_; }
  int size() const { return n_; }

 private:
  HeatSolver() = default;

  int n_ = 0;
  double h_ = 1.0;
  HeatEngine engine_ = HeatEngine::Dense;
  // dense engine: factor plus the matrix itself for one refinement pass per
  // step (keeps long runs from accumulating a mass bias)
  std::shared_ptr<const CholeskyFactor> chol_;
  std::shared_ptr<const SymMatrix> mat_;
  // tree engine: elimination order with per-vertex pivots, from the fixed
  // root outward; alpha is the inverse edge multiplier of each non-root.
  std::vector<int> order_;
  std::vector<int> parent_;
  std::vector<double> denom_;
  std::vector<double> alpha_;
};

HeatSolver make_heat_solver(const Graph& g, double h, HeatEngine engine = HeatEngine::Auto);

HeatState step(const HeatSolver& solver, const HeatState& s);

struct HeatSummary {
  long step = 0;
  double mass = 0.0;
  double max = 0.0;
  double min = 0.0;
  double dist_to_mean = 0.0;
};

struct HeatTrajectory {
  double h = 1.0;
  std::vector<HeatState> records;
  std::vector<HeatSummary> summaries;
  /// Estimated per-step contraction of the distance to the mean, from the
  /// last pair of recorded states; NaN when not measurable.
  double measured_contraction = 0.0;
};

/// Runs `steps` implicit Euler steps from u0, recording state and summary
/// every record_every steps (plus the initial and final states).
HeatTrajectory simulate(const Graph& g, const std::vector<double>& u0, double h,
                        long steps, long record_every = 1,
                        HeatEngine engine = HeatEngine::Auto);

}  // namespace dslap
