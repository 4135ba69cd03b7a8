#pragma once

#include <string>
#include <vector>

#include "dslap/ds_matrix.hpp"
#include "dslap/graph.hpp"
#include "dslap/rational.hpp"
#include "dslap/tree_solver.hpp"

namespace dslap {

enum class CheckStatus { Pass, Fail, Skipped };

/// Outcome of one verification suite: pass/fail plus witnesses of any
/// violation. Near-ties under the float strictness margin are listed in
/// notes, not counted as violations.
struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  long comparisons = 0;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;

  bool passed() const { return status == CheckStatus::Pass; }

  void fail(std::string w) {
    status = CheckStatus::Fail;
    if (witnesses.size() < 50) witnesses.push_back(std::move(w));
  }
  void note(std::string n) {
    if (notes.size() < 50) notes.push_back(std::move(n));
  }
  static CheckResult skipped(std::string name, std::string reason) {
    CheckResult r;
    r.name = std::move(name);
    r.status = CheckStatus::Skipped;
    r.notes.push_back(std::move(reason));
    return r;
  }
};

/// Margin under which a float comparison counts as strict; smaller gaps are
/// near-ties.
inline constexpr double kStrictMargin = 1e-12;

/// Row/column sums 1, symmetry, nonnegativity. Exact matrices are checked
/// exactly (tol is ignored); float matrices within tol.
CheckResult check_doubly_stochastic(const DSMatrix& b, double tol);

/// For a pendant vertex j with neighbor k: b_ik = ((1+h)/h) * b_ij for all
/// i != j. Exact equality in exact mode, 1e-10 in float mode.
CheckResult check_pendant_relation(const Graph& g, const DSMatrix& b);

/// Along every root-to-leaf path from every root i, consecutive row-i
/// entries drop by a factor of at least (1+h)/h.
CheckResult check_tree_decay(const Graph& t, const DSMatrix& b);

/// Rows strictly increase up to the diagonal and strictly decrease after it
/// (path inverses only).
CheckResult check_d_monotone(const DSMatrix& b);

/// Greedy vertex path j -> ... -> i with strictly increasing row-i entries:
/// each step moves to the neighbor of largest b(i, .), ties to the smallest
/// index. Throws if no strictly better neighbor exists before reaching i.
std::vector<int> increasing_path(const DSMatrix& b, const Graph& g, int i, int j);

/// increasing_path over every ordered pair.
CheckResult check_increasing_paths(const DSMatrix& b, const Graph& g);

/// b_ii strictly largest in its row and column.
CheckResult check_diag_dominance(const DSMatrix& b);

/// (sum_j ((1+h)/h)^{-d(i,j)})^{-1}, a lower bound on b_ii for trees.
Rational diag_lower_bound_exact(const Graph& t, int i, const Rational& h);
double diag_lower_bound(const Graph& t, int i, double h);

CheckResult check_diag_lower_bound(const Graph& t, const DSMatrix& b);

/// Entry brackets for trees whose non-pendant vertices all have degree 3.
/// eta_tilde / eta_hat are the per-target decay envelopes (1/4- and
/// 1/3-powers, halved on the final hop into a pendant); from them,
/// b_ii and every b_ij get two-sided bounds.
struct Deg3Bounds {
  int i = 0;
  std::vector<Rational> eta_tilde, eta_hat;  // slot i unused
  Rational bii_lower, bii_upper;
  std::vector<Rational> bij_lower, bij_upper;
};

Deg3Bounds t3_bounds(const Graph& t, int i);

/// Brackets of every row against an exact h = 1 tree inverse.
CheckResult check_t3_bounds(const Graph& t, const DSMatrix& b);

/// Bounds on each multiplier of one rooted orientation:
///   1 + 1/h <= (1 - h/(h+1)) d_k + h/(h+1) + 1/h <= m_k <= d_k + 1/h,
/// equality throughout on pendant edges, plus the refinement through the
/// smallest child multiplier.
CheckResult multiplier_bounds_check(const MultiplierMap& m, const Graph& t);

/// Spanning rooted forest counts by exhaustive edge-subset enumeration
/// (requires m <= 20): xi_total counts all rooted spanning forests;
/// pair(i, j) counts those where v_i and v_j share the tree rooted at v_i.
struct ForestCount {
  int n = 0;
  BigInt xi_total;
  std::vector<BigInt> xi_pair;  // row-major n*n, symmetric

  const BigInt& pair(int i, int j) const { return xi_pair[static_cast<size_t>(i) * n + j]; }
};

ForestCount forest_count_oracle(const Graph& g);

/// Exact h = 1 inverse against the forest-count ratios, and xi_total
/// against the exact determinant of L + I.
CheckResult check_forest_oracle(const Graph& g);

/// Smallest-entry bounds: omega <= 1/(n+1) with the complete-graph equality
/// flag; for trees (n >= 3) 1/f_{2n} <= omega <= 1/(2(n+1)) with path/star
/// equality flags; and a(G) >= 2(n+1) omega.
struct BoundsReport {
  int n = 0;
  double omega = 0.0;
  Rational omega_exact;           // valid in exact mode
  int omega_i = 0, omega_j = 0;   // position of the minimum
  bool complete_equality = false;
  bool tree_bounds_apply = false;
  bool path_equality = false;
  bool star_equality = false;
  double algebraic_connectivity = 0.0;
  CheckResult result;
};

BoundsReport bounds_report(const Graph& g, const DSMatrix& b);

/// rho(i,j) = b_ii + b_jj - 2 b_ij, remoteness r(i) = sum_j rho(i,j), and
/// the least remote vertices (which coincide with the smallest diagonal).
struct CentralityReport {
  int n = 0;
  std::vector<double> remoteness;
  std::vector<int> least_remote;  // ascending
  double rho_max = 0.0;
  int rho_max_i = 0, rho_max_j = 0;
  bool argmin_matches_diag = false;
  CheckResult result;
};

CentralityReport centrality_report(const DSMatrix& b);

/// Metric axioms of rho on all vertex triples.
CheckResult check_rho_metric(const DSMatrix& b);

/// Sorted eigenvalues of the computed inverse against 1/(1 + h*lambda_i),
/// within 1e-8 elementwise.
CheckResult check_spectrum(const Graph& g, double h);

}  // namespace dslap
