#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dslap/analysis.hpp"
#include "dslap/dense.hpp"
#include "dslap/exact_linalg.hpp"
#include "dslap/path_fib.hpp"
#include "dslap/tree_solver.hpp"
#include "support.hpp"

using namespace dslap;
using dslap::testsupport::fig_tree6;
using dslap::testsupport::random_connected_graph;

TEST_CASE("check_doubly_stochastic") {
  const DSMatrix exact = compute_b_tree(path_graph(4), Rational(1));
  CHECK(check_doubly_stochastic(exact, 0.0).passed());

  const DSMatrix k4 = compute_b_dense(complete_graph(4), 1.0);
  CHECK(check_doubly_stochastic(k4, 1e-10).passed());

  DSMatrix bad = compute_b_dense(path_graph(4), 1.0);
  bad.fv(2, 1) += 1e-3;
  const CheckResult r = check_doubly_stochastic(bad, 1e-10);
  CHECK_FALSE(r.passed());
  bool mentions_row2 = false;
  for (const auto& w : r.witnesses)
    mentions_row2 = mentions_row2 || w.find("row 2") != std::string::npos ||
                    w.find("(2,1)") != std::string::npos;
  CHECK(mentions_row2);
}

TEST_CASE("pendant relation") {
  SUBCASE("order-4 path, factor 2") {
    const DSMatrix b = compute_b_tree(path_graph(4), Rational(1));
    CHECK(check_pendant_relation(path_graph(4), b).passed());
    CHECK(b.r(0, 2) == Rational(2) * b.r(0, 3));  // third vs fourth in row one
    CHECK(b.r(3, 1) == Rational(2) * b.r(3, 0));
  }
  SUBCASE("star: center column doubles the pendant columns") {
    const Graph s = star_graph(7);
    const DSMatrix b = compute_b_tree(s, Rational(1));
    CHECK(check_pendant_relation(s, b).passed());
  }
  SUBCASE("factor 3 at h = 1/2 on a random tree") {
    const Graph t = random_tree(40, 17);
    const DSMatrix b = compute_b_tree(t, Rational(1, 2));
    CHECK(check_pendant_relation(t, b).passed());
    int j = -1;
    for (int v = 0; v < 40; ++v)
      if (t.degree(v) == 1) { j = v; break; }
    const int k = t.neighbors(j)[0];
    const int i = (j + 1) % 40 == k ? (j + 2) % 40 : (j + 1) % 40;
    if (i != j) CHECK(b.r(i, k) == Rational(3) * b.r(i, j));
  }
  SUBCASE("float mode within 1e-10") {
    const Graph t = random_tree(35, 4);
    CHECK(check_pendant_relation(t, compute_b_dense(t, 0.5)).passed());
  }
  SUBCASE("holds on non-tree graphs with pendants") {
    // triangle with a tail
    const Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    CHECK(check_pendant_relation(g, compute_b_exact_dense(g, Rational(1))).passed());
  }
}

TEST_CASE("tree decay") {
  SUBCASE("paths decay by factor 2 both ways") {
    const DSMatrix b = compute_b_tree(path_graph(9), Rational(1));
    CHECK(check_tree_decay(path_graph(9), b).passed());
  }
  SUBCASE("six-vertex example numbers") {
    const Graph t = fig_tree6();
    const DSMatrix b = compute_b_tree(t, Rational(1));
    CHECK(check_tree_decay(t, b).passed());
    CHECK(b.r(5, 5) == Rational(15, 34));
    CHECK(b.r(5, 4) == Rational(5, 34));
    CHECK(b.r(5, 1) == Rational(5, 68));
    CHECK(b.r(5, 5) >= Rational(2) * b.r(5, 4));
    CHECK(b.r(5, 4) >= Rational(2) * b.r(5, 1));
  }
  SUBCASE("factor 1.1 at h = 10 on a random tree") {
    const Graph t = random_tree(100, 23);
    const DSMatrix b = compute_b_tree(t, Rational(10));
    CHECK(check_tree_decay(t, b).passed());
  }
  SUBCASE("skips non-trees") {
    const Graph k = complete_graph(4);
    CHECK(check_tree_decay(k, compute_b_dense(k, 1.0)).status == CheckStatus::Skipped);
  }
}

TEST_CASE("d-monotone") {
  const DSMatrix b4 = compute_b_tree(path_graph(4), Rational(1));
  CHECK(check_d_monotone(b4).passed());

  // stars carry pendant-entry ties, so the strict property must fail
  const DSMatrix bs = compute_b_tree(star_graph(4), Rational(1));
  CHECK_FALSE(check_d_monotone(bs).passed());

  const DSMatrix b20 = compute_b_tree_float(path_graph(20), 1.0);
  const CheckResult r = check_d_monotone(b20);
  CHECK(r.passed());
  CHECK(r.notes.empty());  // smallest gap 1/f_40 clears the float margin
}

TEST_CASE("increasing paths") {
  SUBCASE("order-4 path, row 0, from the far end") {
    const DSMatrix b = compute_b_tree(path_graph(4), Rational(1));
    const auto p = increasing_path(b, path_graph(4), 0, 3);
    CHECK(p == std::vector<int>{3, 2, 1, 0});
  }
  SUBCASE("complete graph: single hop") {
    const Graph k = complete_graph(4);
    const auto p = increasing_path(compute_b_exact_dense(k, Rational(1)), k, 0, 2);
    CHECK(p == std::vector<int>{2, 0});
  }
  SUBCASE("exists for all pairs of a random connected graph") {
    const Graph g = random_connected_graph(30, 25, 13);
    const DSMatrix b = compute_b_dense(g, 1.0);
    CHECK(check_increasing_paths(b, g).passed());
  }
  SUBCASE("skips disconnected graphs") {
    const Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}});
    const DSMatrix b = compute_b_dense(g, 1.0);
    CHECK(check_increasing_paths(b, g).status == CheckStatus::Skipped);
  }
}

TEST_CASE("diagonal dominance") {
  const Graph g = random_connected_graph(40, 60, 19);
  CHECK(check_diag_dominance(compute_b_dense(g, 1.0)).passed());
  const Graph t = random_tree(25, 2);
  CHECK(check_diag_dominance(compute_b_tree(t, Rational(1, 10))).passed());
}

TEST_CASE("diagonal lower bound") {
  SUBCASE("broom brush pendants: 64/191") {
    const Graph br = broom_graph(6, 5);
    for (int q = 6; q < 11; ++q)
      CHECK(diag_lower_bound_exact(br, q, Rational(1)) == Rational(64, 191));
  }
  SUBCASE("broom path vertices match the closed form") {
    const int k = 6, ell = 5;
    const Graph br = broom_graph(k, ell);
    for (int p = 1; p <= k; ++p) {  // 1-based position along the handle
      const Rational denom = Rational(3) - pow(Rational(1, 2), p - 1) +
                             Rational(ell - 2) * pow(Rational(1, 2), k - p + 1);
      CHECK(diag_lower_bound_exact(br, p - 1, Rational(1)) == denom.inverse());
    }
  }
  SUBCASE("tight on the order-2 path") {
    const Graph p2 = path_graph(2);
    CHECK(diag_lower_bound_exact(p2, 0, Rational(1)) == Rational(2, 3));
    const DSMatrix b = compute_b_tree(p2, Rational(1));
    CHECK(b.r(0, 0) == Rational(2, 3));
  }
  SUBCASE("below the diagonal on random trees for several h") {
    for (const char* hs : {"1/10", "1", "10"}) {
      const Rational h = Rational::parse(hs);
      const Graph t = random_tree(35, 31);
      const DSMatrix b = compute_b_tree(t, h);
      CHECK(check_diag_lower_bound(t, b).passed());
    }
  }
  SUBCASE("float variant agrees") {
    const Graph br = broom_graph(6, 5);
    CHECK(diag_lower_bound(br, 7, 1.0) == doctest::Approx(64.0 / 191.0).epsilon(1e-14));
  }
}

TEST_CASE("degree-3 tree brackets") {
  SUBCASE("smallest case: star of order 4") {
    const Graph s = star_graph(4);
    const Deg3Bounds center = t3_bounds(s, 3);
    CHECK(center.bii_lower == Rational(2, 5));
    CHECK(center.bii_upper == Rational(2, 5));  // tight: every target is a pendant neighbor
    const Deg3Bounds pend = t3_bounds(s, 0);
    CHECK(pend.bii_lower == Rational(3, 5));
    const DSMatrix b = compute_b_tree(s, Rational(1));
    CHECK(b.r(3, 3) == Rational(2, 5));
    CHECK(b.r(0, 0) == Rational(6, 10));
    CHECK(pend.bii_lower <= b.r(0, 0));
    CHECK(b.r(0, 0) <= pend.bii_upper);
  }
  SUBCASE("brackets contain the exact values on random degree-3 trees") {
    for (uint64_t seed = 0; seed < 4; ++seed) {
      const Graph t = random_t3_tree(14, seed);  // 30 vertices
      REQUIRE(is_t3_tree(t));
      const DSMatrix b = compute_b_tree(t, Rational(1));
      CHECK(check_t3_bounds(t, b).passed());
    }
  }
  SUBCASE("rejects other trees") {
    CHECK_THROWS_AS(t3_bounds(path_graph(3), 0), std::invalid_argument);
  }
  SUBCASE("lower envelope never exceeds the upper one") {
    const Graph t = random_t3_tree(10, 3);
    const Deg3Bounds db = t3_bounds(t, 0);
    for (int j = 1; j < t.vertex_count(); ++j) {
      CHECK(db.eta_tilde[j] <= db.eta_hat[j]);
      CHECK(db.bij_lower[j] <= db.bij_upper[j]);
    }
    CHECK(db.bii_lower <= db.bii_upper);
  }
}

TEST_CASE("multiplier bounds") {
  SUBCASE("six-vertex example: left equality at the branch vertex") {
    const Graph t = fig_tree6();
    const MultiplierMap m = multipliers(orient(t, 5), t, Rational(1));
    CHECK(multiplier_bounds_check(m, t).passed());
    // head 3 has degree 2 and pendant children: lower bound (1/2)d+3/2 attained
    CHECK(m.mx[3] == Rational(5, 2));
    CHECK(Rational(1, 2) * Rational(2) + Rational(3, 2) == Rational(5, 2));
  }
  SUBCASE("pendant edges sit at both bounds") {
    const Graph p = path_graph(2);
    const MultiplierMap m = multipliers(orient(p, 1), p, Rational(1));
    CHECK(m.mx[0] == Rational(2));
    CHECK(multiplier_bounds_check(m, p).passed());
  }
  SUBCASE("no violations across roots and h values") {
    const Graph t = random_tree(200, 3);
    for (const char* hs : {"1/10", "1", "10"}) {
      const Rational h = Rational::parse(hs);
      for (int root : {0, 50, 199}) {
        const MultiplierMap m = multipliers(orient(t, root), t, h);
        CHECK(multiplier_bounds_check(m, t).passed());
      }
    }
    for (const double h : {0.1, 1.0, 10.0}) {
      const MultiplierMap m = multipliers(orient(t, 9), t, h);
      CHECK(multiplier_bounds_check(m, t).passed());
    }
  }
}

TEST_CASE("forest count oracle") {
  SUBCASE("order-2 path") {
    const ForestCount fc = forest_count_oracle(path_graph(2));
    CHECK(fc.xi_total == 3);
    CHECK(fc.pair(0, 0) == 2);
    CHECK(fc.pair(0, 1) == 1);
    CHECK(fc.pair(1, 0) == 1);
    CHECK(fc.pair(1, 1) == 2);
  }
  SUBCASE("order-4 path: 21 rooted forests") {
    CHECK(forest_count_oracle(path_graph(4)).xi_total == 21);
    CHECK(forest_count_oracle(path_graph(4)).xi_total == fib(8));
  }
  SUBCASE("triangle: 16 rooted forests") {
    CHECK(forest_count_oracle(complete_graph(3)).xi_total == 16);
  }
  SUBCASE("ratio equality against the exact inverse") {
    CHECK(check_forest_oracle(path_graph(4)).passed());
    CHECK(check_forest_oracle(complete_graph(4)).passed());
    CHECK(check_forest_oracle(star_graph(5)).passed());
    CHECK(check_forest_oracle(random_connected_graph(7, 5, 3)).passed());
    CHECK(check_forest_oracle(Graph::from_edges(5, {{0, 1}, {2, 3}, {3, 4}})).passed());
  }
  SUBCASE("rejects large edge sets") {
    CHECK_THROWS_AS(forest_count_oracle(complete_graph(8)), std::invalid_argument);
  }
  SUBCASE("pair counts are symmetric and sum to the total per column") {
    for (const Graph& g : {broom_graph(3, 2), complete_graph(4),
                           random_connected_graph(6, 4, 9)}) {
      const ForestCount fc = forest_count_oracle(g);
      for (int i = 0; i < fc.n; ++i) {
        BigInt col(0);
        for (int j = 0; j < fc.n; ++j) {
          col += fc.pair(j, i);
          CHECK(fc.pair(i, j) == fc.pair(j, i));
        }
        CHECK(col == fc.xi_total);
      }
    }
  }
}

TEST_CASE("omega bounds report") {
  SUBCASE("complete graph equality") {
    const Graph k5 = complete_graph(5);
    const BoundsReport rep = bounds_report(k5, compute_b_exact_dense(k5, Rational(1)));
    CHECK(rep.result.passed());
    CHECK(rep.omega_exact == Rational(1, 6));
    CHECK(rep.complete_equality);
  }
  SUBCASE("stars attain the upper tree bound") {
    for (int n : {3, 6, 11}) {
      const Graph s = star_graph(n);
      const BoundsReport rep = bounds_report(s, compute_b_tree(s, Rational(1)));
      CHECK(rep.result.passed());
      CHECK(rep.omega_exact == Rational(1, 2 * n + 2));
      CHECK(rep.star_equality);
      CHECK((n == 3 ? rep.path_equality : !rep.path_equality));
      CHECK_FALSE(rep.complete_equality);
    }
  }
  SUBCASE("paths attain the lower tree bound") {
    for (int n : {3, 7, 12}) {
      const Graph p = path_graph(n);
      const BoundsReport rep = bounds_report(p, compute_b_tree(p, Rational(1)));
      CHECK(rep.result.passed());
      CHECK(rep.path_equality);
      CHECK((n == 3 ? rep.star_equality : !rep.star_equality));
    }
  }
  SUBCASE("generic trees sit strictly inside") {
    const Graph t = broom_graph(4, 3);
    const BoundsReport rep = bounds_report(t, compute_b_tree(t, Rational(1)));
    CHECK(rep.result.passed());
    CHECK_FALSE(rep.path_equality);
    CHECK_FALSE(rep.star_equality);
    CHECK(rep.tree_bounds_apply);
  }
  SUBCASE("algebraic connectivity inequality on random graphs") {
    for (uint64_t seed = 0; seed < 6; ++seed) {
      const Graph g = random_connected_graph(20, 15, seed);
      CHECK(bounds_report(g, compute_b_dense(g, 1.0)).result.passed());
    }
  }
  SUBCASE("skips disconnected input") {
    const Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK(bounds_report(g, compute_b_dense(g, 1.0)).result.status == CheckStatus::Skipped);
  }
}

TEST_CASE("centrality") {
  SUBCASE("order-4 path: the two middle vertices") {
    const CentralityReport rep = centrality_report(compute_b_tree(path_graph(4), Rational(1)));
    CHECK(rep.result.passed());
    CHECK(rep.least_remote == std::vector<int>{1, 2});
    CHECK(rep.rho_max_i == 0);
    CHECK(rep.rho_max_j == 3);
  }
  SUBCASE("star: the center") {
    const CentralityReport rep = centrality_report(compute_b_tree(star_graph(8), Rational(1)));
    CHECK(rep.result.passed());
    CHECK(rep.least_remote == std::vector<int>{7});
  }
  SUBCASE("complete graph: full tie") {
    const CentralityReport rep =
        centrality_report(compute_b_exact_dense(complete_graph(6), Rational(1)));
    CHECK(rep.result.passed());
    CHECK(rep.least_remote == std::vector<int>{0, 1, 2, 3, 4, 5});
  }
  SUBCASE("argmin of remoteness equals argmin of the diagonal, float") {
    for (uint64_t seed = 0; seed < 5; ++seed) {
      const Graph g = random_connected_graph(22, 18, seed + 40);
      CHECK(centrality_report(compute_b_dense(g, 1.0)).argmin_matches_diag);
    }
  }
}

TEST_CASE("rho is a metric") {
  const Graph t = random_tree(24, 91);
  CHECK(check_rho_metric(compute_b_tree(t, Rational(1))).passed());
  for (uint64_t seed = 0; seed < 3; ++seed) {
    const Graph g = random_connected_graph(50, 80, seed);
    CHECK(check_rho_metric(compute_b_dense(g, 1.0)).passed());
  }
}

TEST_CASE("spectrum pairing check") {
  CHECK(check_spectrum(path_graph(8), 1.0).passed());
  CHECK(check_spectrum(random_connected_graph(30, 40, 6), 0.1).passed());
  CHECK(check_spectrum(random_connected_graph(30, 40, 6), 10.0).passed());
}

// A 10x10 doubly stochastic inverse printed to four decimals in the source
// material, with an unrendered figure for its tree. Recover the tree by
// numeric inversion and verify the printout is consistent with it.
TEST_CASE("printed 10x10 inverse determines a valid tree") {
  const double printed[10][10] = {
      {0.3723, 0.1861, 0.1168, 0.0365, 0.0146, 0.0584, 0.0073, 0.1861, 0.0146, 0.0073},
      {0.1861, 0.5931, 0.0584, 0.0182, 0.0073, 0.0292, 0.0036, 0.0931, 0.0073, 0.0036},
      {0.1168, 0.0584, 0.3504, 0.1095, 0.0438, 0.1752, 0.0219, 0.0584, 0.0438, 0.0219},
      {0.0365, 0.0182, 0.1095, 0.3467, 0.1387, 0.0547, 0.0693, 0.0182, 0.1387, 0.0693},
      {0.0146, 0.0073, 0.0438, 0.1387, 0.4555, 0.0219, 0.2277, 0.0073, 0.0555, 0.0277},
      {0.0584, 0.0292, 0.1752, 0.0547, 0.0219, 0.5876, 0.0109, 0.0292, 0.0219, 0.0109},
      {0.0073, 0.0036, 0.0219, 0.0693, 0.2277, 0.0109, 0.6139, 0.0036, 0.0277, 0.0139},
      {0.1861, 0.0931, 0.0584, 0.0182, 0.0073, 0.0292, 0.0036, 0.5931, 0.0073, 0.0036},
      {0.0146, 0.0073, 0.0438, 0.1387, 0.0555, 0.0219, 0.0277, 0.0073, 0.4555, 0.2277},
      {0.0073, 0.0036, 0.0219, 0.0693, 0.0277, 0.0109, 0.0139, 0.0036, 0.2277, 0.6139}};
  SymMatrix b(10);
  for (int i = 0; i < 10; ++i)
    for (int j = i; j < 10; ++j) b.set(i, j, 0.5 * (printed[i][j] + printed[j][i]));

  // invert and round: the result should be a modified tree Laplacian
  const auto chol = cholesky_factor(b);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> diag(10);
  std::vector<double> e(10, 0.0);
  for (int k = 0; k < 10; ++k) {
    e[k] = 1.0;
    const auto col = chol.solve(e);
    e[k] = 0.0;
    for (int i = 0; i < 10; ++i) {
      const double rounded = std::round(col[i]);
      CHECK(std::fabs(col[i] - rounded) < 0.2);
      if (i == k) diag[k] = static_cast<int>(rounded);
      else if (rounded == -1.0 && i < k) edges.push_back({i, k});
      else CHECK((rounded == 0.0 || rounded == -1.0));
    }
  }
  const Graph t = Graph::from_edges(10, edges);
  REQUIRE(classify(t).is_tree);
  for (int v = 0; v < 10; ++v) CHECK(diag[v] == t.degree(v) + 1);

  // the recovered tree reproduces the printout to print precision
  const DSMatrix exact = compute_b_tree(t, Rational(1));
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j)
      CHECK(std::fabs(exact.r(i, j).to_double() - printed[i][j]) <= 1.2e-4);
}
