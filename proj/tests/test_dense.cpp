#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dslap/dense.hpp"
#include "dslap/graph.hpp"
#include "support.hpp"

using namespace dslap;

namespace {

double max_residual(const Graph& g, double h, const DSMatrix& b) {
  const SymMatrix m = modified_laplacian(g, h);
  const int n = g.vertex_count();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += m(i, k) * b.fv(k, j);
      worst = std::max(worst, std::fabs(s - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("cholesky on small fixed matrices") {
  SymMatrix one(1);
  one.set(0, 0, 4.0);
  CHECK(cholesky_factor(one).at(0, 0) == 2.0);

  const auto c = cholesky_factor(modified_laplacian(path_graph(2), 1.0));
  CHECK(c.at(0, 0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(c.at(1, 0) == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(c.at(1, 1) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-15));
  CHECK(c.at(0, 1) == 0.0);

  const auto id = cholesky_factor(SymMatrix::identity(5));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j <= i; ++j) CHECK(id.at(i, j) == (i == j ? 1.0 : 0.0));
}

TEST_CASE("cholesky rejects non-SPD input") {
  SymMatrix m(2);
  m.set(0, 0, 1.0);
  m.set(1, 1, 1.0);
  m.set(0, 1, 2.0);  // eigenvalues 3 and -1
  CHECK_THROWS_AS(cholesky_factor(m), std::domain_error);
}

TEST_CASE("cholesky reconstructs the input") {
  const Graph g = testsupport::random_connected_graph(25, 30, 2);
  const SymMatrix m = modified_laplacian(g, 1.0);
  const auto c = cholesky_factor(m);
  for (int i = 0; i < 25; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = 0.0;
      for (int k = 0; k <= j; ++k) s += c.at(i, k) * c.at(j, k);
      CHECK(s == doctest::Approx(m(i, j)).epsilon(1e-12));
    }
  }
}

TEST_CASE("compute_b_dense on the worked examples") {
  SUBCASE("order-4 path") {
    const DSMatrix b = compute_b_dense(path_graph(4), 1.0);
    const double e[4][4] = {{13, 5, 2, 1}, {5, 10, 4, 2}, {2, 4, 10, 5}, {1, 2, 5, 13}};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        CHECK(b.fv(i, j) == doctest::Approx(e[i][j] / 21.0).epsilon(1e-13));
  }
  SUBCASE("complete graph of order 4: (I + J)/5") {
    const DSMatrix b = compute_b_dense(complete_graph(4), 1.0);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        CHECK(b.fv(i, j) == doctest::Approx(i == j ? 0.4 : 0.2).epsilon(1e-13));
  }
  SUBCASE("star of order 4") {
    const DSMatrix b = compute_b_dense(star_graph(4), 1.0);
    const double e[4][4] = {{6, 1, 1, 2}, {1, 6, 1, 2}, {1, 1, 6, 2}, {2, 2, 2, 4}};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        CHECK(b.fv(i, j) == doctest::Approx(e[i][j] / 10.0).epsilon(1e-13));
  }
}

TEST_CASE("dense inverse invariants on random graphs") {
  for (const double h : {0.1, 1.0, 10.0}) {
    for (uint64_t seed = 1; seed <= 3; ++seed) {
      const int n = 20 + static_cast<int>(10 * seed);
      const Graph g = testsupport::random_connected_graph(n, n / 2, seed);
      const DSMatrix b = compute_b_dense(g, h);
      for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) {
          row += b.fv(i, j);
          CHECK(b.fv(i, j) > 0.0);
          CHECK(b.fv(i, j) == b.fv(j, i));  // symmetrized storage
        }
        CHECK(std::fabs(row - 1.0) <= 1e-10);
      }
      // diagonal strictly dominates row and column
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) CHECK(b.fv(i, i) - b.fv(i, j) > 1e-12);
    }
  }
}

TEST_CASE("residual stays below 1e-10 up to n = 500") {
  const Graph big = random_tree(500, 9);
  const DSMatrix b = compute_b_dense(big, 1.0);
  CHECK(max_residual(big, 1.0, b) <= 1e-10);

  const Graph dense_g = testsupport::random_connected_graph(120, 400, 4);
  const DSMatrix b2 = compute_b_dense(dense_g, 10.0);
  CHECK(max_residual(dense_g, 10.0, b2) <= 1e-10);
}

TEST_CASE("jacobi eigenvalues on known spectra") {
  const auto p2 = jacobi_eigenvalues(laplacian(path_graph(2)));
  CHECK(p2[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(p2[1] == doctest::Approx(0.0).scale(1).epsilon(1e-12));

  const auto k4 = jacobi_eigenvalues(laplacian(complete_graph(4)));
  for (int i = 0; i < 3; ++i) CHECK(k4[i] == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(std::fabs(k4[3]) <= 1e-12);

  const auto id = jacobi_eigenvalues(SymMatrix::identity(3));
  for (double v : id) CHECK(v == 1.0);
}

TEST_CASE("jacobi matches the cosine form of path spectra") {
  // path Laplacian eigenvalues are 2 - 2 cos(pi k / n)
  const int n = 12;
  auto eigs = jacobi_eigenvalues(laplacian(path_graph(n)));
  std::sort(eigs.begin(), eigs.end());
  for (int k = 0; k < n; ++k) {
    const double expect = 2.0 - 2.0 * std::cos(M_PI * k / n);
    CHECK(eigs[k] == doctest::Approx(expect).scale(1).epsilon(1e-11));
  }
}

TEST_CASE("spectrum report pairs the eigenvalues") {
  SUBCASE("order-2 path") {
    const SpectrumReport r = spectrum_report(path_graph(2), 1.0);
    CHECK(r.laplacian_eigs[0] == doctest::Approx(2.0));
    CHECK(r.laplacian_eigs[1] == doctest::Approx(0.0).scale(1));
    CHECK(r.algebraic_connectivity == doctest::Approx(2.0));
    CHECK(r.b_eigs[0] == doctest::Approx(1.0 / 3.0));
    CHECK(r.b_eigs[1] == doctest::Approx(1.0));
  }
  SUBCASE("complete graph of order 4") {
    const SpectrumReport r = spectrum_report(complete_graph(4), 1.0);
    for (int i = 0; i < 3; ++i) CHECK(r.b_eigs[i] == doctest::Approx(0.2).epsilon(1e-10));
    CHECK(r.b_eigs[3] == doctest::Approx(1.0).epsilon(1e-10));
  }
  SUBCASE("largest eigenvalue of the inverse is always 1") {
    for (uint64_t seed = 0; seed < 4; ++seed) {
      const Graph g = testsupport::random_connected_graph(18, 12, seed);
      const SpectrumReport r = spectrum_report(g, 0.7);
      CHECK(r.b_eigs.back() == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
  SUBCASE("pairing within 1e-8 for h != 1") {
    for (const double h : {0.1, 1.0, 10.0}) {
      const Graph g = testsupport::random_connected_graph(30, 25, 7);
      const SpectrumReport r = spectrum_report(g, h);
      for (int i = 0; i < 30; ++i)
        CHECK(std::fabs(r.b_eigs[i] - 1.0 / (1.0 + h * r.laplacian_eigs[i])) <= 1e-8);
    }
  }
}
