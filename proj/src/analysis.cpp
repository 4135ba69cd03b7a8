#include "dslap/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <stdexcept>

#include "dslap/dense.hpp"
#include "dslap/exact_linalg.hpp"
#include "dslap/path_fib.hpp"

namespace dslap {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string entry_name(int i, int j) {
  return "b(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

CheckResult check_doubly_stochastic(const DSMatrix& b, double tol) {
  CheckResult r;
  r.name = "doubly-stochastic";
  const int n = b.size();
  if (b.is_exact()) {
    for (int i = 0; i < n; ++i) {
      Rational row(0), col(0);
      for (int j = 0; j < n; ++j) {
        row += b.r(i, j);
        col += b.r(j, i);
        if (b.r(i, j).is_negative()) r.fail(entry_name(i, j) + " negative");
        if (j > i && b.r(i, j) != b.r(j, i)) r.fail(entry_name(i, j) + " asymmetric");
      }
      if (row != Rational(1)) r.fail("row " + std::to_string(i) + " sum != 1");
      if (col != Rational(1)) r.fail("column " + std::to_string(i) + " sum != 1");
      r.comparisons += 2 * n + 2;
    }
  } else {
    for (int i = 0; i < n; ++i) {
      double row = 0.0, col = 0.0;
      for (int j = 0; j < n; ++j) {
        row += b.fv(i, j);
        col += b.fv(j, i);
        if (b.fv(i, j) < -tol) r.fail(entry_name(i, j) + " negative: " + fmt(b.fv(i, j)));
        if (j > i && std::fabs(b.fv(i, j) - b.fv(j, i)) > tol)
          r.fail(entry_name(i, j) + " asymmetric");
      }
      if (std::fabs(row - 1.0) > tol)
        r.fail("row " + std::to_string(i) + " sum off by " + fmt(row - 1.0));
      if (std::fabs(col - 1.0) > tol)
        r.fail("column " + std::to_string(i) + " sum off by " + fmt(col - 1.0));
      r.comparisons += 2 * n + 2;
    }
  }
  return r;
}

CheckResult check_pendant_relation(const Graph& g, const DSMatrix& b) {
  CheckResult r;
  r.name = "pendant-relation";
  const int n = g.vertex_count();
  const double f = (1.0 + b.h()) / b.h();
  Rational fx;
  if (b.is_exact()) fx = (Rational(1) + b.h_exact()) / b.h_exact();
  for (int j = 0; j < n; ++j) {
    if (g.degree(j) != 1) continue;
    const int k = g.neighbors(j)[0];
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      ++r.comparisons;
      if (b.is_exact()) {
        if (b.r(i, k) != fx * b.r(i, j))
          r.fail(entry_name(i, k) + " != ((1+h)/h) * " + entry_name(i, j));
      } else {
        if (std::fabs(b.fv(i, k) - f * b.fv(i, j)) > 1e-10)
          r.fail(entry_name(i, k) + " vs factor * " + entry_name(i, j) + " off by " +
                 fmt(b.fv(i, k) - f * b.fv(i, j)));
      }
    }
  }
  return r;
}

CheckResult check_tree_decay(const Graph& t, const DSMatrix& b) {
  CheckResult r;
  r.name = "tree-decay";
  if (!classify(t).is_tree) return CheckResult::skipped(r.name, "not a tree");
  const int n = t.vertex_count();
  const double f = (1.0 + b.h()) / b.h();
  Rational fx;
  if (b.is_exact()) fx = (Rational(1) + b.h_exact()) / b.h_exact();
  for (int i = 0; i < n; ++i) {
    const RootedTree rt = orient(t, i);
    for (int k : rt.order) {
      if (k == i) continue;
      const int p = rt.parent[k];
      ++r.comparisons;
      if (b.is_exact()) {
        if (b.r(i, p) < fx * b.r(i, k))
          r.fail("row " + std::to_string(i) + ": " + entry_name(i, p) + " < factor * " +
                 entry_name(i, k));
      } else {
        if (b.fv(i, p) - f * b.fv(i, k) < -kStrictMargin)
          r.fail("row " + std::to_string(i) + ": " + entry_name(i, p) + " < factor * " +
                 entry_name(i, k));
      }
    }
  }
  return r;
}

CheckResult check_d_monotone(const DSMatrix& b) {
  CheckResult r;
  r.name = "d-monotone";
  const int n = b.size();
  auto check_strict = [&](int i, int hi, int lo) {
    // requires b(i, hi) > b(i, lo)
    ++r.comparisons;
    if (b.is_exact()) {
      if (!(b.r(i, hi) > b.r(i, lo)))
        r.fail("row " + std::to_string(i) + ": " + entry_name(i, hi) + " <= " + entry_name(i, lo));
    } else {
      const double d = b.fv(i, hi) - b.fv(i, lo);
      if (d > kStrictMargin) return;
      if (d >= -kStrictMargin)
        r.note("near-tie at row " + std::to_string(i) + ": " + entry_name(i, hi) + " ~ " +
               entry_name(i, lo));
      else
        r.fail("row " + std::to_string(i) + ": " + entry_name(i, hi) + " <= " + entry_name(i, lo));
    }
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) check_strict(i, j + 1, j);      // rising before the diagonal
    for (int j = i; j + 1 < n; ++j) check_strict(i, j, j + 1);  // falling after it
  }
  return r;
}

std::vector<int> increasing_path(const DSMatrix& b, const Graph& g, int i, int j) {
  if (i == j) throw std::invalid_argument("increasing_path: i == j");
  const int n = g.vertex_count();
  std::vector<int> path{j};
  int cur = j;
  for (int steps = 0; cur != i; ++steps) {
    if (steps > n) throw std::runtime_error("increasing_path: did not reach target");
    int best = -1;
    for (int w : g.neighbors(cur)) {  // neighbors sorted: first strict max wins ties
      if (best < 0) {
        best = w;
      } else if (b.is_exact() ? (b.r(i, w) > b.r(i, best)) : (b.fv(i, w) > b.fv(i, best))) {
        best = w;
      }
    }
    if (best < 0) throw std::runtime_error("increasing_path: isolated vertex");
    const bool strictly_up =
        b.is_exact() ? (b.r(i, best) > b.r(i, cur)) : (b.fv(i, best) > b.fv(i, cur));
    if (!strictly_up)
      throw std::runtime_error("increasing_path: no strictly better neighbor at vertex " +
                               std::to_string(cur));
    path.push_back(best);
    cur = best;
  }
  return path;
}

CheckResult check_increasing_paths(const DSMatrix& b, const Graph& g) {
  CheckResult r;
  r.name = "increasing-path";
  if (!classify(g).is_connected) return CheckResult::skipped(r.name, "not connected");
  const int n = g.vertex_count();
  auto try_pair = [&](int i, int j) {
    ++r.comparisons;
    try {
      const auto path = increasing_path(b, g, i, j);
      if (path.back() != i) r.fail("path from " + std::to_string(j) + " missed target");
    } catch (const std::runtime_error& e) {
      r.fail("pair (" + std::to_string(i) + "," + std::to_string(j) + "): " + e.what());
    }
  };
  if (n <= 200) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) try_pair(i, j);
  } else {
    std::mt19937_64 rng(0x1f2e3d4c5b6a7988ull);
    for (int s = 0; s < 10000; ++s) {
      const int i = static_cast<int>(rng() % static_cast<uint64_t>(n));
      const int j = static_cast<int>(rng() % static_cast<uint64_t>(n));
      if (i != j) try_pair(i, j);
    }
    r.notes.push_back("sampled 10000 pairs (order above 200)");
  }
  return r;
}

CheckResult check_diag_dominance(const DSMatrix& b) {
  CheckResult r;
  r.name = "diag-dominance";
  const int n = b.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      ++r.comparisons;
      if (b.is_exact()) {
        if (!(b.r(i, i) > b.r(i, j)))
          r.fail(entry_name(i, i) + " <= " + entry_name(i, j));
      } else if (b.fv(i, i) - b.fv(i, j) <= kStrictMargin) {
        r.fail(entry_name(i, i) + " not strictly above " + entry_name(i, j) + " (margin " +
               fmt(b.fv(i, i) - b.fv(i, j)) + ")");
      }
    }
  }
  return r;
}

Rational diag_lower_bound_exact(const Graph& t, int i, const Rational& h) {
  const auto dist = bfs_distances(t, i);
  const int maxd = *std::max_element(dist.begin(), dist.end());
  if (maxd == kUnreachable) throw std::invalid_argument("diag_lower_bound: disconnected");
  const Rational decay = h / (Rational(1) + h);  // ((1+h)/h)^{-1}
  std::vector<Rational> powers(static_cast<size_t>(maxd) + 1, Rational(1));
  for (int d = 1; d <= maxd; ++d) powers[d] = powers[d - 1] * decay;
  Rational sum(0);
  for (int d : dist) sum += powers[d];
  return sum.inverse();
}

double diag_lower_bound(const Graph& t, int i, double h) {
  const auto dist = bfs_distances(t, i);
  const double decay = h / (1.0 + h);
  double sum = 0.0;
  for (int d : dist) {
    if (d == kUnreachable) throw std::invalid_argument("diag_lower_bound: disconnected");
    sum += std::pow(decay, d);
  }
  return 1.0 / sum;
}

CheckResult check_diag_lower_bound(const Graph& t, const DSMatrix& b) {
  CheckResult r;
  r.name = "diag-lower-bound";
  if (!classify(t).is_tree) return CheckResult::skipped(r.name, "not a tree");
  const int n = t.vertex_count();
  for (int i = 0; i < n; ++i) {
    ++r.comparisons;
    if (b.is_exact()) {
      if (b.r(i, i) < diag_lower_bound_exact(t, i, b.h_exact()))
        r.fail(entry_name(i, i) + " below distance bound");
    } else {
      if (b.fv(i, i) - diag_lower_bound(t, i, b.h()) < -kStrictMargin)
        r.fail(entry_name(i, i) + " below distance bound");
    }
  }
  return r;
}

Deg3Bounds t3_bounds(const Graph& t, int i) {
  if (!is_t3_tree(t))
    throw std::invalid_argument("t3_bounds: non-pendant vertices must all have degree 3");
  const int n = t.vertex_count();
  if (i < 0 || i >= n) throw std::out_of_range("t3_bounds: bad vertex");
  const auto dist = bfs_distances(t, i);
  Deg3Bounds db;
  db.i = i;
  db.eta_tilde.assign(n, Rational(0));
  db.eta_hat.assign(n, Rational(0));
  db.bij_lower.assign(n, Rational(0));
  db.bij_upper.assign(n, Rational(0));
  const Rational quarter(1, 4), third(1, 3), half(1, 2);
  Rational sum_tilde(0), sum_hat(0);
  for (int j = 0; j < n; ++j) {
    if (j == i) continue;
    const int d = dist[j];
    if (t.degree(j) == 1) {
      db.eta_tilde[j] = half * pow(quarter, d - 1);
      db.eta_hat[j] = half * pow(third, d - 1);
    } else {
      db.eta_tilde[j] = pow(quarter, d);
      db.eta_hat[j] = pow(third, d);
    }
    sum_tilde += db.eta_tilde[j];
    sum_hat += db.eta_hat[j];
  }
  db.bii_lower = (Rational(1) + sum_hat).inverse();
  db.bii_upper = (Rational(1) + sum_tilde).inverse();
  for (int j = 0; j < n; ++j) {
    if (j == i) continue;
    db.bij_lower[j] = db.eta_tilde[j] * db.bii_lower;
    db.bij_upper[j] = db.eta_hat[j] * db.bii_upper;
  }
  return db;
}

CheckResult check_t3_bounds(const Graph& t, const DSMatrix& b) {
  CheckResult r;
  r.name = "t3-bounds";
  if (!is_t3_tree(t)) return CheckResult::skipped(r.name, "not a degree-3 tree");
  if (!b.is_exact() || b.h_exact() != Rational(1))
    throw std::invalid_argument("check_t3_bounds: needs an exact h = 1 inverse");
  const int n = t.vertex_count();
  for (int i = 0; i < n; ++i) {
    const Deg3Bounds db = t3_bounds(t, i);
    ++r.comparisons;
    if (b.r(i, i) < db.bii_lower || b.r(i, i) > db.bii_upper)
      r.fail(entry_name(i, i) + " outside bracket");
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      ++r.comparisons;
      if (b.r(i, j) < db.bij_lower[j] || b.r(i, j) > db.bij_upper[j])
        r.fail(entry_name(i, j) + " outside bracket");
    }
  }
  return r;
}

CheckResult multiplier_bounds_check(const MultiplierMap& m, const Graph& t) {
  CheckResult r;
  r.name = "multiplier-bounds";
  const int n = t.vertex_count();
  const bool exact = m.mode == Mode::Exact;
  const double h = m.h;
  const Rational hx = m.h_exact;
  for (int k = 0; k < n; ++k) {
    if (k == m.root) continue;
    const int dk = t.degree(k);
    r.comparisons += 3;
    if (exact) {
      const Rational& mk = m.mx[k];
      const Rational lower1 = Rational(1) + hx.inverse();
      const Rational lower2 = (Rational(1) - hx / (hx + Rational(1))) * Rational(dk) +
                              hx / (hx + Rational(1)) + hx.inverse();
      const Rational upper = Rational(dk) + hx.inverse();
      if (!(lower1 <= lower2 && lower2 <= mk && mk <= upper))
        r.fail("multiplier at vertex " + std::to_string(k) + " outside bounds");
      if (dk == 1 && mk != lower1)
        r.fail("pendant multiplier at vertex " + std::to_string(k) + " != (1+h)/h");
      // refinement through the smallest child multiplier
      if (dk > 1) {
        Rational mstar;
        bool first = true;
        for (int j : t.neighbors(k)) {
          if (j == m.parent[k]) continue;
          if (first || m.mx[j] < mstar) mstar = m.mx[j];
          first = false;
        }
        const Rational refined =
            (Rational(1) - mstar.inverse()) * Rational(dk) + mstar.inverse() + hx.inverse();
        ++r.comparisons;
        if (mk < refined)
          r.fail("multiplier at vertex " + std::to_string(k) + " below refined bound");
      }
    } else {
      const double mk = m.mf[k];
      const double lower1 = 1.0 + 1.0 / h;
      const double lower2 = (1.0 - h / (h + 1.0)) * dk + h / (h + 1.0) + 1.0 / h;
      const double upper = dk + 1.0 / h;
      if (lower1 > lower2 + kStrictMargin || lower2 > mk + kStrictMargin ||
          mk > upper + kStrictMargin)
        r.fail("multiplier at vertex " + std::to_string(k) + " outside bounds: " + fmt(mk));
      if (dk == 1 && std::fabs(mk - lower1) > 1e-10)
        r.fail("pendant multiplier at vertex " + std::to_string(k) + " != (1+h)/h");
      if (dk > 1) {
        double mstar = 0.0;
        bool first = true;
        for (int j : t.neighbors(k)) {
          if (j == m.parent[k]) continue;
          if (first || m.mf[j] < mstar) mstar = m.mf[j];
          first = false;
        }
        const double refined = (1.0 - 1.0 / mstar) * dk + 1.0 / mstar + 1.0 / h;
        ++r.comparisons;
        if (mk < refined - kStrictMargin)
          r.fail("multiplier at vertex " + std::to_string(k) + " below refined bound");
      }
    }
  }
  return r;
}

ForestCount forest_count_oracle(const Graph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (m > 20) throw std::invalid_argument("forest_count_oracle: more than 20 edges");
  const auto& edges = g.edges();

  std::vector<int> uf(n), size_of(n);
  std::vector<long long> pair_acc(static_cast<size_t>(n) * n, 0);
  long long total = 0;

  auto find = [&](int v) {
    while (uf[v] != v) {
      uf[v] = uf[uf[v]];
      v = uf[v];
    }
    return v;
  };

  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::iota(uf.begin(), uf.end(), 0);
    bool acyclic = true;
    for (int e = 0; e < m && acyclic; ++e) {
      if (!(mask & (1u << e))) continue;
      const int ru = find(edges[e].first);
      const int rv = find(edges[e].second);
      if (ru == rv)
        acyclic = false;
      else
        uf[ru] = rv;
    }
    if (!acyclic) continue;
    std::fill(size_of.begin(), size_of.end(), 0);
    for (int v = 0; v < n; ++v) ++size_of[find(v)];
    long long prod = 1;  // root choices multiply over components
    for (int v = 0; v < n; ++v)
      if (size_of[v] > 0) prod *= size_of[v];
    total += prod;
    for (int i = 0; i < n; ++i) {
      const int ri = find(i);
      const long long share = prod / size_of[ri];  // root pinned inside i's tree
      for (int j = 0; j < n; ++j)
        if (find(j) == ri) pair_acc[static_cast<size_t>(i) * n + j] += share;
    }
  }

  ForestCount fc;
  fc.n = n;
  fc.xi_total = total;
  fc.xi_pair.reserve(pair_acc.size());
  for (long long v : pair_acc) fc.xi_pair.emplace_back(v);
  return fc;
}

CheckResult check_forest_oracle(const Graph& g) {
  CheckResult r;
  r.name = "forest-oracle";
  if (g.edge_count() > 20) return CheckResult::skipped(r.name, "more than 20 edges");
  const ForestCount fc = forest_count_oracle(g);
  const DSMatrix b = compute_b_exact_dense(g, Rational(1));
  const int n = g.vertex_count();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      ++r.comparisons;
      if (b.r(i, j) != Rational(fc.pair(j, i), fc.xi_total))
        r.fail(entry_name(i, j) + " != rooted-forest ratio");
    }
  }
  ++r.comparisons;
  if (bareiss_det(integer_modified_laplacian(g)) != fc.xi_total)
    r.fail("det(L + I) != total rooted-forest count");
  else
    r.notes.push_back("xi == det(L + I) == " + fc.xi_total.str());
  return r;
}

BoundsReport bounds_report(const Graph& g, const DSMatrix& b) {
  BoundsReport rep;
  rep.result.name = "omega-bounds";
  const int n = g.vertex_count();
  rep.n = n;
  const auto cls = classify(g);
  if (!cls.is_connected) {
    rep.result = CheckResult::skipped(rep.result.name, "not connected");
    return rep;
  }
  if (n < 2) {
    rep.result = CheckResult::skipped(rep.result.name, "order < 2");
    return rep;
  }

  if (b.is_exact()) {
    rep.omega_exact = b.r(0, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (b.r(i, j) < rep.omega_exact) {
          rep.omega_exact = b.r(i, j);
          rep.omega_i = i;
          rep.omega_j = j;
        }
    rep.omega = rep.omega_exact.to_double();
    const Rational cap(1, n + 1);
    ++rep.result.comparisons;
    if (rep.omega_exact > cap) rep.result.fail("omega > 1/(n+1)");
    rep.complete_equality = rep.omega_exact == cap;
    if (cls.is_tree && n >= 3) {
      rep.tree_bounds_apply = true;
      const Rational lo = Rational::from_coprime(BigInt(1), fib(2 * n));
      const Rational hi(1, 2 * n + 2);
      rep.result.comparisons += 2;
      if (rep.omega_exact < lo) rep.result.fail("tree omega below 1/f_{2n}");
      if (rep.omega_exact > hi) rep.result.fail("tree omega above 1/(2(n+1))");
      rep.path_equality = rep.omega_exact == lo;
      rep.star_equality = rep.omega_exact == hi;
    }
  } else {
    rep.omega = b.fv(0, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (b.fv(i, j) < rep.omega) {
          rep.omega = b.fv(i, j);
          rep.omega_i = i;
          rep.omega_j = j;
        }
    const double cap = 1.0 / (n + 1);
    ++rep.result.comparisons;
    if (rep.omega > cap + 1e-12) rep.result.fail("omega > 1/(n+1)");
    rep.complete_equality = std::fabs(rep.omega - cap) <= 1e-12;
    if (cls.is_tree && n >= 3) {
      rep.tree_bounds_apply = true;
      const double lo = Rational::from_coprime(BigInt(1), fib(2 * n)).to_double();
      const double hi = 1.0 / (2 * n + 2);
      rep.result.comparisons += 2;
      if (rep.omega < lo - 1e-12) rep.result.fail("tree omega below 1/f_{2n}");
      if (rep.omega > hi + 1e-12) rep.result.fail("tree omega above 1/(2(n+1))");
      rep.path_equality = std::fabs(rep.omega - lo) <= 1e-12;
      rep.star_equality = std::fabs(rep.omega - hi) <= 1e-12;
    }
  }

  rep.algebraic_connectivity = jacobi_eigenvalues(laplacian(g))[n - 2];
  ++rep.result.comparisons;
  if (rep.algebraic_connectivity < 2.0 * (n + 1) * rep.omega - 1e-10)
    rep.result.fail("a(G) < 2(n+1) * omega");

  if (rep.complete_equality) rep.result.notes.push_back("omega attains 1/(n+1)");
  if (rep.path_equality) rep.result.notes.push_back("omega attains the path bound 1/f_{2n}");
  if (rep.star_equality) rep.result.notes.push_back("omega attains the star bound 1/(2(n+1))");
  return rep;
}

CentralityReport centrality_report(const DSMatrix& b) {
  CentralityReport rep;
  const int n = b.size();
  rep.n = n;
  rep.result.name = "centrality";
  rep.remoteness.assign(n, 0.0);

  std::vector<int> diag_argmin;
  if (b.is_exact()) {
    std::vector<Rational> r(n, Rational(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r[i] += b.r(i, i) + b.r(j, j) - Rational(2) * b.r(i, j);
    Rational rmin = r[0];
    Rational dmin = b.r(0, 0);
    for (int i = 1; i < n; ++i) {
      if (r[i] < rmin) rmin = r[i];
      if (b.r(i, i) < dmin) dmin = b.r(i, i);
    }
    for (int i = 0; i < n; ++i) {
      rep.remoteness[i] = r[i].to_double();
      if (r[i] == rmin) rep.least_remote.push_back(i);
      if (b.r(i, i) == dmin) diag_argmin.push_back(i);
    }
    Rational rho_max(0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const Rational rho = b.r(i, i) + b.r(j, j) - Rational(2) * b.r(i, j);
        if (rho > rho_max) {
          rho_max = rho;
          rep.rho_max_i = i;
          rep.rho_max_j = j;
        }
      }
    rep.rho_max = rho_max.to_double();
  } else {
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += b.fv(i, i) + b.fv(j, j) - 2.0 * b.fv(i, j);
      rep.remoteness[i] = s;
    }
    const double rmin = *std::min_element(rep.remoteness.begin(), rep.remoteness.end());
    double dmin = b.fv(0, 0);
    for (int i = 1; i < n; ++i) dmin = std::min(dmin, b.fv(i, i));
    for (int i = 0; i < n; ++i) {
      if (rep.remoteness[i] <= rmin + kStrictMargin) rep.least_remote.push_back(i);
      if (b.fv(i, i) <= dmin + kStrictMargin) diag_argmin.push_back(i);
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const double rho = b.fv(i, i) + b.fv(j, j) - 2.0 * b.fv(i, j);
        if (rho > rep.rho_max) {
          rep.rho_max = rho;
          rep.rho_max_i = i;
          rep.rho_max_j = j;
        }
      }
  }

  rep.result.comparisons = n;
  rep.argmin_matches_diag = rep.least_remote == diag_argmin;
  if (!rep.argmin_matches_diag)
    rep.result.fail("least remote set differs from smallest-diagonal set");
  return rep;
}

CheckResult check_rho_metric(const DSMatrix& b) {
  CheckResult r;
  r.name = "rho-metric";
  const int n = b.size();
  if (b.is_exact()) {
    auto rho = [&](int i, int j) { return b.r(i, i) + b.r(j, j) - Rational(2) * b.r(i, j); };
    for (int i = 0; i < n; ++i) {
      if (!rho(i, i).is_zero()) r.fail("rho(i,i) != 0 at " + std::to_string(i));
      for (int j = i + 1; j < n; ++j) {
        ++r.comparisons;
        if (rho(i, j).is_negative()) r.fail("rho negative at pair " + std::to_string(i) + "," +
                                            std::to_string(j));
      }
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        for (int k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          ++r.comparisons;
          if (rho(i, k) > rho(i, j) + rho(j, k))
            r.fail("triangle inequality fails at (" + std::to_string(i) + "," +
                   std::to_string(j) + "," + std::to_string(k) + ")");
        }
      }
  } else {
    auto rho = [&](int i, int j) { return b.fv(i, i) + b.fv(j, j) - 2.0 * b.fv(i, j); };
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        ++r.comparisons;
        if (rho(i, j) < -kStrictMargin)
          r.fail("rho negative at pair " + std::to_string(i) + "," + std::to_string(j));
      }
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        for (int k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          ++r.comparisons;
          if (rho(i, k) > rho(i, j) + rho(j, k) + kStrictMargin)
            r.fail("triangle inequality fails at (" + std::to_string(i) + "," +
                   std::to_string(j) + "," + std::to_string(k) + ")");
        }
      }
  }
  return r;
}

CheckResult check_spectrum(const Graph& g, double h) {
  CheckResult r;
  r.name = "spectrum";
  const SpectrumReport rep = spectrum_report(g, h);
  const int n = g.vertex_count();
  for (int i = 0; i < n; ++i) {
    ++r.comparisons;
    const double expected = 1.0 / (1.0 + h * rep.laplacian_eigs[i]);
    if (std::fabs(rep.b_eigs[i] - expected) > 1e-8)
      r.fail("eigenvalue " + std::to_string(i) + " off by " +
             fmt(rep.b_eigs[i] - expected));
  }
  return r;
}

}  // namespace dslap
