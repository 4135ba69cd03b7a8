#include "dslap/tree_solver.hpp"

#include <stdexcept>

namespace dslap {

RootedTree orient(const Graph& t, int root) {
  const int n = t.vertex_count();
  if (root < 0 || root >= n) throw std::out_of_range("orient: bad root");
  if (t.edge_count() != n - 1) throw std::invalid_argument("orient: not a tree");
  RootedTree r;
  r.root = root;
  r.parent.assign(n, -1);
  r.children.assign(n, {});
  r.order.reserve(n);
  r.order.push_back(root);
  std::vector<bool> seen(n, false);
  seen[root] = true;
  for (size_t head = 0; head < r.order.size(); ++head) {
    const int v = r.order[head];
    for (int w : t.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = true;
      r.parent[w] = v;
      r.children[v].push_back(w);
      r.order.push_back(w);
    }
  }
  if (static_cast<int>(r.order.size()) != n)
    throw std::invalid_argument("orient: not a tree (disconnected)");
  return r;
}

MultiplierMap multipliers(const RootedTree& r, const Graph& t, const Rational& h) {
  if (!h.is_positive()) throw std::invalid_argument("multipliers: h must be > 0");
  const int n = t.vertex_count();
  MultiplierMap m;
  m.mode = Mode::Exact;
  m.root = r.root;
  m.h_exact = h;
  m.h = h.to_double();
  m.parent = r.parent;
  m.mx.assign(n, Rational(0));
  const Rational inv_h = h.inverse();
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    const int k = *it;
    if (k == r.root) continue;
    Rational v = inv_h + Rational(t.degree(k));
    for (int j : r.children[k]) v -= m.mx[j].inverse();
    m.mx[k] = v;
  }
  return m;
}

MultiplierMap multipliers(const RootedTree& r, const Graph& t, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("multipliers: h must be > 0");
  const int n = t.vertex_count();
  MultiplierMap m;
  m.root = r.root;
  m.h = h;
  m.parent = r.parent;
  m.mf.assign(n, 0.0);
  const double inv_h = 1.0 / h;
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    const int k = *it;
    if (k == r.root) continue;
    double v = inv_h + t.degree(k);
    for (int j : r.children[k]) v -= 1.0 / m.mf[j];
    m.mf[k] = v;
  }
  return m;
}

std::vector<Rational> solve_column_exact(const Graph& t, int i, const Rational& h) {
  const RootedTree r = orient(t, i);
  const MultiplierMap m = multipliers(r, t, h);
  const int n = t.vertex_count();
  // Root equation: (1 + h*d_i) x_i - h * sum of children x_j = 1.
  Rational denom = Rational(1) + h * Rational(t.degree(i));
  for (int j : r.children[i]) denom -= h * m.mx[j].inverse();
  std::vector<Rational> x(n, Rational(0));
  x[i] = denom.inverse();
  for (int v : r.order) {
    if (v == i) continue;
    x[v] = x[r.parent[v]] / m.mx[v];
  }
  return x;
}

std::vector<double> solve_column_float(const Graph& t, int i, double h,
                                       uint64_t* op_count) {
  const RootedTree r = orient(t, i);
  const int n = t.vertex_count();
  uint64_t ops = 0;
  std::vector<double> m(n, 0.0);
  const double inv_h = 1.0 / h;
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    const int k = *it;
    if (k == r.root) continue;
    double v = inv_h + t.degree(k);
    ++ops;
    for (int j : r.children[k]) {
      v -= 1.0 / m[j];
      ops += 2;
    }
    m[k] = v;
  }
  double denom = 1.0 + h * t.degree(i);
  ops += 2;
  for (int j : r.children[i]) {
    denom -= h / m[j];
    ops += 2;
  }
  std::vector<double> x(n, 0.0);
  x[i] = 1.0 / denom;
  ++ops;
  for (int v : r.order) {
    if (v == i) continue;
    x[v] = x[r.parent[v]] / m[v];
    ++ops;
  }
  if (op_count) *op_count += ops;
  return x;
}

DSMatrix compute_b_tree(const Graph& t, const Rational& h) {
  const int n = t.vertex_count();
  DSMatrix b = DSMatrix::exact_matrix(n, h, Engine::Tree);
  for (int i = 0; i < n; ++i) {
    auto col = solve_column_exact(t, i, h);
    for (int j = 0; j < n; ++j) b.r(j, i) = std::move(col[j]);
  }
  return b;
}

DSMatrix compute_b_tree_float(const Graph& t, double h) {
  const int n = t.vertex_count();
  DSMatrix b = DSMatrix::float_matrix(n, h, Engine::Tree);
  for (int i = 0; i < n; ++i) {
    const auto col = solve_column_float(t, i, h);
    for (int j = 0; j < n; ++j) b.fv(j, i) = col[j];
  }
  return b;
}

}  // namespace dslap
