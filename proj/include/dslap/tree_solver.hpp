#pragma once

#include <cstdint>
#include <vector>

#include "dslap/ds_matrix.hpp"
#include "dslap/graph.hpp"
#include "dslap/rational.hpp"

namespace dslap {

/// Orientation of a tree away from a chosen root. `order` is the BFS order
/// from the root, so reversing it visits every vertex after all of its
/// children (the order multiplier computation needs).
struct RootedTree {
  int root = 0;
  std::vector<int> parent;              // -1 at the root
  std::vector<std::vector<int>> children;
  std::vector<int> order;               // BFS from root
};

/// Directs each edge away from vertex root. Throws on non-tree input.
RootedTree orient(const Graph& t, int root);

/// Edge multipliers of the rooted tree, indexed by the head vertex of each
/// directed edge (every non-root vertex has exactly one ingoing edge; the
/// root slot is unused). A pendant head gives (1+h)/h; an interior head k
/// gives 1/h + d_k - sum over child edges (k,j) of 1/m_kj, evaluated
/// leaves-first. Carries exact and/or float values depending on mode.
struct MultiplierMap {
  Mode mode = Mode::Float;
  int root = 0;
  double h = 1.0;
  Rational h_exact = Rational(1);
  std::vector<int> parent;  // tail of each directed edge, -1 at the root
  std::vector<double> mf;
  std::vector<Rational> mx;
};

MultiplierMap multipliers(const RootedTree& r, const Graph& t, const Rational& h);
MultiplierMap multipliers(const RootedTree& r, const Graph& t, double h);

/// Column i of (I + h*L)^{-1} for a tree, exact. Root value first, then
/// every other entry by dividing its parent's value by the edge multiplier.
std::vector<Rational> solve_column_exact(const Graph& t, int i, const Rational& h);

/// Float variant; op_count (when given) accumulates the number of
/// arithmetic operations, which grows linearly with the tree order.
std::vector<double> solve_column_float(const Graph& t, int i, double h,
                                       uint64_t* op_count = nullptr);

/// Full inverse, one column per root.
DSMatrix compute_b_tree(const Graph& t, const Rational& h);
DSMatrix compute_b_tree_float(const Graph& t, double h);

}  // namespace dslap
