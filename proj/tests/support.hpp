#pragma once

#include <random>
#include <set>
#include <utility>
#include <vector>

#include "dslap/graph.hpp"

namespace dslap::testsupport {

/// Random connected graph: a random spanning tree plus extra random edges.
inline Graph random_connected_graph(int n, int extra_edges, uint64_t seed) {
  Graph tree = random_tree(n, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::set<std::pair<int, int>> have(tree.edges().begin(), tree.edges().end());
  const long max_edges = static_cast<long>(n) * (n - 1) / 2;
  for (int added = 0; added < extra_edges && static_cast<long>(have.size()) < max_edges;) {
    int u = static_cast<int>(rng() % static_cast<uint64_t>(n));
    int v = static_cast<int>(rng() % static_cast<uint64_t>(n));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (have.insert({u, v}).second) ++added;
  }
  return Graph::from_edges(n, {have.begin(), have.end()});
}

/// The six-vertex example tree used across the worked multiplier examples:
/// internal 0-based edges for paper labels {6-5, 6-4, 5-2, 5-3, 4-1}.
inline Graph fig_tree6() {
  return Graph::from_edges(6, {{5, 4}, {5, 3}, {4, 1}, {4, 2}, {3, 0}});
}

}  // namespace dslap::testsupport
