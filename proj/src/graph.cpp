#include "dslap/graph.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <sstream>

namespace dslap {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  Graph g;
  g.n_ = n;
  g.adjacency_.assign(n, {});
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::out_of_range("Graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("Graph: self-loop");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw std::invalid_argument("Graph: duplicate edge");
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  g.edges_.assign(seen.begin(), seen.end());
  for (auto& lst : g.adjacency_) std::sort(lst.begin(), lst.end());
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  const auto& lst = adjacency_[u];
  return std::binary_search(lst.begin(), lst.end(), v);
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(n_);
  for (int i = 0; i < n_; ++i) d[i] = degree(i);
  return d;
}

namespace {

// Strips a '#' comment and returns the remaining tokens.
std::vector<std::string> tokens_of_line(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream in(body);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

int parse_int(const std::string& tok, int line_no) {
  try {
    size_t pos = 0;
    const int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(ParseErrorKind::MalformedLine,
                     "line " + std::to_string(line_no) + ": expected integer, got '" + tok + "'");
  }
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = tokens_of_line(line);
    if (toks.empty()) continue;
    if (n < 0) {
      if (toks.size() != 2)
        throw ParseError(ParseErrorKind::MalformedLine,
                         "line " + std::to_string(line_no) + ": header must be 'n m'");
      n = parse_int(toks[0], line_no);
      m = parse_int(toks[1], line_no);
      if (n < 0 || m < 0)
        throw ParseError(ParseErrorKind::MalformedLine,
                         "line " + std::to_string(line_no) + ": negative header values");
      continue;
    }
    if (toks.size() != 2)
      throw ParseError(ParseErrorKind::MalformedLine,
                       "line " + std::to_string(line_no) + ": edge line must be 'u v'");
    int u = parse_int(toks[0], line_no);
    int v = parse_int(toks[1], line_no);
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(ParseErrorKind::IndexOutOfRange,
                       "line " + std::to_string(line_no) + ": vertex index out of range");
    if (u == v)
      throw ParseError(ParseErrorKind::SelfLoop,
                       "line " + std::to_string(line_no) + ": self-loop");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw ParseError(ParseErrorKind::DuplicateEdge,
                       "line " + std::to_string(line_no) + ": duplicate edge");
    edges.push_back({u, v});
  }
  if (n < 0)
    throw ParseError(ParseErrorKind::MalformedLine, "missing 'n m' header");
  if (static_cast<int>(edges.size()) != m)
    throw ParseError(ParseErrorKind::MalformedLine,
                     "edge count mismatch: header says " + std::to_string(m) + ", found " +
                         std::to_string(edges.size()));
  return Graph::from_edges(n, std::move(edges));
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path_graph: n must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph::from_edges(n, std::move(e));
}

Graph star_graph(int n) {
  if (n < 1) throw std::invalid_argument("star_graph: n must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, n - 1});
  return Graph::from_edges(n, std::move(e));
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph: n must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph::from_edges(n, std::move(e));
}

Graph broom_graph(int k, int ell) {
  if (k < 1 || ell < 1) throw std::invalid_argument("broom_graph: k, ell must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < k; ++i) e.push_back({i, i + 1});
  for (int q = 0; q < ell; ++q) e.push_back({k - 1, k + q});
  return Graph::from_edges(k + ell, std::move(e));
}

Graph starlike_graph(const std::vector<int>& arms) {
  if (arms.empty()) throw std::invalid_argument("starlike_graph: need at least one arm");
  for (int a : arms)
    if (a < 1) throw std::invalid_argument("starlike_graph: arm sizes must be >= 1");
  const int k = static_cast<int>(arms.size()) + 1;  // center plus arm centers
  int n = k;
  for (int a : arms) n += a;
  std::vector<std::pair<int, int>> e;
  int next_pendant = k;
  for (int j = 1; j < k; ++j) {
    e.push_back({0, j});
    for (int t = 0; t < arms[j - 1]; ++t) e.push_back({j, next_pendant++});
  }
  return Graph::from_edges(n, std::move(e));
}

Graph random_tree(int n, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_tree: n must be >= 1");
  if (n == 1) return Graph::from_edges(1, {});
  if (n == 2) return Graph::from_edges(2, {{0, 1}});
  std::mt19937_64 rng(seed);
  std::vector<int> prufer(n - 2);
  for (auto& p : prufer) p = static_cast<int>(rng() % static_cast<uint64_t>(n));

  // Standard Prufer decoding.
  std::vector<int> deg(n, 1);
  for (int p : prufer) ++deg[p];
  std::vector<std::pair<int, int>> e;
  std::set<int> leaves;
  for (int i = 0; i < n; ++i)
    if (deg[i] == 1) leaves.insert(i);
  for (int p : prufer) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    e.push_back({leaf, p});
    if (--deg[p] == 1) leaves.insert(p);
  }
  const int a = *leaves.begin();
  const int b = *std::next(leaves.begin());
  e.push_back({a, b});
  return Graph::from_edges(n, std::move(e));
}

Graph t3_tree(int depth) {
  if (depth < 0) throw std::invalid_argument("t3_tree: depth must be >= 0");
  // Heap-indexed complete binary tree: vertex v has children 2v+1, 2v+2.
  const int internal = (1 << (depth + 1)) - 1;
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < internal; ++v) {
    for (int c : {2 * v + 1, 2 * v + 2})
      if (c < internal) e.push_back({v, c});
  }
  e.push_back({0, internal});  // extra pendant lifts the root to degree 3
  return Graph::from_edges(internal + 1, std::move(e));
}

Graph random_t3_tree(int growth_steps, uint64_t seed) {
  if (growth_steps < 0) throw std::invalid_argument("random_t3_tree: steps must be >= 0");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> e = {{0, 1}};
  std::vector<int> deg = {1, 1};
  std::vector<int> pendants = {0, 1};
  int n = 2;
  for (int s = 0; s < growth_steps; ++s) {
    const size_t pick = rng() % pendants.size();
    const int v = pendants[pick];
    pendants.erase(pendants.begin() + static_cast<long>(pick));
    e.push_back({v, n});
    e.push_back({v, n + 1});
    deg[v] += 2;
    deg.push_back(1);
    deg.push_back(1);
    pendants.push_back(n);
    pendants.push_back(n + 1);
    n += 2;
  }
  return Graph::from_edges(n, std::move(e));
}

Graph cone(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> e = g.edges();
  for (int i = 0; i < n; ++i) e.push_back({i, n});
  return Graph::from_edges(n + 1, std::move(e));
}

Graph generate(const GraphFamily& family) {
  return std::visit(
      [](const auto& spec) -> Graph {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, PathSpec>) return path_graph(spec.n);
        else if constexpr (std::is_same_v<T, StarSpec>) return star_graph(spec.n);
        else if constexpr (std::is_same_v<T, CompleteSpec>) return complete_graph(spec.n);
        else if constexpr (std::is_same_v<T, BroomSpec>) return broom_graph(spec.k, spec.ell);
        else if constexpr (std::is_same_v<T, StarlikeSpec>) return starlike_graph(spec.arms);
        else if constexpr (std::is_same_v<T, ConeSpec>) return cone(spec.base);
        else if constexpr (std::is_same_v<T, RandomTreeSpec>) return random_tree(spec.n, spec.seed);
        else return t3_tree(spec.depth);
      },
      family);
}

SymMatrix laplacian(const Graph& g) {
  const int n = g.vertex_count();
  SymMatrix L(n);
  for (int i = 0; i < n; ++i) L.set(i, i, static_cast<double>(g.degree(i)));
  for (const auto& [u, v] : g.edges()) L.set(u, v, -1.0);
  return L;
}

SymMatrix modified_laplacian(const Graph& g, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("modified_laplacian: h must be > 0");
  const int n = g.vertex_count();
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1.0 + h * g.degree(i));
  for (const auto& [u, v] : g.edges()) m.set(u, v, -h);
  return m;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  const int n = g.vertex_count();
  if (source < 0 || source >= n) throw std::out_of_range("bfs_distances: bad source");
  std::vector<int> dist(n, kUnreachable);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

GraphClass classify(const Graph& g) {
  GraphClass c;
  const int n = g.vertex_count();
  c.degree_sequence = g.degree_sequence();
  for (int i = 0; i < n; ++i)
    if (g.degree(i) == 1) c.pendant_vertices.push_back(i);
  if (n == 0) {
    c.is_connected = true;
    c.is_tree = false;
    return c;
  }
  const auto dist = bfs_distances(g, 0);
  c.is_connected = std::none_of(dist.begin(), dist.end(),
                                [](int d) { return d == kUnreachable; });
  c.is_tree = c.is_connected && g.edge_count() == n - 1;
  return c;
}

bool is_t3_tree(const Graph& g) {
  if (!classify(g).is_tree) return false;
  for (int i = 0; i < g.vertex_count(); ++i) {
    const int d = g.degree(i);
    if (d != 1 && d != 3) return false;
  }
  return true;
}

bool is_path(const Graph& g) {
  const auto c = classify(g);
  if (!c.is_tree) return false;
  for (int d : c.degree_sequence)
    if (d > 2) return false;
  return true;
}

std::vector<int> path_order(const Graph& g) {
  if (!is_path(g)) throw std::invalid_argument("path_order: not a path");
  const int n = g.vertex_count();
  if (n == 1) return {0};
  int end = 0;
  while (g.degree(end) != 1) ++end;
  std::vector<int> order{end};
  int prev = -1, cur = end;
  while (static_cast<int>(order.size()) < n) {
    for (int w : g.neighbors(cur)) {
      if (w != prev) {
        order.push_back(w);
        prev = cur;
        cur = w;
        break;
      }
    }
  }
  return order;
}

}  // namespace dslap
