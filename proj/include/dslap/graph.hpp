#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dslap/matrix.hpp"

namespace dslap {

/// Immutable simple undirected graph with vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  /// Validates and builds: rejects self-loops, duplicate edges and
  /// out-of-range endpoints. Edges are stored as (u, v) with u < v.
  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(v); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;

  std::vector<int> degree_sequence() const;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> adjacency_;  // sorted neighbor lists
  std::vector<std::pair<int, int>> edges_;   // u < v, lexicographic
};

enum class ParseErrorKind { MalformedLine, IndexOutOfRange, DuplicateEdge, SelfLoop };

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ParseErrorKind kind() const { return kind_; }

 private:
  ParseErrorKind kind_;
};

/// Reads the edge-list format: a header line "n m", then m lines "u v".
/// '#' starts a comment; blank lines are skipped.
Graph parse_edge_list(const std::string& text);

/// Serializes a graph back to the same edge-list format.
std::string write_edge_list(const Graph& g);

// Generators. Labeling conventions:
//   path:     0 - 1 - ... - n-1 in order
//   star:     center is the last index n-1
//   broom:    path 0..k-1, then ell pendants all adjacent to k-1
//   starlike: center 0, arm centers 1..k-1, then pendants grouped by arm
Graph path_graph(int n);
Graph star_graph(int n);
Graph complete_graph(int n);
Graph broom_graph(int k, int ell);
Graph starlike_graph(const std::vector<int>& arms);

/// Uniform labeled tree from a seeded Prufer sequence; reproducible.
Graph random_tree(int n, uint64_t seed);

/// Complete binary tree of the given depth plus one extra pendant on the
/// root, so every non-pendant vertex has degree exactly 3.
Graph t3_tree(int depth);

/// Grows a degree-3 tree from a single edge by repeatedly expanding a
/// random pendant with two children. n = 2 + 2 * growth_steps.
Graph random_t3_tree(int growth_steps, uint64_t seed);

/// New graph with one extra vertex (index n) adjacent to every vertex of g.
Graph cone(const Graph& g);

struct PathSpec { int n; };
struct StarSpec { int n; };
struct CompleteSpec { int n; };
struct BroomSpec { int k; int ell; };
struct StarlikeSpec { std::vector<int> arms; };
struct ConeSpec { Graph base; };
struct RandomTreeSpec { int n; uint64_t seed; };
struct T3TreeSpec { int depth; };

using GraphFamily = std::variant<PathSpec, StarSpec, CompleteSpec, BroomSpec,
                                 StarlikeSpec, ConeSpec, RandomTreeSpec, T3TreeSpec>;

Graph generate(const GraphFamily& family);

/// L = D - A.
SymMatrix laplacian(const Graph& g);

/// I + h*L, symmetric positive definite with unit row sums. Requires h > 0.
SymMatrix modified_laplacian(const Graph& g, double h);

constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Hop counts from source; unreachable vertices get kUnreachable.
std::vector<int> bfs_distances(const Graph& g, int source);

struct GraphClass {
  bool is_connected = false;
  bool is_tree = false;
  std::vector<int> pendant_vertices;  // degree-1 vertices, ascending
  std::vector<int> degree_sequence;
};

GraphClass classify(const Graph& g);

/// True when every vertex has degree 1 or 3 (the degree-3 tree class).
bool is_t3_tree(const Graph& g);

/// True for a connected tree with maximum degree <= 2.
bool is_path(const Graph& g);

/// Vertex order along a path graph (either orientation); throws if not a path.
std::vector<int> path_order(const Graph& g);

}  // namespace dslap
