#ifndef HAMEX_GRAPH_HPP
#define HAMEX_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hamex {

using Vertex = int;
// Canonical edge: first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex u, Vertex v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

// A sorted set of distinct vertex ids in [0, n). n is checked by the
// operations that receive the set together with a graph.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);
  explicit VertexSet(std::vector<Vertex> ids);  // sorts, rejects duplicates

  static VertexSet full(int n);

  const std::vector<Vertex>& ids() const { return ids_; }
  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  bool contains(Vertex v) const;

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<Vertex> ids_;
};

// Simple undirected graph on dense ids 0..n-1. Immutable after
// construction; adjacency lists are sorted; the edge list is canonical
// ascending. Edge additions downstream (boosters, staples) are layered on
// top of a Graph rather than mutating it.
class Graph {
 public:
  Graph() = default;

  // Validates and canonicalizes. Throws input_error naming the offending
  // pair on out-of-range endpoints, self-loops, or duplicates.
  static Graph build(int n, std::span<const Edge> edges);
  static Graph build(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  long long edge_count() const { return static_cast<long long>(edges_.size()); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;
  const std::vector<Edge>& edges() const { return edges_; }

  // Graph on n-1 vertices with v removed; ids above v shift down by one.
  Graph without_vertex(Vertex v) const;

 private:
  int n_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
};

struct DegreeProfile {
  int min = 0;  // delta(G)
  int max = 0;  // Delta(G)
  std::vector<int> degrees;
};

// N_G(U): vertices outside U with a neighbour in U.
VertexSet external_neighborhood(const Graph& g, const VertexSet& u);

// e(U): edges spanned by U.
long long edge_count_within(const Graph& g, const VertexSet& u);

// e(U,W) for disjoint U, W. Throws input_error if they overlap.
long long edge_count_between(const Graph& g, const VertexSet& u,
                             const VertexSet& w);

DegreeProfile degree_profile(const Graph& g);

// Shortest-path length; nullopt when unreachable. dist(v,v) = 0.
std::optional<int> bfs_distance(const Graph& g, Vertex u, Vertex v);

bool is_connected(const Graph& g);

// Number of vertex pairs C(n,2).
inline long long pair_count(int n) {
  return static_cast<long long>(n) * (n - 1) / 2;
}

using GraphPredicate = std::function<bool(const Graph&)>;

// --- Edge-list text format -------------------------------------------------
//
//   # comment lines allowed before the header
//   n m
//   u v        (m lines, 0 <= u < v < n, ascending lexicographic, LF)

std::string write_edge_list(const Graph& g);
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace hamex

#endif
