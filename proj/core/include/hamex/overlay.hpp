#ifndef HAMEX_OVERLAY_HPP
#define HAMEX_OVERLAY_HPP

#include <algorithm>
#include <vector>

#include "hamex/errors.hpp"
#include "hamex/graph.hpp"

namespace hamex {

// A base graph plus an overlay of added edges (boosters / staples). The base
// Graph stays immutable; the overlay keeps absorption traces auditable.
class HostGraph {
 public:
  explicit HostGraph(const Graph& base) : n_(base.vertex_count()) {
    adj_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) adj_[v] = base.neighbors(v);
  }

  int vertex_count() const { return n_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }

  bool has_edge(Vertex u, Vertex v) const {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    Vertex t = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), t);
  }

  void add_edge(Vertex u, Vertex v) {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
      throw input_error("HostGraph::add_edge: bad endpoints");
    if (has_edge(u, v))
      throw input_error("HostGraph::add_edge: edge already present");
    adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
    overlay_.push_back(make_edge(u, v));
  }

  const std::vector<Edge>& overlay_edges() const { return overlay_; }

  long long edge_count() const {
    long long total = 0;
    for (const auto& a : adj_) total += static_cast<long long>(a.size());
    return total / 2;
  }

  bool connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : adj_[x])
        if (!seen[y]) {
          seen[y] = 1;
          ++reached;
          stack.push_back(y);
        }
    }
    return reached == n_;
  }

 private:
  int n_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> overlay_;
};

}  // namespace hamex

#endif
