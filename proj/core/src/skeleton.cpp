#include "hamex/skeleton.hpp"

#include <algorithm>
#include <set>

#include "hamex/errors.hpp"
#include "hamex/rng.hpp"

namespace hamex {

Skeleton build_skeleton(const Graph& g, const SmallSet& small, int out_degree,
                        std::uint64_t seed) {
  if (out_degree < 2) throw input_error("build_skeleton: out_degree < 2");
  const int n = g.vertex_count();
  Skeleton sk;
  sk.out_degree = out_degree;
  sk.out_choice.assign(n, {});
  sk.small_members.assign(small.members.begin(), small.members.end());

  Rng rng(seed);
  std::set<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    const auto& nbrs = g.neighbors(v);
    if (small.members.contains(v) ||
        static_cast<int>(nbrs.size()) <= out_degree) {
      sk.out_choice[v] = nbrs;
      if (!small.members.contains(v) &&
          static_cast<int>(nbrs.size()) < out_degree)
        sk.undersized.push_back(v);
    } else {
      std::vector<Vertex> pool = nbrs;
      for (int i = 0; i < out_degree; ++i) {
        size_t j = i + rng.below(pool.size() - i);
        std::swap(pool[i], pool[j]);
      }
      pool.resize(out_degree);
      std::sort(pool.begin(), pool.end());
      sk.out_choice[v] = std::move(pool);
    }
    for (Vertex w : sk.out_choice[v]) edges.insert(make_edge(v, w));
  }
  sk.graph = Graph::build(n, std::vector<Edge>(edges.begin(), edges.end()));
  return sk;
}

Skeleton build_skeleton(const Graph& g, const RegimeParams& params,
                        std::uint64_t seed) {
  SmallSet small = small_vertices(g, params.skeleton_small_threshold);
  return build_skeleton(g, small, params.skeleton_out_degree, seed);
}

}  // namespace hamex
