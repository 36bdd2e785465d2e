#ifndef HAMEX_SKELETON_HPP
#define HAMEX_SKELETON_HPP

#include <cstdint>
#include <vector>

#include "hamex/graph.hpp"
#include "hamex/properties.hpp"
#include "hamex/regime.hpp"

namespace hamex {

// Sparse random subgraph: SMALL vertices keep their full star, every other
// vertex keeps a uniform random out-set of fixed size. E(skeleton) is the
// union of the per-vertex choices.
struct Skeleton {
  Graph graph;                                 // the skeleton itself
  std::vector<std::vector<Vertex>> out_choice; // E_v as neighbour ids
  std::vector<Vertex> small_members;           // vertices keeping full stars
  std::vector<Vertex> undersized;              // v not SMALL with d(v) < out_degree
  int out_degree = 0;
};

// Deterministic per seed. out_degree >= 2. Vertices outside `small` with
// fewer than out_degree neighbours keep everything and are flagged.
Skeleton build_skeleton(const Graph& g, const SmallSet& small, int out_degree,
                        std::uint64_t seed);

// Convenience: SMALL from params.skeleton_small_threshold, out-degree from
// params.skeleton_out_degree.
Skeleton build_skeleton(const Graph& g, const RegimeParams& params,
                        std::uint64_t seed);

}  // namespace hamex

#endif
