#ifndef HAMEX_RANDOM_GRAPHS_HPP
#define HAMEX_RANDOM_GRAPHS_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hamex/graph.hpp"

namespace hamex {

// G(n,p): every pair an edge independently with probability p.
// Deterministic per (n, p, seed). Uses geometric skipping when p < 0.1,
// a Bernoulli sweep otherwise; the output distribution is identical.
Graph sample_gnp(int n, double p, std::uint64_t seed);

// A uniformly random ordering of all C(n,2) vertex pairs; adding the pairs
// one at a time is the random graph process.
struct EdgeOrdering {
  int n = 0;
  std::vector<Edge> order;  // each canonical pair exactly once
};

EdgeOrdering sample_process(int n, std::uint64_t seed);

// Graph on the first i pairs of the ordering. prefix_graph(o, 0) is
// edgeless, prefix_graph(o, C(n,2)) is K_n.
Graph prefix_graph(const EdgeOrdering& ord, long long i);

enum class GraphProperty { D1, D2, CONN, PM, HAM };
std::string to_string(GraphProperty p);

struct HittingTimes {
  std::map<GraphProperty, long long> tau;
};

// First index i with decide(prefix_graph(ord, i)) true, found by bisection
// (decide must be an exact decision procedure for a monotone increasing
// property). Returns C(n,2)+1 if even K_n fails. All predicate evaluations
// are logged and checked for a monotonicity inversion (true at i, false at
// j > i); an inversion raises invariant_error.
long long hitting_time(const EdgeOrdering& ord, GraphProperty prop,
                       const GraphPredicate& decide);

// --- process replay format ---------------------------------------------
// line 1: n; then one `u v` line per position.
std::string write_ordering(const EdgeOrdering& ord);
EdgeOrdering read_ordering(std::istream& in);

}  // namespace hamex

#endif
