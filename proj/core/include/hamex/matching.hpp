#ifndef HAMEX_MATCHING_HPP
#define HAMEX_MATCHING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamex/graph.hpp"
#include "hamex/overlay.hpp"
#include "hamex/regime.hpp"
#include "hamex/skeleton.hpp"

namespace hamex {

// Shared by the booster and staple absorption loops.
struct TraceStep {
  int step = 0;
  Edge edge{0, 0};
};

enum class SolveMode { pipeline, exact, auto_fallback };
std::string to_string(SolveMode m);

struct Matching {
  std::vector<Edge> edges;  // pairwise disjoint
  VertexSet exposed;        // vertices touched by no matching edge
  int size() const { return static_cast<int>(edges.size()); }
};

// Exact maximum matching in a general graph (Edmonds blossom, O(V^3)).
Matching max_matching(const Graph& g);
Matching max_matching(const HostGraph& host);

// A staple for the view: a pair in E(g) \ E(host) whose addition increases
// nu(host). Candidates with both endpoints exposed by a maximum matching of
// the host are tried first (any such pair augments immediately); remaining
// candidates are tested by recomputing nu. Lexicographically first hit wins.
std::optional<Edge> find_staple(const HostGraph& host, const Graph& g);

enum class PMKind { perfect, none, unknown };
std::string to_string(PMKind k);

struct PMCertificate {
  PMKind kind = PMKind::unknown;
  Matching matching;
  std::vector<TraceStep> trace;  // staples added, with step indices
  std::string reason;            // provenance for none / diagnostics
  Regime regime = Regime::very_dense;
  std::uint64_t seed = 0;
  std::vector<std::string> fallbacks_used;
};

// Staple absorption: grow a maximum matching of skeleton + overlay by
// absorbing staples from E(g). Each absorbed staple raises nu by one, so at
// most n/2 steps occur; `budget` caps the additions.
PMCertificate absorb_staples(const Skeleton& skeleton, const Graph& g,
                             int budget);

// Full pipeline: reject delta(G)=0 and odd n as none; sparse/dense regimes
// run skeleton + absorb_staples (with re-draws); very dense runs the exact
// blossom directly. auto_fallback resolves pipeline unknowns with the exact
// blossom (polynomial), so its verdicts are always definite.
PMCertificate solve_pm(const Graph& g, const RegimeParams& params,
                       SolveMode mode = SolveMode::auto_fallback,
                       std::uint64_t seed = 0);

// True iff m is a perfect matching of g (edges of g, pairwise disjoint,
// covering every vertex).
bool verify_perfect_matching(const Graph& g, const Matching& m);

std::string to_json(const PMCertificate& cert);

}  // namespace hamex

#endif
