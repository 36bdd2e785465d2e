#ifndef HAMEX_POSA_HPP
#define HAMEX_POSA_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hamex/graph.hpp"
#include "hamex/matching.hpp"
#include "hamex/oracles.hpp"
#include "hamex/overlay.hpp"
#include "hamex/regime.hpp"
#include "hamex/skeleton.hpp"

namespace hamex {

// A simple path in a host graph, with the inverse index kept alongside.
struct PathState {
  std::vector<Vertex> vertices;
  std::vector<int> position;  // vertex -> index on the path, -1 off-path

  static PathState of(int n, std::vector<Vertex> vs);
  int length() const { return static_cast<int>(vertices.size()); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  bool valid_in(const HostGraph& host) const;
};

// Endpoints attainable from a path by elementary rotations with one end
// fixed, each with a reconstructible witness path (fixed end first). The
// original free end is always a member.
struct RotationClosure {
  Vertex fixed_end = -1;
  std::vector<Vertex> ends;                      // sorted
  std::map<Vertex, std::vector<Vertex>> paths;   // end -> witness path
  long long rotation_events = 0;
  const std::vector<Vertex>& path_for(Vertex end) const;
};

// Breadth-first closure under rotations; max_events < 0 means n^2.
RotationClosure rotation_closure(const HostGraph& host, const PathState& path,
                                 Vertex fixed_end, long long max_events = -1);

struct TwoSidedClosure {
  std::vector<Vertex> path;    // the maximal path the closures refer to
  RotationClosure from_front;  // fixed = path.front()
  RotationClosure from_back;   // fixed = path.back()
};

enum class StepKind { longer_path, hamilton_cycle, cycle_break_restart, stuck };

struct StepResult {
  StepKind kind = StepKind::stuck;
  std::vector<Vertex> path;   // longer_path / cycle_break_restart
  std::vector<Vertex> cycle;  // hamilton_cycle
  TwoSidedClosure closure;    // stuck
  std::string diagnostic;
};

// One engine step: extend some rotated endpoint off the path, close to a
// Hamilton cycle, convert a non-spanning cycle into a longer path through an
// external neighbour (cycle-break restart), or report stuck with the
// two-sided closure for booster harvesting.
StepResult extend_or_close(const HostGraph& host, const PathState& path);

// Non-edges (x,y) of the host such that some double-rotation witness path
// has endpoints x and y; adding any returned pair closes that path into a
// cycle, which yields a Hamilton cycle or (host connected) a strictly longer
// path. Sorted ascending, deduplicated.
std::vector<Edge> booster_candidates(const HostGraph& host,
                                     const TwoSidedClosure& closure);

enum class HamKind { cycle, path, none, unknown };
std::string to_string(HamKind k);

struct HamCertificate {
  HamKind kind = HamKind::unknown;
  std::vector<Vertex> witness;   // cycle (closing edge implied) or path
  std::vector<TraceStep> trace;  // boosters added, with step indices
  std::string reason;
  Regime regime = Regime::sparse;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> fallbacks_used;
};

// O(n) certificate checks.
bool verify_cycle(const Graph& g, const std::vector<Vertex>& cycle);
bool verify_path(const Graph& g, const std::vector<Vertex>& path);

// Booster absorption: grow a maximal path in skeleton + overlay; when stuck,
// absorb the lexicographically smallest booster candidate that lies in
// E(g) \ E(host) and continue. Budget caps booster additions (default
// recommendation 2n). Never returns none: failure is an honest unknown.
HamCertificate absorb_boosters(const Skeleton& skeleton, const Graph& g,
                               int budget, std::uint64_t seed = 0);

struct HamPathResult {
  enum class Status { found, none, unknown } status = Status::unknown;
  std::vector<Vertex> path;
};

// Hamilton path with endpoints u and v: pinned rotation-extension in g - v
// closing through a neighbour of v, exact DP fallback when n fits the
// oracle budget, unknown otherwise.
HamPathResult hamilton_path_between(const Graph& g, Vertex u, Vertex v,
                                    int budget,
                                    const OracleBudget& oracle_budget = {});

// Full solver. Quick-rejects delta(G) < 2; sparse/dense regimes run
// skeleton + absorb_boosters with re-draws, then G itself as host; the very
// dense regime deletes a minimum-degree vertex and closes a Hamilton path
// between two of its neighbours; auto_fallback resolves unknowns with the
// exact oracle when n fits. Cycles are always verified before return.
HamCertificate solve_hamilton(const Graph& g, const RegimeParams& params,
                              SolveMode mode = SolveMode::auto_fallback,
                              std::uint64_t seed = 0,
                              const OracleBudget& oracle_budget = {});

std::string to_json(const HamCertificate& cert);

}  // namespace hamex

#endif
