#ifndef HAMEX_PROPERTIES_HPP
#define HAMEX_PROPERTIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamex/graph.hpp"
#include "hamex/regime.hpp"

namespace hamex {

enum class PropertyLabel {
  P0, P1, P2, P3, P4, P5, P6, P7,
  Q0, Q1, Q2, Q3, Q4, Q5,
  R0, R1, R2, R3,
  EXPANDER,
};
std::string to_string(PropertyLabel label);

enum class Verdict { holds, violated, unknown };
std::string to_string(Verdict v);

enum class CheckMode { exact, randomized };
std::string to_string(CheckMode m);

// Violations carry the sets and the measured count so they can be
// re-validated independently through edge_count_within / edge_count_between.
struct Witness {
  VertexSet u;
  std::optional<VertexSet> w;
  long long value = 0;
  std::string note;
};

struct PropertyReport {
  PropertyLabel label = PropertyLabel::P0;
  Verdict verdict = Verdict::unknown;
  CheckMode mode = CheckMode::exact;
  long long trials = 0;  // randomized mode only
  std::optional<Witness> witness;
  std::string note;
};

struct PropertySuiteResult {
  Regime regime = Regime::sparse;
  std::vector<PropertyReport> reports;
  std::vector<std::string> warnings;
};

// SMALL(G) at a degree threshold: v is a member iff d(v) <= threshold.
struct SmallSet {
  double threshold = 0.0;
  VertexSet members;
};

SmallSet small_vertices(const Graph& g, double threshold);

struct CheckOptions {
  CheckMode mode = CheckMode::exact;  // requested; reports record the actual
  long long trials = 100000;          // randomized refutation budget
  std::uint64_t seed = 0;
  long long subset_budget = 20'000'000;  // exact enumeration cap (subsets)
  int independence_exact_limit = 40;
};

// Runs the property family selected by params.regime:
//   sparse (and very_sparse, with a warning): P0-P6
//   dense:                                    Q0-Q4
//   very_dense:                               R0-R3
// P7/Q5 are exercised constructively by the absorption loop and are out of
// range here. Degree/SMALL/distance properties are always exact;
// subset-quantified ones are exact only when enumerable within the budget,
// otherwise a randomized refutation search that cannot certify holds.
PropertySuiteResult check_suite(const Graph& g, const RegimeParams& params,
                                const CheckOptions& opts = {});

// (k,alpha)-expander test: |N(W)| >= alpha |W| for every W with |W| <= k.
// Exact mode enumerates subsets in lexicographic order (first witness is the
// lexicographically first violator); randomized mode samples subsets biased
// toward low-degree seeds and their neighborhoods and can only return
// violated or unknown.
PropertyReport is_expander(const Graph& g, int k, double alpha,
                           const CheckOptions& opts = {});

// Exact kappa(G) via minimum vertex cuts (max-flow between non-adjacent
// pairs); K_n returns n-1 by convention. Requires n >= 2.
int vertex_connectivity(const Graph& g);

struct IndependenceResult {
  int value = 0;
  bool exact = false;
  VertexSet witness;  // an independent set of the reported size
};

// Exact alpha(G) by branch and bound when n <= exact_limit (and n <= 64),
// otherwise a greedy lower bound flagged non-exact.
IndependenceResult independence_number(const Graph& g, int exact_limit = 40);

std::string to_json(const PropertyReport& report);
std::string to_json(const PropertySuiteResult& result);

}  // namespace hamex

#endif
