#ifndef HAMEX_ORACLES_HPP
#define HAMEX_ORACLES_HPP

#include <optional>
#include <vector>

#include "hamex/graph.hpp"

namespace hamex {

// Exponential-time ground truth for small instances. Budget breaches are
// hard errors (budget_error), never silent degradation.
struct OracleBudget {
  int max_n_dp = 22;            // subset-DP limit
  int max_n_enum = 6;           // whole-graph-space enumeration limit
  long long time_cap_ms = 300000;
};

struct HamOracleResult {
  bool hamiltonian = false;
  std::vector<Vertex> cycle;  // witness when hamiltonian
};

struct PathOracleResult {
  int length = 0;             // vertices on a longest simple path
  std::vector<Vertex> path;   // witness
};

// Exact Hamiltonicity by subset DP over vertex sets, with a cycle witness.
HamOracleResult exact_hamiltonicity(const Graph& g,
                                    const OracleBudget& budget = {});

// Exact longest simple path (vertex count) by subset DP.
PathOracleResult exact_longest_path(const Graph& g,
                                    const OracleBudget& budget = {});

// Exact Hamilton path with the two given endpoints, if one exists.
std::optional<std::vector<Vertex>> exact_hamilton_path_between(
    const Graph& g, Vertex u, Vertex v, const OracleBudget& budget = {});

// All non-edges whose addition makes a non-Hamiltonian graph Hamiltonian or
// strictly lengthens a longest path. A Hamiltonian input has no boosters.
std::vector<Edge> enumerate_boosters(const Graph& g,
                                     const OracleBudget& budget = {});

// All non-edges whose addition increases the maximum matching size.
std::vector<Edge> enumerate_staples(const Graph& g,
                                    const OracleBudget& budget = {});

// Exact nu(G) by exhaustive branching; n <= 12.
int brute_matching(const Graph& g, const OracleBudget& budget = {});

// Number of labeled graphs on n vertices with exactly m edges satisfying the
// predicate, for every m; the expensive part of tiny-n probabilities, cached
// by callers evaluating several p values.
std::vector<long long> exact_gnp_profile(int n, const GraphPredicate& pred,
                                         const OracleBudget& budget = {});

// Sum over graphs satisfying pred of p^{|E|} (1-p)^{C(n,2)-|E|}.
double exact_gnp_probability(int n, double p, const GraphPredicate& pred,
                             const OracleBudget& budget = {});
double exact_gnp_probability(double p, int n,
                             const std::vector<long long>& profile);

// Pr(X >= k) for X ~ Bin(n,p), numerically stable (log-space terms, Kahan
// accumulation, smaller-side summation).
double binomial_tail_exact(long long n, double p, long long k);

}  // namespace hamex

#endif
