#include "hamex/oracles.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>

#include "hamex/errors.hpp"
#include "hamex/matching.hpp"

namespace hamex {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  Clock::time_point end;
  explicit Deadline(long long ms) : end(Clock::now() + std::chrono::milliseconds(ms)) {}
  void check(const char* what) const {
    if (Clock::now() > end)
      throw budget_error(std::string(what) + ": time cap exceeded");
  }
};

void check_dp_budget(const Graph& g, const OracleBudget& budget,
                     const char* what) {
  if (g.vertex_count() > budget.max_n_dp)
    throw budget_error(std::string(what) + ": n=" +
                       std::to_string(g.vertex_count()) + " exceeds max_n_dp=" +
                       std::to_string(budget.max_n_dp));
}

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> adj(g.vertex_count(), 0);
  for (Edge e : g.edges()) {
    adj[e.first] |= std::uint32_t{1} << e.second;
    adj[e.second] |= std::uint32_t{1} << e.first;
  }
  return adj;
}

// dp over subsets: dp[mask] = set of possible path ends, paths covering mask
// anchored at `anchor` (or any single vertex when anchor < 0).
std::vector<std::uint32_t> path_dp(int n, const std::vector<std::uint32_t>& adj,
                                   int anchor, const Deadline& deadline) {
  const std::uint32_t full_count = std::uint32_t{1} << n;
  std::vector<std::uint32_t> dp(full_count, 0);
  if (anchor >= 0)
    dp[std::uint32_t{1} << anchor] = std::uint32_t{1} << anchor;
  else
    for (int v = 0; v < n; ++v)
      dp[std::uint32_t{1} << v] = std::uint32_t{1} << v;
  for (std::uint32_t mask = 1; mask < full_count; ++mask) {
    if ((mask & 0xffff) == 0) deadline.check("subset DP");
    std::uint32_t ends = dp[mask];
    if (!ends) continue;
    while (ends) {
      int v = std::countr_zero(ends);
      ends &= ends - 1;
      std::uint32_t nxt = adj[v] & ~mask;
      while (nxt) {
        int u = std::countr_zero(nxt);
        nxt &= nxt - 1;
        dp[mask | (std::uint32_t{1} << u)] |= std::uint32_t{1} << u;
      }
    }
  }
  return dp;
}

// Reconstructs a path covering mask that ends at `end`.
std::vector<Vertex> backtrack_path(const std::vector<std::uint32_t>& dp,
                                   const std::vector<std::uint32_t>& adj,
                                   std::uint32_t mask, int end) {
  std::vector<Vertex> path;
  int cur = end;
  while (true) {
    path.push_back(cur);
    std::uint32_t rest = mask ^ (std::uint32_t{1} << cur);
    if (rest == 0) break;
    std::uint32_t prevs = dp[rest] & adj[cur];
    int prev = std::countr_zero(prevs);  // prevs nonzero by dp construction
    mask = rest;
    cur = prev;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

HamOracleResult ham_from_masks(int n, const std::vector<std::uint32_t>& adj,
                               const Deadline& deadline) {
  HamOracleResult out;
  if (n < 3) return out;
  for (int v = 0; v < n; ++v)
    if (std::popcount(adj[v]) < 2) return out;
  // connectivity
  {
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint32_t next = 0;
      while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        next |= adj[v] & ~seen;
      }
      seen |= next;
      frontier = next;
    }
    if (seen != (std::uint32_t{1} << n) - 1) return out;
  }
  auto dp = path_dp(n, adj, 0, deadline);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::uint32_t closers = dp[full] & adj[0];
  if (!closers) return out;
  out.hamiltonian = true;
  out.cycle = backtrack_path(dp, adj, full, std::countr_zero(closers));
  return out;
}

PathOracleResult longest_from_masks(int n,
                                    const std::vector<std::uint32_t>& adj,
                                    const Deadline& deadline) {
  PathOracleResult out;
  if (n == 0) return out;
  auto dp = path_dp(n, adj, -1, deadline);
  const std::uint32_t full_count = std::uint32_t{1} << n;
  int best = 0;
  std::uint32_t best_mask = 0;
  int best_end = -1;
  for (std::uint32_t mask = 1; mask < full_count; ++mask) {
    if (!dp[mask]) continue;
    int size = std::popcount(mask);
    if (size > best) {
      best = size;
      best_mask = mask;
      best_end = std::countr_zero(dp[mask]);
    }
  }
  out.length = best;
  out.path = backtrack_path(dp, adj, best_mask, best_end);
  return out;
}

}  // namespace

HamOracleResult exact_hamiltonicity(const Graph& g,
                                    const OracleBudget& budget) {
  check_dp_budget(g, budget, "exact_hamiltonicity");
  Deadline deadline(budget.time_cap_ms);
  return ham_from_masks(g.vertex_count(), adjacency_masks(g), deadline);
}

PathOracleResult exact_longest_path(const Graph& g,
                                    const OracleBudget& budget) {
  check_dp_budget(g, budget, "exact_longest_path");
  Deadline deadline(budget.time_cap_ms);
  return longest_from_masks(g.vertex_count(), adjacency_masks(g), deadline);
}

std::optional<std::vector<Vertex>> exact_hamilton_path_between(
    const Graph& g, Vertex u, Vertex v, const OracleBudget& budget) {
  check_dp_budget(g, budget, "exact_hamilton_path_between");
  if (u == v || u < 0 || v < 0 || u >= g.vertex_count() ||
      v >= g.vertex_count())
    throw input_error("exact_hamilton_path_between: bad endpoints");
  Deadline deadline(budget.time_cap_ms);
  const int n = g.vertex_count();
  auto adj = adjacency_masks(g);
  auto dp = path_dp(n, adj, u, deadline);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  if (!(dp[full] >> v & 1)) return std::nullopt;
  return backtrack_path(dp, adj, full, v);
}

std::vector<Edge> enumerate_boosters(const Graph& g,
                                     const OracleBudget& budget) {
  check_dp_budget(g, budget, "enumerate_boosters");
  Deadline deadline(budget.time_cap_ms);
  const int n = g.vertex_count();
  auto adj = adjacency_masks(g);
  const bool ham0 = ham_from_masks(n, adj, deadline).hamiltonian;
  const int longest0 = longest_from_masks(n, adj, deadline).length;
  std::vector<Edge> boosters;
  for (Vertex a = 0; a < n - 1; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (adj[a] >> b & 1) continue;
      deadline.check("enumerate_boosters");
      adj[a] |= std::uint32_t{1} << b;
      adj[b] |= std::uint32_t{1} << a;
      bool is_booster = false;
      if (!ham0 && ham_from_masks(n, adj, deadline).hamiltonian)
        is_booster = true;
      else if (longest_from_masks(n, adj, deadline).length > longest0)
        is_booster = true;
      adj[a] &= ~(std::uint32_t{1} << b);
      adj[b] &= ~(std::uint32_t{1} << a);
      if (is_booster) boosters.emplace_back(a, b);
    }
  return boosters;
}

std::vector<Edge> enumerate_staples(const Graph& g,
                                    const OracleBudget& budget) {
  check_dp_budget(g, budget, "enumerate_staples");
  const int n = g.vertex_count();
  const int nu0 = max_matching(g).size();
  std::vector<Edge> staples;
  std::vector<Edge> edges = g.edges();
  for (Vertex a = 0; a < n - 1; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (g.has_edge(a, b)) continue;
      edges.emplace_back(a, b);
      if (max_matching(Graph::build(n, edges)).size() > nu0)
        staples.emplace_back(a, b);
      edges.pop_back();
    }
  return staples;
}

namespace {

int brute_nu(std::uint32_t alive, const std::vector<std::uint32_t>& adj,
             std::vector<signed char>& memo) {
  if (memo[alive] >= 0) return memo[alive];
  // lowest alive vertex with an alive neighbour
  std::uint32_t scan = alive;
  int v = -1;
  while (scan) {
    int cand = std::countr_zero(scan);
    scan &= scan - 1;
    if (adj[cand] & alive) {
      v = cand;
      break;
    }
  }
  if (v < 0) return memo[alive] = 0;
  std::uint32_t without_v = alive & ~(std::uint32_t{1} << v);
  int best = brute_nu(without_v, adj, memo);  // leave v unmatched
  std::uint32_t nbrs = adj[v] & alive;
  while (nbrs) {
    int u = std::countr_zero(nbrs);
    nbrs &= nbrs - 1;
    best = std::max(
        best, 1 + brute_nu(without_v & ~(std::uint32_t{1} << u), adj, memo));
  }
  return memo[alive] = static_cast<signed char>(best);
}

}  // namespace

int brute_matching(const Graph& g, const OracleBudget& budget) {
  (void)budget;
  const int n = g.vertex_count();
  if (n > 12)
    throw budget_error("brute_matching: n=" + std::to_string(n) +
                       " exceeds 12");
  auto adj = adjacency_masks(g);
  std::vector<signed char> memo(std::size_t{1} << n, -1);
  return brute_nu((std::uint32_t{1} << n) - 1, adj, memo);
}

std::vector<long long> exact_gnp_profile(int n, const GraphPredicate& pred,
                                         const OracleBudget& budget) {
  if (n > budget.max_n_enum)
    throw budget_error("exact_gnp_profile: n=" + std::to_string(n) +
                       " exceeds max_n_enum=" +
                       std::to_string(budget.max_n_enum));
  if (n < 1) throw input_error("exact_gnp_profile: n < 1");
  Deadline deadline(budget.time_cap_ms);
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n - 1; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const int m = static_cast<int>(pairs.size());
  std::vector<long long> profile(m + 1, 0);
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if ((mask & 0xfff) == 0) deadline.check("exact_gnp_profile");
    edges.clear();
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) edges.push_back(pairs[i]);
    if (pred(Graph::build(n, edges)))
      ++profile[std::popcount(mask)];
  }
  return profile;
}

double exact_gnp_probability(double p, int n,
                             const std::vector<long long>& profile) {
  const long long m = pair_count(n);
  if (static_cast<long long>(profile.size()) != m + 1)
    throw input_error("exact_gnp_probability: profile size mismatch");
  long double total = 0.0L;
  for (long long e = 0; e <= m; ++e) {
    if (profile[e] == 0) continue;
    long double term = static_cast<long double>(profile[e]);
    // p^e (1-p)^{m-e} without underflow drama at these scales
    term *= std::pow(static_cast<long double>(p), static_cast<long double>(e));
    term *= std::pow(1.0L - static_cast<long double>(p),
                     static_cast<long double>(m - e));
    total += term;
  }
  return static_cast<double>(total);
}

double exact_gnp_probability(int n, double p, const GraphPredicate& pred,
                             const OracleBudget& budget) {
  if (!(p >= 0.0 && p <= 1.0))
    throw input_error("exact_gnp_probability: p outside [0,1]");
  return exact_gnp_probability(p, n, exact_gnp_profile(n, pred, budget));
}

double binomial_tail_exact(long long n, double p, long long k) {
  if (n < 0 || n > 1000000)
    throw input_error("binomial_tail_exact: n outside [0, 1e6]");
  if (!(p >= 0.0 && p <= 1.0))
    throw input_error("binomial_tail_exact: p outside [0,1]");
  if (k <= 0) return 1.0;
  if (k > n) return 0.0;
  if (p == 0.0) return 0.0;  // k >= 1
  if (p == 1.0) return 1.0;  // k <= n

  auto log_term = [&](long long j) {
    return std::lgamma(static_cast<double>(n + 1)) -
           std::lgamma(static_cast<double>(j + 1)) -
           std::lgamma(static_cast<double>(n - j + 1)) +
           j * std::log(p) + (n - j) * std::log1p(-p);
  };
  // Kahan sum walking away from the mode, where terms decrease
  // monotonically; stops once further terms cannot move the sum.
  auto kahan_sweep = [&](long long start, long long stop, long long dir) {
    long double sum = 0.0L, comp = 0.0L;
    for (long long j = start; dir > 0 ? j <= stop : j >= stop; j += dir) {
      long double term = std::exp(static_cast<long double>(log_term(j)));
      long double y = term - comp;
      long double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
      if (term < sum * 1e-22L) break;
    }
    return sum;
  };
  const double np = static_cast<double>(n) * p;
  if (static_cast<double>(k) > np)  // upper tail is the small side
    return static_cast<double>(kahan_sweep(k, n, +1));
  long double lower = kahan_sweep(k - 1, 0, -1);  // Pr(X <= k-1)
  long double tail = 1.0L - lower;
  if (tail < 0.0L) tail = 0.0L;
  return static_cast<double>(tail);
}

}  // namespace hamex
