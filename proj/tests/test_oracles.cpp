#include <doctest.h>

#include <algorithm>
#include <functional>

#include "hamex/errors.hpp"
#include "hamex/experiments.hpp"
#include "hamex/matching.hpp"
#include "hamex/oracles.hpp"
#include "hamex/posa.hpp"
#include "hamex/random_graphs.hpp"

using namespace hamex;

namespace {

// Test-side longest cycle by rooted DFS, independent of the subset DP.
int longest_cycle_dfs(const Graph& g) {
  const int n = g.vertex_count();
  int best = 0;
  std::vector<char> on(n, 0);
  std::function<void(Vertex, Vertex, int)> dfs = [&](Vertex root, Vertex v,
                                                     int len) {
    for (Vertex w : g.neighbors(v)) {
      if (w == root && len >= 3) best = std::max(best, len);
      if (w > root && !on[w]) {  // root stays the smallest cycle vertex
        on[w] = 1;
        dfs(root, w, len + 1);
        on[w] = 0;
      }
    }
  };
  for (Vertex r = 0; r < n; ++r) {
    on[r] = 1;
    dfs(r, r, 1);
    on[r] = 0;
  }
  return best;
}

int naive_longest_path_dfs(const Graph& g) {
  const int n = g.vertex_count();
  int best = n > 0 ? 1 : 0;
  std::vector<char> on(n, 0);
  std::function<void(Vertex, int)> dfs = [&](Vertex v, int len) {
    best = std::max(best, len);
    for (Vertex w : g.neighbors(v))
      if (!on[w]) {
        on[w] = 1;
        dfs(w, len + 1);
        on[w] = 0;
      }
  };
  for (Vertex v = 0; v < n; ++v) {
    on[v] = 1;
    dfs(v, 1);
    on[v] = 0;
  }
  return best;
}

}  // namespace

TEST_CASE("exact_hamiltonicity on named graphs") {
  CHECK(exact_hamiltonicity(complete_graph(4)).hamiltonian);
  auto k4 = exact_hamiltonicity(complete_graph(4));
  CHECK(verify_cycle(complete_graph(4), k4.cycle));

  CHECK(!exact_hamiltonicity(petersen_graph()).hamiltonian);

  // any graph with a degree-1 vertex
  CHECK(!exact_hamiltonicity(path_graph(6)).hamiltonian);
  CHECK(!exact_hamiltonicity(star_graph(5)).hamiltonian);

  Graph c7 = cycle_graph(7);
  auto r = exact_hamiltonicity(c7);
  CHECK(r.hamiltonian);
  CHECK(verify_cycle(c7, r.cycle));

  OracleBudget tight;
  tight.max_n_dp = 10;
  CHECK_THROWS_AS(exact_hamiltonicity(complete_graph(12), tight),
                  budget_error);
}

TEST_CASE("exact_hamiltonicity against longest-cycle DFS") {
  for (int i = 0; i < 60; ++i) {
    int n = 4 + i % 5;  // 4..8
    Graph g = sample_gnp(n, 0.35 + 0.05 * (i % 6), 7000 + i);
    bool ham = exact_hamiltonicity(g).hamiltonian;
    CHECK(ham == (longest_cycle_dfs(g) == n));
  }
}

TEST_CASE("exact_longest_path on named graphs and vs naive search") {
  CHECK(exact_longest_path(path_graph(5)).length == 5);
  CHECK(exact_longest_path(star_graph(5)).length == 3);
  auto witness = exact_longest_path(path_graph(5));
  CHECK(verify_path(path_graph(5), witness.path));
  CHECK(static_cast<int>(witness.path.size()) == witness.length);

  for (int i = 0; i < 40; ++i) {
    Graph g = sample_gnp(9, 0.3, 8800 + i);
    auto dp = exact_longest_path(g);
    CHECK(dp.length == naive_longest_path_dfs(g));
    CHECK(verify_path(g, dp.path));
  }
}

TEST_CASE("enumerate_boosters on hand-checked graphs") {
  // P4 = a-b-c-d: only (a,d) is a booster
  Graph p4 = path_graph(4);
  CHECK(enumerate_boosters(p4) == std::vector<Edge>{{0, 3}});

  // a Hamiltonian graph has no boosters
  CHECK(enumerate_boosters(cycle_graph(6)).empty());
  CHECK(enumerate_boosters(complete_graph(5)).empty());

  // Petersen is maximally non-Hamiltonian: every non-edge is a booster
  Graph pet = petersen_graph();
  CHECK(static_cast<long long>(enumerate_boosters(pet).size()) ==
        pair_count(10) - pet.edge_count());
}

TEST_CASE("enumerate_staples on hand-checked graphs") {
  // two disjoint edges on 4 vertices: already perfect
  Graph pm = Graph::build(4, {{0, 1}, {2, 3}});
  CHECK(enumerate_staples(pm).empty());

  // path a-b-c plus isolated d: staples are (a,d) and (c,d)
  Graph g = Graph::build(4, {{0, 1}, {1, 2}});
  CHECK(enumerate_staples(g) == std::vector<Edge>{{0, 3}, {2, 3}});
}

TEST_CASE("brute_matching on named graphs") {
  CHECK(brute_matching(cycle_graph(6)) == 3);
  CHECK(brute_matching(complete_graph(5)) == 2);
  CHECK(brute_matching(star_graph(6)) == 1);
  CHECK(brute_matching(petersen_graph()) == 5);
  CHECK_THROWS_AS(brute_matching(complete_graph(13)), budget_error);
}

TEST_CASE("exact_gnp_probability tiny-n closed forms") {
  auto ham_profile =
      exact_gnp_profile(3, [](const Graph& g) {
        return exact_hamiltonicity(g).hamiltonian;
      });
  auto low_profile = exact_gnp_profile(
      3, [](const Graph& g) { return degree_profile(g).min < 2; });
  for (double p : {0.2, 0.5, 0.8}) {
    CHECK(exact_gnp_probability(p, 3, ham_profile) ==
          doctest::Approx(p * p * p));
    CHECK(exact_gnp_probability(p, 3, low_profile) ==
          doctest::Approx(1.0 - p * p * p));
  }

  // probabilities over a predicate partition sum to 1
  auto conn = exact_gnp_profile(4, [](const Graph& g) {
    return is_connected(g);
  });
  auto disc = exact_gnp_profile(4, [](const Graph& g) {
    return !is_connected(g);
  });
  for (double p : {0.3, 0.7})
    CHECK(exact_gnp_probability(p, 4, conn) +
              exact_gnp_probability(p, 4, disc) ==
          doctest::Approx(1.0));

  CHECK_THROWS_AS(
      exact_gnp_profile(7, [](const Graph&) { return true; }),
      budget_error);
}

TEST_CASE("binomial_tail_exact basics") {
  CHECK(binomial_tail_exact(10, 0.3, 0) == 1.0);
  CHECK(binomial_tail_exact(10, 0.3, 11) == 0.0);
  CHECK(binomial_tail_exact(20, 0.5, 15) == doctest::Approx(0.02069473).epsilon(1e-5));
  CHECK(binomial_tail_exact(10, 0.0, 1) == 0.0);
  CHECK(binomial_tail_exact(10, 1.0, 10) == 1.0);
  // complement identity: Pr(X >= k) = 1 - Pr(12 - X >= 13 - k)
  for (long long k = 0; k <= 12; ++k) {
    double a = binomial_tail_exact(12, 0.37, k);
    double b = binomial_tail_exact(12, 0.63, 13 - k);
    CHECK(a == doctest::Approx(1.0 - b).epsilon(1e-12));
  }
  // stability at large n
  double far_tail = binomial_tail_exact(1000000, 1e-5, 60);
  CHECK(far_tail > 0.0);
  CHECK(far_tail < 1e-12);
}

TEST_CASE("exact hamilton path between endpoints") {
  Graph c4 = cycle_graph(4);
  auto adjacent = exact_hamilton_path_between(c4, 0, 1);
  REQUIRE(adjacent.has_value());
  CHECK(adjacent->front() == 0);
  CHECK(adjacent->back() == 1);
  CHECK(verify_path(c4, *adjacent));
  CHECK(adjacent->size() == 4);

  CHECK(!exact_hamilton_path_between(c4, 0, 2).has_value());

  Graph k4 = complete_graph(4);
  for (Vertex v = 1; v < 4; ++v)
    CHECK(exact_hamilton_path_between(k4, 0, v).has_value());
}
