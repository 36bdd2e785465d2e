#include <doctest.h>

#include <cmath>
#include <map>
#include <sstream>

#include "hamex/errors.hpp"
#include "hamex/experiments.hpp"
#include "hamex/graph.hpp"
#include "hamex/matching.hpp"
#include "hamex/oracles.hpp"
#include "hamex/random_graphs.hpp"

using namespace hamex;

TEST_CASE("sample_gnp endpoints and determinism") {
  Graph empty = sample_gnp(10, 0.0, 1);
  CHECK(empty.edge_count() == 0);
  Graph full = sample_gnp(10, 1.0, 1);
  CHECK(full.edge_count() == 45);

  Graph a = sample_gnp(40, 0.2, 777);
  Graph b = sample_gnp(40, 0.2, 777);
  CHECK(a.edges() == b.edges());
  Graph c = sample_gnp(40, 0.2, 778);
  CHECK(a.edges() != c.edges());

  CHECK_THROWS_AS(sample_gnp(10, -0.1, 0), input_error);
  CHECK_THROWS_AS(sample_gnp(10, 1.1, 0), input_error);
}

TEST_CASE("sample_gnp edge count within the Chernoff window") {
  // E m = 2475 at n=100, p=0.5; window 3*sqrt(2475)
  const double mean = 2475.0;
  const double window = 3.0 * std::sqrt(mean);
  int inside = 0;
  const int trials = 1000;
  for (int i = 0; i < trials; ++i) {
    Graph g = sample_gnp(100, 0.5, 10000 + i);
    if (std::abs(static_cast<double>(g.edge_count()) - mean) <= window)
      ++inside;
  }
  CHECK(inside >= 990);
}

TEST_CASE("sample_gnp marginal inclusion frequency per pair") {
  // fixed pair (0,1); frequencies should sit in a generous 99.9% window
  for (double p : {0.05, 0.3}) {  // one geometric-skipping, one sweep
    int hits = 0;
    const int trials = 10000;
    for (int i = 0; i < trials; ++i)
      if (sample_gnp(12, p, 50000 + i).has_edge(0, 1)) ++hits;
    double freq = static_cast<double>(hits) / trials;
    double sigma = std::sqrt(p * (1 - p) / trials);
    CHECK(std::abs(freq - p) <= 4.0 * sigma);
  }
}

TEST_CASE("sample_process is a uniform permutation of all pairs") {
  EdgeOrdering ord = sample_process(3, 9);
  CHECK(ord.order.size() == 3);
  std::vector<Edge> sorted = ord.order;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});

  EdgeOrdering again = sample_process(3, 9);
  CHECK(again.order == ord.order);

  std::map<std::vector<Edge>, int> freq;
  const int trials = 6000;
  for (int i = 0; i < trials; ++i)
    freq[sample_process(3, 100 + i).order]++;
  CHECK(freq.size() == 6);
  for (const auto& [perm, count] : freq) {
    double f = static_cast<double>(count) / trials;
    CHECK(std::abs(f - 1.0 / 6.0) <= 0.03);
  }
}

TEST_CASE("prefix_graph endpoints and hand-built ordering") {
  EdgeOrdering ord;
  ord.n = 4;
  ord.order = {{0, 1}, {2, 3}, {0, 2}, {1, 3}, {0, 3}, {1, 2}};

  CHECK(prefix_graph(ord, 0).edge_count() == 0);
  CHECK(prefix_graph(ord, 6).edge_count() == 6);
  Graph g4 = prefix_graph(ord, 4);
  CHECK(g4.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK_THROWS_AS(prefix_graph(ord, 7), input_error);
  CHECK_THROWS_AS(prefix_graph(ord, -1), input_error);
}

TEST_CASE("hitting_time on forced and hand-built orderings") {
  auto d2 = [](const Graph& g) { return degree_profile(g).min >= 2; };
  auto ham = [](const Graph& g) { return exact_hamiltonicity(g).hamiltonian; };

  for (int seed = 0; seed < 5; ++seed) {
    EdgeOrdering ord = sample_process(3, seed);
    CHECK(hitting_time(ord, GraphProperty::HAM, ham) == 3);
    CHECK(hitting_time(ord, GraphProperty::D2, d2) == 3);
  }

  EdgeOrdering ord;
  ord.n = 4;
  ord.order = {{0, 1}, {2, 3}, {0, 2}, {1, 3}, {0, 3}, {1, 2}};
  CHECK(hitting_time(ord, GraphProperty::D2, d2) == 4);
  CHECK(hitting_time(ord, GraphProperty::HAM, ham) == 4);
}

TEST_CASE("hitting_time monotone sandwich with exact deciders") {
  auto d1 = [](const Graph& g) { return degree_profile(g).min >= 1; };
  auto d2 = [](const Graph& g) { return degree_profile(g).min >= 2; };
  auto ham = [](const Graph& g) { return exact_hamiltonicity(g).hamiltonian; };
  auto pm = [](const Graph& g) {
    return g.vertex_count() % 2 == 0 &&
           max_matching(g).size() * 2 == g.vertex_count();
  };
  for (int seed = 0; seed < 40; ++seed) {
    EdgeOrdering ord = sample_process(8, 400 + seed);
    long long td1 = hitting_time(ord, GraphProperty::D1, d1);
    long long td2 = hitting_time(ord, GraphProperty::D2, d2);
    long long tpm = hitting_time(ord, GraphProperty::PM, pm);
    long long tham = hitting_time(ord, GraphProperty::HAM, ham);
    CHECK(td1 <= tpm);
    CHECK(td2 <= tham);
    CHECK(td1 <= td2);
  }
}

TEST_CASE("hitting_time sentinel when even K_n fails") {
  EdgeOrdering ord = sample_process(5, 3);  // odd n: no perfect matching ever
  auto pm = [](const Graph& g) {
    return g.vertex_count() % 2 == 0 &&
           max_matching(g).size() * 2 == g.vertex_count();
  };
  CHECK(hitting_time(ord, GraphProperty::PM, pm) == pair_count(5) + 1);
}

TEST_CASE("ordering replay format round trip") {
  EdgeOrdering ord = sample_process(6, 17);
  std::string text = write_ordering(ord);
  std::istringstream in(text);
  EdgeOrdering back = read_ordering(in);
  CHECK(back.n == ord.n);
  CHECK(back.order == ord.order);

  std::istringstream repeated("3\n0 1\n0 1\n1 2\n");
  CHECK_THROWS_AS(read_ordering(repeated), input_error);
}
