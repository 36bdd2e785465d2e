#include <doctest.h>

#include "hamex/errors.hpp"
#include "hamex/experiments.hpp"
#include "hamex/matching.hpp"
#include "hamex/oracles.hpp"
#include "hamex/random_graphs.hpp"
#include "hamex/regime.hpp"
#include "hamex/skeleton.hpp"

using namespace hamex;

TEST_CASE("max_matching on named graphs") {
  Matching c6 = max_matching(cycle_graph(6));
  CHECK(c6.size() == 3);
  CHECK(c6.exposed.empty());
  CHECK(verify_perfect_matching(cycle_graph(6), c6));

  Matching star = max_matching(star_graph(4));
  CHECK(star.size() == 1);
  CHECK(star.exposed.size() == 2);

  Matching pet = max_matching(petersen_graph());
  CHECK(pet.size() == 5);
  CHECK(verify_perfect_matching(petersen_graph(), pet));
}

TEST_CASE("max_matching equals brute force on random graphs") {
  for (int i = 0; i < 300; ++i) {
    int n = 2 + i % 11;  // 2..12
    double p = 0.1 + 0.08 * (i % 9);
    Graph g = sample_gnp(n, p, 331 + i);
    Matching m = max_matching(g);
    CHECK(m.size() == brute_matching(g));
    // type invariants
    CHECK(2 * m.size() + m.exposed.size() == n);
    std::vector<char> hit(n, 0);
    for (Edge e : m.edges) {
      CHECK(g.has_edge(e.first, e.second));
      CHECK(!hit[e.first]);
      CHECK(!hit[e.second]);
      hit[e.first] = hit[e.second] = 1;
    }
    for (Vertex v : m.exposed) CHECK(!hit[v]);
  }
}

TEST_CASE("find_staple hand-checked cases") {
  // view: path a-b-c on {a,b,c,d}; G also has (c,d) -> (c,d) is a staple
  Graph view = Graph::build(4, {{0, 1}, {1, 2}});
  Graph g1 = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}});
  HostGraph host1(view);
  auto staple = find_staple(host1, g1);
  REQUIRE(staple.has_value());
  CHECK(*staple == Edge{2, 3});

  // only (a,c) available: nu stays 1, no staple
  Graph g2 = Graph::build(4, {{0, 1}, {1, 2}, {0, 2}});
  HostGraph host2(view);
  CHECK(!find_staple(host2, g2).has_value());
}

TEST_CASE("staple absorption raises nu by exactly one per step") {
  Graph g = complete_bipartite(4, 4);
  // skeleton: a sparse subgraph of K_{4,4} lacking a perfect matching
  Graph sparse = Graph::build(8, {{0, 4}, {1, 4}, {2, 4}, {3, 4}, {3, 5}});
  Skeleton sk;
  sk.graph = sparse;
  sk.out_degree = 2;
  PMCertificate cert = absorb_staples(sk, g, 8);
  REQUIRE(cert.kind == PMKind::perfect);
  CHECK(verify_perfect_matching(g, cert.matching));
  // replay the trace: each staple adds exactly one to nu
  HostGraph host(sparse);
  int nu = max_matching(host).size();
  for (const TraceStep& t : cert.trace) {
    host.add_edge(t.edge.first, t.edge.second);
    int nu_next = max_matching(host).size();
    CHECK(nu_next == nu + 1);
    nu = nu_next;
  }
}

TEST_CASE("absorb_staples rejects parity and isolated vertices") {
  Graph odd = complete_graph(7);
  Skeleton sk_odd;
  sk_odd.graph = odd;
  CHECK(absorb_staples(sk_odd, odd, 10).kind == PMKind::none);

  Graph iso = Graph::build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  Skeleton sk_iso;
  sk_iso.graph = iso;
  PMCertificate cert = absorb_staples(sk_iso, iso, 10);
  CHECK(cert.kind == PMKind::none);
  CHECK(cert.reason == "isolated vertex");
}

TEST_CASE("absorb_staples on K8 from a spanning skeleton") {
  Graph k8 = complete_graph(8);
  RegimeParams params = regime_params(8, 0.9);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Skeleton sk = build_skeleton(k8, params, seed);
    PMCertificate cert = absorb_staples(sk, k8, 8);
    REQUIRE(cert.kind == PMKind::perfect);
    CHECK(verify_perfect_matching(k8, cert.matching));
  }
}

TEST_CASE("solve_pm named cases") {
  RegimeParams dense = regime_params(8, 0.9);
  PMCertificate k8 = solve_pm(complete_graph(8), dense);
  CHECK(k8.kind == PMKind::perfect);

  Graph iso = Graph::build(4, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(solve_pm(iso, regime_params(4, 0.5)).kind == PMKind::none);

  CHECK(solve_pm(complete_graph(7), regime_params(7, 0.9)).kind ==
        PMKind::none);
}

TEST_CASE("solve_pm agrees with brute-force verdicts across modes") {
  for (int i = 0; i < 120; ++i) {
    int n = 6 + 2 * (i % 4);  // 6..12 even
    double p = 0.15 + 0.07 * (i % 8);
    Graph g = sample_gnp(n, p, 9100 + i);
    bool exact_pm = 2 * brute_matching(g) == n;
    RegimeParams params = regime_params(n, p);
    for (SolveMode mode : {SolveMode::auto_fallback, SolveMode::exact}) {
      PMCertificate cert = solve_pm(g, params, mode, 55 + i);
      CHECK(cert.kind != PMKind::unknown);
      CHECK((cert.kind == PMKind::perfect) == exact_pm);
      if (cert.kind == PMKind::perfect)
        CHECK(verify_perfect_matching(g, cert.matching));
    }
  }
}

TEST_CASE("solve_pm certificate json shape") {
  PMCertificate cert = solve_pm(complete_graph(6), regime_params(6, 0.9));
  std::string j = to_json(cert);
  CHECK(j.find("\"kind\":\"perfect\"") != std::string::npos);
  CHECK(j.find("\"matching\"") != std::string::npos);
  CHECK(j.find("\"regime\"") != std::string::npos);
}

TEST_CASE("staple count bound on seeded expander families") {
  // K_{2,4} is a (2,1)-expander without a perfect matching
  Graph k24 = complete_bipartite(2, 4);
  CHECK(max_matching(k24).size() == 2);
  CHECK(enumerate_staples(k24).size() >= 3);  // C(3,2)

  // K_{3,5} is a (3,1)-expander without a perfect matching
  Graph k35 = complete_bipartite(3, 5);
  CHECK(max_matching(k35).size() == 3);
  CHECK(enumerate_staples(k35).size() >= 6);  // C(4,2)
}
