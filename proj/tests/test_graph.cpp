#include <doctest.h>

#include <sstream>

#include "hamex/errors.hpp"
#include "hamex/experiments.hpp"
#include "hamex/graph.hpp"
#include "hamex/random_graphs.hpp"
#include "hamex/rng.hpp"

using namespace hamex;

TEST_CASE("build_graph canonicalizes and validates") {
  Graph tri = Graph::build(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(tri.vertex_count() == 3);
  CHECK(tri.edge_count() == 3);
  auto prof = degree_profile(tri);
  CHECK(prof.degrees == std::vector<int>{2, 2, 2});

  Graph empty = Graph::build(4, std::vector<Edge>{});
  auto eprof = degree_profile(empty);
  CHECK(eprof.min == 0);
  CHECK(eprof.max == 0);

  CHECK_THROWS_AS(Graph::build(4, {{1, 0}, {0, 1}}), input_error);
  CHECK_THROWS_AS(Graph::build(4, {{2, 2}}), input_error);
  CHECK_THROWS_AS(Graph::build(4, {{0, 4}}), input_error);

  // reversed input is normalized to u < v and sorted
  Graph g = Graph::build(3, {{2, 0}, {1, 0}});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
}

TEST_CASE("external_neighborhood") {
  Graph k4 = complete_graph(4);
  CHECK(external_neighborhood(k4, VertexSet{0}) == VertexSet{1, 2, 3});

  Graph p5 = path_graph(5);
  CHECK(external_neighborhood(p5, VertexSet{0}) == VertexSet{1});

  Graph c8 = cycle_graph(8);
  CHECK(external_neighborhood(c8, VertexSet{0, 1}) == VertexSet{2, 7});
  CHECK_THROWS_AS(external_neighborhood(c8, VertexSet{9}), input_error);
}

TEST_CASE("edge counts") {
  Graph c4 = cycle_graph(4);
  CHECK(edge_count_within(c4, VertexSet::full(4)) == 4);

  Graph k4 = complete_graph(4);
  CHECK(edge_count_between(k4, VertexSet{0, 1}, VertexSet{2, 3}) == 4);

  Graph empty = Graph::build(5, std::vector<Edge>{});
  CHECK(edge_count_within(empty, VertexSet{0, 2, 4}) == 0);

  CHECK_THROWS_AS(edge_count_between(k4, VertexSet{0, 1}, VertexSet{1, 2}),
                  input_error);
}

TEST_CASE("degree profile and bfs distance") {
  Graph k5 = complete_graph(5);
  auto prof = degree_profile(k5);
  CHECK(prof.min == 4);
  CHECK(prof.max == 4);

  Graph star4 = star_graph(4);
  auto sprof = degree_profile(star4);
  CHECK(sprof.min == 1);
  CHECK(sprof.max == 3);
  CHECK(sprof.degrees == std::vector<int>{3, 1, 1, 1});

  Graph single = Graph::build(1, std::vector<Edge>{});
  auto oneprof = degree_profile(single);
  CHECK(oneprof.min == 0);
  CHECK(oneprof.max == 0);

  Graph c8 = cycle_graph(8);
  CHECK(bfs_distance(c8, 0, 4) == 4);
  CHECK(bfs_distance(c8, 3, 3) == 0);

  Graph two_edges = Graph::build(4, {{0, 1}, {2, 3}});
  CHECK(!bfs_distance(two_edges, 0, 3).has_value());
}

TEST_CASE("edge count identity e(U+W) = e(U)+e(W)+e(U,W) on random graphs") {
  for (int i = 0; i < 30; ++i) {
    Graph g = sample_gnp(12, 0.4, 1000 + i);
    Rng rng(derive_seed(7, "split", i));
    std::vector<Vertex> u_ids, w_ids, all;
    for (Vertex v = 0; v < 12; ++v) {
      switch (rng.below(3)) {
        case 0: u_ids.push_back(v); all.push_back(v); break;
        case 1: w_ids.push_back(v); all.push_back(v); break;
        default: break;
      }
    }
    if (u_ids.empty() || w_ids.empty()) continue;
    VertexSet u(u_ids), w(w_ids), both(all);
    CHECK(edge_count_within(g, both) ==
          edge_count_within(g, u) + edge_count_within(g, w) +
              edge_count_between(g, u, w));
  }
}

TEST_CASE("neighborhood bound and disjointness") {
  for (int i = 0; i < 20; ++i) {
    Graph g = sample_gnp(10, 0.3, 55 + i);
    VertexSet u{0, 3, 7};
    VertexSet nb = external_neighborhood(g, u);
    long long deg_sum = 0;
    for (Vertex v : u) deg_sum += g.degree(v);
    CHECK(nb.size() <= deg_sum);
    for (Vertex v : nb) CHECK(!u.contains(v));
  }
}

TEST_CASE("degree profile sums to twice the edge count") {
  for (int i = 0; i < 20; ++i) {
    Graph g = sample_gnp(15, 0.35, 900 + i);
    auto prof = degree_profile(g);
    long long sum = 0;
    for (int d : prof.degrees) sum += d;
    CHECK(sum == 2 * g.edge_count());
  }
}

TEST_CASE("bfs distance symmetry and triangle inequality") {
  for (int i = 0; i < 10; ++i) {
    Graph g = sample_gnp(11, 0.25, 300 + i);
    for (Vertex a = 0; a < 11; ++a)
      for (Vertex b = a + 1; b < 11; ++b) {
        auto dab = bfs_distance(g, a, b);
        auto dba = bfs_distance(g, b, a);
        CHECK(dab == dba);
        if (!dab) continue;
        for (Vertex c = 0; c < 11; ++c) {
          auto dac = bfs_distance(g, a, c);
          auto dcb = bfs_distance(g, c, b);
          if (dac && dcb) CHECK(*dab <= *dac + *dcb);
        }
      }
  }
}

TEST_CASE("edge list round trip and strictness") {
  Graph g = sample_gnp(9, 0.4, 42);
  std::string text = write_edge_list(g);
  std::istringstream in(text);
  Graph back = read_edge_list(in);
  CHECK(back.edges() == g.edges());
  CHECK(back.vertex_count() == g.vertex_count());

  std::istringstream commented("# a comment\n# another\n2 1\n0 1\n");
  CHECK(read_edge_list(commented).edge_count() == 1);

  std::istringstream non_canonical("2 1\n1 0\n");
  CHECK_THROWS_AS(read_edge_list(non_canonical), input_error);

  std::istringstream out_of_order("3 2\n1 2\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(out_of_order), input_error);

  std::istringstream truncated("3 2\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(truncated), input_error);
}

TEST_CASE("vertex removal with id remap") {
  Graph c5 = cycle_graph(5);
  Graph g = c5.without_vertex(2);
  CHECK(g.vertex_count() == 4);
  // remaining cycle edges: (0,1), (3,4)->(2,3), (4,0)->(3,0)
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {2, 3}});
}
