#include <algorithm>
#include <set>

#include "doctest.h"
#include "geocongest/ensembles.hpp"
#include "geocongest/metrics.hpp"
#include "oracles.hpp"

using namespace geocongest;

TEST_CASE("erdos-renyi extremes") {
  CHECK(gen_er(4, 1.0, 1).size() == 6);
  CHECK(gen_er(4, 0.0, 1).size() == 0);
  CHECK_THROWS_AS(gen_er(4, 1.5, 1), Error);
  CHECK_THROWS_AS(gen_er(4, -0.1, 1), Error);
}

TEST_CASE("erdos-renyi edge density") {
  const Graph g = gen_er(400, 0.05, 3);
  const double expected = 0.05 * 400 * 399 / 2;
  CHECK(static_cast<double>(g.size()) == doctest::Approx(expected).epsilon(0.06));
}

TEST_CASE("erdos-renyi above threshold is connected") {
  int connected = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) connected += is_connected(gen_er(1000, {}, seed));
  CHECK(connected >= 48);
}

TEST_CASE("geometric graph basics") {
  Points p(2, 2);
  p << 0, 1,
       0, 1;
  CHECK(rgg_from_points(p, 1.5).size() == 1);
  CHECK(rgg_from_points(p, 1.0).size() == 0);
  CHECK(gen_rgg(50, 0.0, 1).size() == 0);
  CHECK_THROWS_AS(gen_rgg(50, -1.0, 1), Error);
}

TEST_CASE("geometric graph matches brute force") {
  const Graph g = gen_rgg(300, 0.1, 7);
  REQUIRE(g.coords().has_value());
  const auto& c = *g.coords();
  std::size_t expected = 0;
  for (Eigen::Index i = 0; i < c.cols(); ++i) {
    CHECK(c(0, i) >= 0.0);
    CHECK(c(0, i) <= 1.0);
    for (Eigen::Index j = i + 1; j < c.cols(); ++j) {
      const bool near = (c.col(i) - c.col(j)).norm() <= 0.1;
      expected += near;
      CHECK(g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) == near);
    }
  }
  CHECK(g.size() == expected);
}

TEST_CASE("geometric graph above threshold is connected") {
  int connected = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) connected += is_connected(gen_rgg(1000, {}, seed));
  CHECK(connected >= 48);
}

TEST_CASE("random regular graphs") {
  const Graph c = gen_random_regular(5, 2, 4);
  CHECK(c.max_degree() <= 2);
  // cycles of the permutation; a 2-cycle collapses to one edge
  const Components parts = connected_components(c);
  for (Vertex v = 0; v < 5; ++v) {
    if (c.degree(v) == 1) {
      CHECK(std::count(parts.label.begin(), parts.label.end(), parts.label[v]) == 2);
    }
  }
  CHECK(c.size() <= 5);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gen_random_regular(1000, 6, seed);
    CHECK(g.max_degree() <= 6);
    CHECK(degree_histogram(g).mean >= 5.9);
  }
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::IoError;
  };
  CHECK(code_of([] { gen_random_regular(10, 3, 1); }) == ErrorCode::OddDegree);
  CHECK(code_of([] { gen_random_regular(3, 4, 1); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("bethe lattices") {
  const Graph star = gen_bethe(3, 1);
  CHECK(star.order() == 4);
  CHECK(star.degree(0) == 3);
  const Graph g = gen_bethe(3, 2);
  CHECK(g.order() == 10);
  CHECK(g.size() == 9);
  CHECK(bethe_order(6, 3) == 187);
  CHECK(gen_bethe(6, 3).order() == 187);
  CHECK(gen_bethe(4, 0).order() == 1);
  const Graph h = gen_bethe(4, 3);
  CHECK(is_connected(h));
  for (Vertex v = 0; v < h.order(); ++v) {
    CHECK((h.degree(v) == 4 || h.degree(v) == 1));
  }
  // leaves sit at the given depth
  const auto d = oracle::bfs(h, 0);
  for (Vertex v = 0; v < h.order(); ++v) {
    if (h.degree(v) == 1) CHECK(d[v] == 3);
  }
}

TEST_CASE("complete graphs") {
  CHECK(gen_complete(1).size() == 0);
  CHECK(gen_complete(4).size() == 6);
  const Graph k10 = gen_complete(10);
  CHECK(k10.size() == 45);
  for (const auto& row : oracle::all_bfs(k10)) CHECK(*std::max_element(row.begin(), row.end()) == 1);
}

TEST_CASE("matching augmentation") {
  CHECK(add_random_matching(gen_complete(4), 1).edges() == gen_complete(4).edges());

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph m = add_random_matching(Graph(4), seed);
    CHECK(m.size() == 2);
    CHECK(m.max_degree() == 1);
  }

  const Graph path = Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(add_random_matching(path, seed).size() <= 3);
  }

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = gen_er(101, 0.05, seed);
    const Graph h = add_random_matching(g, seed, 1);
    const auto before = g.edges();
    std::set<Edge> old(before.begin(), before.end());
    std::set<Vertex> touched;
    std::size_t added = 0;
    for (const Edge& e : h.edges()) {
      if (old.count(e)) continue;
      ++added;
      CHECK(touched.insert(e.u).second);
      CHECK(touched.insert(e.v).second);
    }
    for (const Edge& e : before) CHECK(h.has_edge(e.u, e.v));
    CHECK(added <= 50);
    for (Vertex v = 0; v < g.order(); ++v) CHECK(h.degree(v) <= g.degree(v) + 1);
  }
}

TEST_CASE("matching augmentation is seeded") {
  const Graph g = gen_bethe(3, 4);
  CHECK(add_random_matching(g, 5).edges() == add_random_matching(g, 5).edges());
  CHECK(add_random_matching(g, 5).edges() != add_random_matching(g, 5, 1).edges());
}

TEST_CASE("graph construction") {
  const Graph g = Graph::from_edges(4, std::vector<Edge>{{1, 0}, {0, 1}, {2, 2}, {3, 1}});
  CHECK(g.size() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(3, 1));
  CHECK_FALSE(g.has_edge(2, 2));
  CHECK(g.slot(0, 3) == g.directed_edge_count());
  CHECK(g.target(g.slot(1, 3)) == 3);
  CHECK_THROWS_AS(Graph::from_edges(2, std::vector<Edge>{{0, 2}}), Error);

  const Components c = connected_components(g);
  CHECK(c.count == 2);
  const Subgraph s = largest_component(g);
  CHECK(s.graph.order() == 3);
  CHECK(s.original == std::vector<Vertex>{0, 1, 3});
}
