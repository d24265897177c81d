#include <doctest.h>

#include <random>

#include "graphoid/errors.hpp"
#include "graphoid/multigraph.hpp"

using namespace graphoid;

namespace {

Multigraph path(int n) {  // n vertices, n-1 edges
  Multigraph g;
  g.vertex_count = n;
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Multigraph cycle(int n) {
  Multigraph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Multigraph bouquet(int loops) {
  Multigraph g;
  g.add_vertex();
  for (int i = 0; i < loops; ++i) g.add_edge(0, 0);
  return g;
}

Multigraph theta_graph() {
  Multigraph g;
  g.vertex_count = 2;
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  return g;
}

Multigraph random_graph(std::mt19937& rng, int max_v, int max_e) {
  Multigraph g;
  g.vertex_count = 1 + static_cast<int>(rng() % max_v);
  int m = static_cast<int>(rng() % (max_e + 1));
  for (int i = 0; i < m; ++i)
    g.add_edge(static_cast<int>(rng() % g.vertex_count), static_cast<int>(rng() % g.vertex_count));
  return g;
}

}  // namespace

TEST_SUITE("multigraph") {
  TEST_CASE("betti numbers") {
    CHECK(betti0(Multigraph{}) == 0);
    CHECK(betti1(Multigraph{}) == 0);
    CHECK(betti0(path(4)) == 1);
    CHECK(betti1(path(4)) == 0);
    CHECK(betti1(cycle(5)) == 1);
    CHECK(betti1(theta_graph()) == 2);
    CHECK(betti1(bouquet(3)) == 3);
    Multigraph two = path(2);
    two.add_vertex();
    CHECK(betti0(two) == 2);
  }

  TEST_CASE("bridges in multigraphs") {
    CHECK(bridge_edges(path(3)) == std::vector<int>{0, 1});
    CHECK(bridge_edges(cycle(4)).empty());
    CHECK(bridge_edges(theta_graph()).empty());
    CHECK(bridge_edges(bouquet(2)).empty());
    // Two parallel edges are not bridges; the pendant edge is.
    Multigraph g;
    g.vertex_count = 3;
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    CHECK(bridge_edges(g) == std::vector<int>{2});
    // Barbell: two triangles joined by one edge.
    Multigraph barbell;
    barbell.vertex_count = 6;
    barbell.add_edge(0, 1);
    barbell.add_edge(1, 2);
    barbell.add_edge(2, 0);
    barbell.add_edge(3, 4);
    barbell.add_edge(4, 5);
    barbell.add_edge(5, 3);
    int bridge = barbell.add_edge(2, 3);
    CHECK(bridge_edges(barbell) == std::vector<int>{bridge});
  }

  TEST_CASE("contract and delete") {
    Multigraph g = theta_graph();
    Multigraph c = contracted(g, 0);
    CHECK(c.vertex_count == 1);
    CHECK(c.edge_count() == 2);
    CHECK(c.edges[0].first == c.edges[0].second);  // parallels became loops
    Multigraph d = deleted(g, 0);
    CHECK(d.vertex_count == 2);
    CHECK(d.edge_count() == 2);
  }

  TEST_CASE("flow polynomial base values") {
    CHECK(flow_poly_brute(Multigraph{}) == LaurentPoly(1));
    Multigraph pt;
    pt.add_vertex();
    CHECK(flow_poly_brute(pt) == LaurentPoly(-1));
    CHECK(flow_poly_brute(bouquet(1)) == sigma());
    CHECK(flow_poly_brute(bouquet(2)) == -(sigma().pow(2)));
    CHECK(flow_poly_brute(bouquet(3)) == sigma().pow(3));
    // A cycle evaluates like a single circle.
    CHECK(flow_poly_brute(cycle(3)) == sigma());
    CHECK(flow_poly_brute(cycle(6)) == sigma());
    // theta graph: sigma - sigma^2
    CHECK(flow_poly_brute(theta_graph()) == sigma() - sigma().pow(2));
  }

  TEST_CASE("bridges kill the flow polynomial") {
    CHECK(flow_poly_brute(path(2)).is_zero());
    CHECK(flow_poly_brute(path(5)).is_zero());
    Multigraph g = cycle(4);
    g.add_vertex();
    g.add_edge(0, 4);
    CHECK(flow_poly_brute(g).is_zero());
  }

  TEST_CASE("disjoint extra vertex flips the sign") {
    Multigraph g = theta_graph();
    LaurentPoly h = flow_poly_brute(g);
    g.add_vertex();
    CHECK(flow_poly_brute(g) == -h);
  }

  TEST_CASE("deletion-contraction identity against brute force") {
    auto check_identity = [](const Multigraph& g, int e) {
      REQUIRE(g.edges[e].first != g.edges[e].second);
      CHECK(flow_poly_brute(g) == flow_poly_brute(contracted(g, e)) + flow_poly_brute(deleted(g, e)));
    };
    check_identity(theta_graph(), 1);
    check_identity(cycle(4), 2);
    Multigraph k4;
    k4.vertex_count = 4;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);
    check_identity(k4, 0);
  }

  TEST_CASE("two flow routes agree on random graphs") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
      Multigraph g = random_graph(rng, 6, 9);
      CHECK(flow_poly_brute(g) == flow_poly_dc(g));
    }
    // And on the named graphs.
    CHECK(flow_poly_dc(theta_graph()) == flow_poly_brute(theta_graph()));
    CHECK(flow_poly_dc(bouquet(4)) == flow_poly_brute(bouquet(4)));
    CHECK(flow_poly_dc(Multigraph{}) == LaurentPoly(1));
  }

  TEST_CASE("brute force honors its edge budget") {
    Multigraph g = bouquet(3);
    CHECK_THROWS_AS(flow_poly_brute(g, 2), BudgetExceeded);
  }
}
