#include <doctest.h>

#include "fixtures.hpp"
#include "graphoid/errors.hpp"
#include "graphoid/yamada.hpp"

using namespace graphoid;

namespace {

LaurentPoly R(const Diagram& d) { return yamada(d); }

Diagram rose(int n) {
  DiagramBuilder b;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    std::string l = "l" + std::to_string(i);
    labels.push_back(l);
    labels.push_back(l);
  }
  return b.vertex(labels).build();
}

Diagram lone_vertex() { return Diagram({Site{}}, {}); }

}  // namespace

TEST_SUITE("yamada") {
  TEST_CASE("resolve_state mechanics") {
    // Kink, A-state: both smoothing arcs close into bare circles.
    Diagram k = fixtures::kinked_knotoid();
    ResolvedState a = resolve_state(k, {Smoothing::A});
    CHECK(a.a_count == 1);
    CHECK(a.flat.crossing_count() == 0);
    Multigraph ga = shadow_graph(normalized(a.flat));
    CHECK(ga.vertex_count == 2);
    CHECK(ga.edge_count() == 2);
    CHECK(betti0(ga) == 2);
    // B-state: a two-vertex cycle.
    ResolvedState bst = resolve_state(k, {Smoothing::B});
    Multigraph gb = shadow_graph(bst.flat);
    CHECK(betti0(gb) == 1);
    CHECK(betti1(gb) == 1);
    // X-state: flat vertex carrying two loops.
    ResolvedState x = resolve_state(k, {Smoothing::X});
    Multigraph gx = shadow_graph(normalized(x.flat));
    CHECK(gx.vertex_count == 1);
    CHECK(gx.edge_count() == 2);
    // Traces point at the arc vertices.
    REQUIRE(a.traces.size() == 1);
    CHECK(a.traces[0].arc_a != -1);
    CHECK(a.traces[0].arc_b != -1);
    CHECK(a.flat.site(a.traces[0].arc_a).degree() == 2);
    CHECK(a.flat.site(a.traces[0].arc_b).degree() == 2);
  }

  TEST_CASE("flat base values") {
    CHECK(R(fixtures::circle()) == sigma());
    CHECK(R(fixtures::trivial_knotoid()) == sigma());
    CHECK(R(lone_vertex()) == LaurentPoly(-1));
    CHECK(R(rose(1)) == sigma());
    CHECK(R(rose(2)) == -sigma().pow(2));
    CHECK(R(rose(3)) == sigma().pow(3));
    CHECK(R(fixtures::theta_diagram()) == sigma() - sigma().pow(2));
    // The classical polynomial cannot see the ribbon genus of a flat vertex.
    CHECK(R(fixtures::interleaved_bouquet()) == R(rose(2)));
  }

  TEST_CASE("kink values pin the smoothing convention") {
    LaurentPoly expected = sigma().shifted(2);  // A^2 * sigma
    CHECK(yamada_state_sum(fixtures::kinked_knotoid()) == expected);
    CHECK(yamada_skein(fixtures::kinked_knotoid()) == expected);
    CHECK(R(crossing_switched(fixtures::kinked_knotoid())) == sigma().shifted(-2));
  }

  TEST_CASE("virtual hopf value") {
    CHECK(yamada_state_sum(fixtures::virtual_hopf()) == -sigma());
    CHECK(yamada_skein(fixtures::virtual_hopf()) == -sigma());
  }

  TEST_CASE("the two routes agree") {
    for (const Diagram& d :
         {fixtures::trefoil(), fixtures::trefoil_knotoid(), fixtures::kinked_knotoid(),
          fixtures::virtual_hopf(), fixtures::theta_diagram(), fixtures::circle()}) {
      CHECK(yamada_state_sum(d) == yamada_skein(d));
    }
  }

  TEST_CASE("trefoil degree data") {
    LaurentPoly r = R(fixtures::trefoil());
    CHECK(r.max_degree() == 5);
    CHECK(r.min_degree() == -6);
    CHECK(r.span() == 11);
    // A knotoid cut of the trefoil closes back to the same polynomial.
    CHECK(R(fixtures::trefoil_knotoid()) == r);
  }

  TEST_CASE("mirror covariance") {
    for (const Diagram& d :
         {fixtures::trefoil(), fixtures::trefoil_knotoid(), fixtures::virtual_hopf()}) {
      LaurentPoly r = R(d);
      CHECK(R(crossing_switched(d)) == r.mirrored());
      CHECK(R(reflected(d)) == r.mirrored());
    }
  }

  TEST_CASE("multiplicative over disjoint unions") {
    Diagram two = DiagramBuilder()
                      .crossing("e1", "e4", "e2", "e5")
                      .crossing("e3", "e6", "e4", "e1")
                      .crossing("e5", "e2", "e6", "e3")
                      .circle()
                      .build();
    CHECK(R(two) == sigma() * R(fixtures::trefoil()));
  }

  TEST_CASE("report fields") {
    YamadaReport rep = yamada_report(fixtures::trefoil());
    CHECK(rep.crossings == 3);
    CHECK(!rep.open);
    CHECK(!rep.zero);
    CHECK(rep.beta1_all_a == 2);
    CHECK(rep.beta1_all_b == 3);
    CHECK(rep.upper_bound_max_degree == 5);
    CHECK(rep.lower_bound_min_degree == -6);
    CHECK(rep.degree_bounds_hold);
    CHECK(rep.beta1_underlying_closed == 1);
    CHECK(rep.crossing_lower_bound == 3);
    CHECK(!rep.crossing_bound_exceeds_diagram);

    YamadaReport open = yamada_report(fixtures::trefoil_knotoid());
    CHECK(open.open);
    CHECK(open.beta1_underlying_open == 0);
    CHECK(open.beta1_underlying_closed == 1);
    CHECK(open.poly == rep.poly);
  }

  TEST_CASE("budget control and the route switch") {
    Budget tiny;
    tiny.statesum_max_crossings = 2;
    CHECK_THROWS_AS(yamada_state_sum(fixtures::trefoil(), tiny), BudgetExceeded);
    // Auto routing silently switches to the skein route instead.
    YamadaOptions opt;
    opt.budget = tiny;
    CHECK(yamada(fixtures::trefoil(), opt) == yamada_skein(fixtures::trefoil()));
    YamadaReport rep = yamada_report(fixtures::trefoil(), opt);
    CHECK(rep.route == "skein");
    Budget hard;
    hard.max_crossings = 2;
    CHECK_THROWS_AS(yamada_skein(fixtures::trefoil(), hard), BudgetExceeded);
  }

  TEST_CASE("endpoint discipline") {
    Diagram bad = DiagramBuilder().head("a").head("a").head("b").head("b").build(false);
    CHECK_THROWS_AS(yamada(bad), GraphoidError);
    // Two free ends close like head/tail.
    Diagram free_arc = DiagramBuilder().free_end("a").free_end("a").build(false);
    CHECK(R(free_arc) == sigma());
  }
}
