#include "graphoid/moves.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "graphoid/closures.hpp"
#include "graphoid/errors.hpp"
#include "graphoid/laurent.hpp"
#include "graphoid/yamada.hpp"

using namespace graphoid;

namespace {

LaurentPoly R(const Diagram& d) { return yamada(d); }

int count_kind(const std::vector<MoveSite>& ms, MoveKind k) {
  int n = 0;
  for (const auto& m : ms) n += m.kind == k;
  return n;
}

std::string apply_code(const Diagram& d, const MoveSite& m) {
  try {
    apply_move(d, m);
  } catch (const GraphoidError& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_SUITE("moves") {
  TEST_CASE("kind names round-trip") {
    for (MoveKind k : all_moves()) {
      auto back = move_kind_from_name(move_kind_name(k));
      REQUIRE(back.has_value());
      CHECK(*back == k);
    }
    CHECK(!move_kind_from_name("R7").has_value());
    CHECK(rigid_moves().count(MoveKind::R6) == 0);
    CHECK(rigid_moves().size() == all_moves().size() - 1);
  }

  TEST_CASE("R1+ multiplies R by one fixed monomial per sense") {
    Diagram triv = fixtures::trivial_knotoid();
    LaurentPoly r0 = R(triv);
    auto sites = enumerate_moves(triv, {MoveKind::R1Plus});
    CHECK(sites.size() == 4);  // one edge, two sides, two over choices
    std::map<std::string, int> factors;
    for (const auto& m : sites) {
      Diagram kinked = apply_move(triv, m);
      CHECK(kinked.crossing_count() == 1);
      LaurentPoly r1 = R(kinked);
      for (int e : {2, -2})
        if (r1 == LaurentPoly::monomial(1, e) * r0) factors["A^" + std::to_string(e)]++;
    }
    CHECK(factors["A^2"] == 2);
    CHECK(factors["A^-2"] == 2);
  }

  TEST_CASE("R1- on the kink gives back the trivial knotoid") {
    Diagram kink = fixtures::kinked_knotoid();
    auto sites = enumerate_moves(kink, {MoveKind::R1Minus});
    REQUIRE(sites.size() == 1);
    Diagram flat = apply_move(kink, sites[0]);
    CHECK(flat.crossing_count() == 0);
    CHECK(isomorphic(flat, fixtures::trivial_knotoid()));
  }

  TEST_CASE("R1 round-trips: add then remove restores the diagram") {
    for (const Diagram& d : {fixtures::trivial_knotoid(), fixtures::theta_diagram()}) {
      for (const auto& m : enumerate_moves(d, {MoveKind::R1Plus})) {
        Diagram kinked = apply_move(d, m);
        bool restored = false;
        for (const auto& back : enumerate_moves(kinked, {MoveKind::R1Minus}))
          restored = restored || isomorphic(apply_move(kinked, back), d);
        CHECK(restored);
      }
    }
  }

  TEST_CASE("R2+ keeps R and round-trips through R2-") {
    Diagram th = fixtures::theta_diagram();
    LaurentPoly r0 = R(th);
    auto sites = enumerate_moves(th, {MoveKind::R2Plus});
    CHECK(sites.size() == 6);
    for (const auto& m : sites) {
      Diagram poked = apply_move(th, m);
      CHECK(poked.crossing_count() == 2);
      CHECK(ribbon_genus(poked) == 0);
      CHECK(R(poked) == r0);
      bool restored = false;
      for (const auto& back : enumerate_moves(poked, {MoveKind::R2Minus}))
        restored = restored || isomorphic(apply_move(poked, back), th);
      CHECK(restored);
    }
  }

  TEST_CASE("R2- reduces the underpass-closed pierced circle and keeps R") {
    Diagram d = underpass_closure(fixtures::pierced_circle());
    REQUIRE(d.crossing_count() >= 2);
    auto sites = enumerate_moves(d, {MoveKind::R2Minus});
    REQUIRE(!sites.empty());
    LaurentPoly r0 = R(d);
    for (const auto& m : sites) {
      Diagram reduced = apply_move(d, m);
      CHECK(reduced.crossing_count() == d.crossing_count() - 2);
      CHECK(R(reduced) == r0);
    }
  }

  TEST_CASE("R2- never fires on alternating bigons") {
    // Hopf link: both bigon faces alternate over/under, so no R2- applies.
    Diagram hopf =
        DiagramBuilder().crossing("a", "d", "b", "c").crossing("b", "c", "a", "d").build();
    REQUIRE(hopf.crossing_count() == 2);
    CHECK(enumerate_moves(hopf, {MoveKind::R2Minus}).empty());
    CHECK(apply_code(hopf, {MoveKind::R2Minus, {0}}) == "move_inapplicable");
  }

  TEST_CASE("R3 slides on both triangle faces, preserving R") {
    Diagram d = fixtures::r3_ready();
    REQUIRE(d.crossing_count() == 3);
    CHECK(R(d) == LaurentPoly::monomial(1, 2) * sigma());  // unknot with one curl
    auto sites = enumerate_moves(d, {MoveKind::R3});
    CHECK(sites.size() == 4);  // two slides on the inner triangle, two on the outer
    for (const auto& m : sites) {
      Diagram slid = apply_move(d, m);
      CHECK(slid.crossing_count() == 3);
      CHECK(ribbon_genus(slid) == 0);
      CHECK(R(slid) == R(d));
      bool back = false;
      for (const auto& inv : enumerate_moves(slid, {MoveKind::R3}))
        back = back || isomorphic(apply_move(slid, inv), d);
      CHECK(back);
    }
  }

  TEST_CASE("R4 slides a strand across a flat vertex") {
    Diagram d = fixtures::r4_fan();
    REQUIRE(d.crossing_count() == 2);
    LaurentPoly r0 = R(d);
    auto sites = enumerate_moves(d, {MoveKind::R4});
    CHECK(sites.size() == 3);
    for (const auto& m : sites) {
      Diagram slid = apply_move(d, m);
      int width = m.args[2], degree = 4;
      CHECK(slid.crossing_count() == d.crossing_count() - width + (degree - width));
      CHECK(ribbon_genus(slid) == 0);
      CHECK(R(slid) == r0);
      bool back = false;
      for (const auto& inv : enumerate_moves(slid, {MoveKind::R4}))
        back = back || isomorphic(apply_move(slid, inv), d);
      CHECK(back);
    }
  }

  TEST_CASE("R5 detaches a ring crossing every leg of a vertex") {
    Diagram belted = fixtures::belted_theta();
    REQUIRE(belted.crossing_count() == 3);
    CHECK(ribbon_genus(belted) == 0);
    Diagram beside =
        DiagramBuilder().vertex({"a", "b", "c"}).vertex({"c", "b", "a"}).circle().build();
    LaurentPoly frozen = LaurentPoly::monomial(-1, -3) + LaurentPoly::monomial(-2, -2) +
                         LaurentPoly::monomial(-4, -1) + LaurentPoly(-4) +
                         LaurentPoly::monomial(-4, 1) + LaurentPoly::monomial(-2, 2) +
                         LaurentPoly::monomial(-1, 3);
    CHECK(R(belted) == frozen);
    CHECK(R(beside) == frozen);
    CHECK(R(beside) == sigma() * R(fixtures::theta_diagram()));
    auto sites = enumerate_moves(belted, {MoveKind::R5});
    int detaches = 0;
    for (const auto& m : sites) {
      if (m.args.size() != 2) continue;
      ++detaches;
      Diagram off = apply_move(belted, m);
      CHECK(off.crossing_count() == 0);
      CHECK(isomorphic(off, beside));
    }
    // The closed ring window starts at any of the three slots of either
    // vertex: the ring slides off both ways.
    CHECK(detaches == 6);
  }

  TEST_CASE("R5 weaves an edge across a vertex and inverts by detaching") {
    Diagram d = fixtures::r4_fan();
    LaurentPoly r0 = R(d);
    auto sites = enumerate_moves(d, {MoveKind::R5});
    REQUIRE(!sites.empty());
    for (const auto& m : sites) {
      REQUIRE(m.args.size() == 5);  // the fan has no fully crossed vertex
      Diagram woven = apply_move(d, m);
      CHECK(woven.crossing_count() == d.crossing_count() + 4);
      CHECK(ribbon_genus(woven) == ribbon_genus(d));
      CHECK(R(woven) == r0);
      bool back = false;
      for (const auto& inv : enumerate_moves(woven, {MoveKind::R5}))
        if (inv.args.size() == 2) back = back || isomorphic(apply_move(woven, inv), d);
      CHECK(back);
    }
  }

  TEST_CASE("R5 weave descriptions from either end of the edge agree") {
    Diagram d = fixtures::r4_fan();
    for (const auto& m : enumerate_moves(d, {MoveKind::R5})) {
      if (m.args.size() != 5 || m.args[2] != 0) continue;
      MoveSite mirror{MoveKind::R5, {m.args[0], m.args[1], 1, m.args[3], d.theta(m.args[4])}};
      CHECK(isomorphic(apply_move(d, m), apply_move(d, mirror)));
    }
  }

  TEST_CASE("R6 twists keep R at trivalent vertices and invert themselves") {
    Diagram th = fixtures::theta_diagram();
    LaurentPoly r0 = R(th);
    auto sites = enumerate_moves(th, {MoveKind::R6});
    CHECK(sites.size() == 6);
    for (const auto& m : sites) {
      Diagram tw = apply_move(th, m);
      CHECK(R(tw) == r0);
      CHECK(!isomorphic(tw, th));
      CHECK(isomorphic(apply_move(tw, m), th));
    }
    // Twisting one theta vertex makes both rotations agree up to rotation:
    // the result only embeds in the torus, so the twist left the rigid class.
    CHECK(ribbon_genus(apply_move(th, sites[0])) == 1);
  }

  TEST_CASE("R5/R6 stay away from endpoints and crossings") {
    Diagram kn = fixtures::trivial_knotoid();   // head, tail, no flat vertex
    CHECK(enumerate_moves(kn, {MoveKind::R5}).empty());
    CHECK(enumerate_moves(kn, {MoveKind::R6}).empty());
    Diagram circ = fixtures::circle();          // lone circle: no other edge
    CHECK(enumerate_moves(circ, {MoveKind::R5}).empty());
    Diagram tref = fixtures::trefoil();         // crossings only
    CHECK(enumerate_moves(tref, {MoveKind::R6}).empty());
    CHECK(apply_code(tref, {MoveKind::R5, {0, 0}}) == "move_inapplicable");
    // A leg of the vertex cannot be woven across that same vertex.
    Diagram fan = fixtures::r4_fan();
    CHECK(apply_code(fan, {MoveKind::R5, {0, 0, 1, 0, 0}}) == "move_inapplicable");
  }

  TEST_CASE("moves never change the endpoint count") {
    Diagram d = fixtures::trefoil_knotoid();
    for (const auto& m : enumerate_moves(d)) {
      Diagram next = apply_move(d, m);
      CHECK(next.endpoint_count() == d.endpoint_count());
    }
  }

  TEST_CASE("bad sites raise move_inapplicable") {
    Diagram th = fixtures::theta_diagram();
    CHECK(apply_code(th, {MoveKind::R1Minus, {0, 0}}) == "move_inapplicable");
    CHECK(apply_code(th, {MoveKind::R2Minus, {0}}) == "move_inapplicable");
    CHECK(apply_code(th, {MoveKind::R3, {0}}) == "move_inapplicable");
    CHECK(apply_code(th, {MoveKind::R4, {0, 0, 1}}) == "move_inapplicable");
    CHECK(apply_code(th, {MoveKind::R6, {0, 99}}) == "move_inapplicable");
    CHECK(apply_code(th, {MoveKind::R5, {7}}) == "move_inapplicable");
  }

  TEST_CASE("every enumerated move applies cleanly and keeps R up to the R1 unit") {
    for (Diagram d : {fixtures::theta_diagram(), fixtures::r4_fan(), fixtures::r3_ready(),
                      fixtures::trefoil_knotoid()}) {
      LaurentPoly r0 = R(d);
      for (const auto& m : enumerate_moves(d)) {
        Diagram next = apply_move(d, m);
        LaurentPoly r1 = R(next);
        if (m.kind == MoveKind::R1Plus || m.kind == MoveKind::R1Minus) {
          bool unit = r1 == LaurentPoly::monomial(1, 2) * r0 ||
                      r1 == LaurentPoly::monomial(1, -2) * r0;
          CHECK(unit);
        } else {
          CHECK(r1 == r0);
        }
      }
    }
  }

  TEST_CASE("search: kink reduces to the trivial knotoid with a replayable path") {
    auto res = search_equivalent(fixtures::kinked_knotoid(), fixtures::trivial_knotoid());
    REQUIRE(res.verdict == EquivVerdict::Equivalent);
    REQUIRE(res.path.size() == 1);
    CHECK(res.path[0].kind == MoveKind::R1Minus);
    Diagram replay = apply_move(fixtures::kinked_knotoid(), res.path[0]);
    CHECK(isomorphic(replay, fixtures::trivial_knotoid()));
  }

  TEST_CASE("search: scrambled diagrams are reconnected and paths replay") {
    Diagram d = fixtures::r4_fan();
    Diagram s = d;
    for (MoveKind step : {MoveKind::R6, MoveKind::R4}) {
      auto options = enumerate_moves(s, {step});
      REQUIRE(!options.empty());
      s = apply_move(s, options.back());
    }
    REQUIRE(!isomorphic(s, d));
    auto res = search_equivalent(d, s);
    REQUIRE(res.verdict == EquivVerdict::Equivalent);
    CHECK(!res.path.empty());
    Diagram cur = d;
    for (const auto& m : res.path) cur = apply_move(cur, m);
    CHECK(isomorphic(cur, s));
  }

  TEST_CASE("rigid moves keep each rotation's cyclic class; R6 breaks it") {
    // r4_fan's flat vertex carries a strand that leaves and re-enters on
    // rotation-adjacent slots.  Rigid moves never edit a rotation list, so
    // they preserve that adjacency (following strands straight through any
    // crossings); the right vertex twist separates the ends around the
    // rotation while keeping the polynomial.
    auto strand_end = [](const Diagram& d, int h) {
      int cur = d.theta(h);
      while (d.site(d.site_of(cur)).kind == SiteKind::Crossing) {
        const Site& c = d.site(d.site_of(cur));
        cur = d.theta(c.rot[(d.slot_of(cur) + 2) % 4]);
      }
      return cur;
    };
    auto loop_adjacent = [&](const Diagram& d) {
      for (int s = 0; s < d.site_count(); ++s) {
        const Site& st = d.site(s);
        if (st.kind != SiteKind::Vertex || st.degree() < 3) continue;
        int k = st.degree();
        for (int i = 0; i < k; ++i) {
          int end = strand_end(d, st.rot[i]);
          for (int j = 0; j < k; ++j)
            if (i != j && end == st.rot[j])
              return (j - i + k) % k == 1 || (i - j + k) % k == 1;
        }
        return false;  // vertex lost its returning strand entirely
      }
      return false;
    };
    Diagram d = fixtures::r4_fan();
    REQUIRE(loop_adjacent(d));
    for (const auto& m : enumerate_moves(d, rigid_moves()))
      CHECK(loop_adjacent(apply_move(d, m)));
    Diagram tw = apply_move(d, {MoveKind::R6, {0, 1}});
    CHECK(!loop_adjacent(tw));
    CHECK(R(tw) == R(d));
  }

  TEST_CASE("search: budget and exhaustion verdicts are distinct") {
    SearchOptions tiny;
    tiny.max_steps = 40;
    auto budget = search_equivalent(fixtures::trefoil(), fixtures::kinked_knotoid(), tiny);
    CHECK(budget.verdict == EquivVerdict::NotFoundBudget);

    // No move changes endpoint parity, so circle vs knotoid exhausts the
    // reachable class under a tight crossing ceiling.
    SearchOptions low;
    low.max_crossings = 1;
    auto exhausted = search_equivalent(fixtures::circle(), fixtures::trivial_knotoid(), low);
    CHECK(exhausted.verdict == EquivVerdict::NotFoundExhausted);
  }
}
