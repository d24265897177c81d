#pragma once

// Shared example diagrams for the test suite.

#include "graphoid/codec.hpp"
#include "graphoid/diagram.hpp"

namespace fixtures {

using graphoid::Diagram;
using graphoid::DiagramBuilder;

// One arc from tail to head, no crossings.
inline Diagram trivial_knotoid() {
  return DiagramBuilder().head("a").tail("a").build();
}

// A bare circle.
inline Diagram circle() { return DiagramBuilder().circle().build(); }

// Standard closed trefoil diagram (three alternating crossings, planar).
inline Diagram trefoil() {
  return DiagramBuilder()
      .crossing("e1", "e4", "e2", "e5")
      .crossing("e3", "e6", "e4", "e1")
      .crossing("e5", "e2", "e6", "e3")
      .build();
}

// Single crossing whose opposite slots are fused: the closed virtual
// Hopf-style diagram.  Genus 1; the classical state sum and the marked-edge
// expansion disagree on it.
inline Diagram virtual_hopf() {
  return DiagramBuilder().crossing("a", "b", "a", "b").build();
}

// Degree-4 flat vertex with two interleaved loops (rotation a,b,a,b): the
// non-planar bouquet.
inline Diagram interleaved_bouquet() {
  return DiagramBuilder().vertex({"a", "b", "a", "b"}).build();
}

// Degree-4 flat vertex with two nested loops (rotation a,a,b,b): planar.
inline Diagram planar_bouquet2() {
  return DiagramBuilder().vertex({"a", "a", "b", "b"}).build();
}

// Planar theta graph: two degree-3 vertices joined by three parallel edges.
inline Diagram theta_diagram() {
  return DiagramBuilder().vertex({"a", "b", "c"}).vertex({"c", "b", "a"}).build();
}

// Knotoid with one kink on the strand: tail --e1--> crossing with the loop e2
// occupying the adjacent slots 1 and 2, exit e3 --> head.
inline Diagram kinked_knotoid() {
  return DiagramBuilder().tail("e1").crossing("e1", "e2", "e2", "e3").head("e3").build();
}

// Open trefoil knotoid: trefoil with one strand cut (standard 3_1 knotoid).
inline Diagram trefoil_knotoid() {
  return DiagramBuilder()
      .tail("t")
      .crossing("t", "e4", "e2", "e5")
      .crossing("e3", "e6", "e4", "h")
      .crossing("e5", "e2", "e6", "e3")
      .head("h")
      .build();
}

// Open strand piercing a closed circle once: tail outside, head inside, the
// circle passing over.  Planar; head and tail live in different faces.
inline Diagram pierced_circle() {
  return DiagramBuilder().tail("t").crossing("t", "c", "h", "c").head("h").build();
}

// Circle C (arcs p, q, r between its three crossings) pierced once by the
// open strand at X, and crossed twice by a closed loop (chord c inside,
// return arc o outside) passing over C at Y and Z.  Head sits inside C on the
// far side of the chord; tail sits outside everything.  Two distinct
// one-crossing shortcut routes exist (through arc r or arc p).
inline Diagram lens_diagram() {
  return DiagramBuilder()
      .tail("t")
      .crossing("t", "p", "h", "r")   // X: strand under C
      .crossing("r", "c", "q", "o")   // Y: loop over C
      .crossing("q", "c", "p", "o")   // Z: loop over C
      .head("h")
      .build();
}

// Closed descending unknot diagram built from three straight strands in
// general position (pairwise heights constant), closed by three outer arcs.
// Its inner triangle admits exactly two strand slides: the topmost and the
// bottommost strand can each be pushed across the opposite crossing.
inline Diagram r3_ready() {
  return DiagramBuilder()
      .crossing("q", "nw", "ss", "p")  // bottom-left corner
      .crossing("r", "p", "ss", "en")  // bottom-right corner
      .crossing("nw", "q", "r", "en")  // top corner
      .build();
}

// Open strand passing over two consecutive edges (a, b) of a degree-4 flat
// vertex whose remaining two rotation slots form a loop c.  Edges a and b are
// tied together beyond their crossings by the arc n, so the whole picture is
// planar: tail - X_a - X_b - head with the vertex fan below the strand.
inline Diagram r4_fan() {
  return DiagramBuilder()
      .vertex({"a", "b", "c", "c"})
      .crossing("n", "m", "a", "t")  // X_a: strand over edge a
      .crossing("n", "h", "b", "m")  // X_b: strand over edge b
      .tail("t")
      .head("h")
      .build();
}

// Two degree-4 flat vertices joined by four parallel edges (a planar
// quadruple banana); the smallest loop-free testbed for degree-4 twists.
inline Diagram banana4() {
  return DiagramBuilder().vertex({"a", "b", "c", "d"}).vertex({"d", "c", "b", "a"}).build();
}

// Closed circle with one kink: the crossing's adjacent slots 1, 2 carry the
// loop b; the remainder closes through a degree-2 marker vertex.
inline Diagram kinked_circle() {
  return DiagramBuilder().crossing("a", "b", "b", "c").vertex({"c", "a"}).build();
}

// Planar alternating 2-crossing chain (the standard Hopf link diagram): two
// strands a*, b* run around an annulus and cross twice, over strands
// alternating.  Genus 0.
inline Diagram alternating_chain() {
  return DiagramBuilder()
      .crossing("a1", "a0", "b0", "b1")
      .crossing("a0", "a1", "b1", "b0")
      .build();
}

// Same closed 2-crossing chain with one over strand switched: the planar
// non-alternating variant (an R2 picture of the unlink).
inline Diagram uniform_chain() {
  return DiagramBuilder()
      .crossing("a1", "a0", "b0", "b1")
      .crossing("b0", "a0", "a1", "b1")
      .build();
}

// Theta graph with a free ring passing over all three legs of its first
// vertex (crossing chain c, b, a with the ring closed by the arc ss): one
// rigid vertex move slides the ring off either vertex.
inline Diagram belted_theta() {
  return DiagramBuilder()
      .vertex({"a0", "b0", "c0"})
      .crossing("c0", "m1", "c1", "ss")
      .crossing("b0", "m2", "b1", "m1")
      .crossing("a0", "ss", "a1", "m2")
      .vertex({"c1", "b1", "a1"})
      .build();
}

// Adequacy showcase: a theta graph whose parallel edges a*, b* climb a
// four-crossing alternating annular twist threaded by a free ring (the other
// annular strand), with the third edge e3 attached abstractly (genus 1).
// One crossing is essential on the A side; all four are essential on the B
// side and land as parallel edges, so the subgraph counts come out 1 and
// binomial(4, k).
inline Diagram ringed_theta() {
  return DiagramBuilder()
      .vertex({"a0l", "e3", "a0r"})
      .vertex({"b1l", "e3", "b1r"})
      .crossing("a3", "a0l", "b0", "b3")
      .crossing("a0r", "a1", "b1l", "b0")
      .crossing("a1", "a2", "b2", "b1r")
      .crossing("a2", "a3", "b3", "b2")
      .build();
}

inline Diagram from_gpd(const std::string& text) { return graphoid::parse_gpd(text); }

}  // namespace fixtures
