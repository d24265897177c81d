#pragma once

#include "graphoid/budget.hpp"
#include "graphoid/diagram.hpp"
#include "graphoid/laurent.hpp"

namespace graphoid {

// Marked-edge expansion of a crossingless diagram.  Every edge is either
// deleted or marked (two unit-coefficient branches); a fully marked diagram D
// evaluates to (-1)^{bc(D)} (A + A^{-1} + 2)^{bc(D) - k(D)} where bc counts
// the boundary components of the ribbon spanned by the marked edges and
// k = beta_0 of D (isolated sites included).  On planar rotation systems this
// reproduces the flow-polynomial evaluation used by the state sum; rotations
// carrying genus lower bc and change the value.
LaurentPoly marked_expansion(const Diagram& flat, const Budget& budget = Budget::from_env());

// Generalized polynomial: open strands are closed exactly as in the state
// sum, crossings are resolved three ways with weights A, A^{-1}, 1, each flat
// state is evaluated by the marked-edge expansion, and the total carries one
// factor -1 per open strand of the input.  Base values pinned by tests:
// trivial knotoid -> -A - 1 - A^{-1}, lone vertex -> -1, empty diagram -> 1.
LaurentPoly gyamada(const Diagram& d, const Budget& budget = Budget::from_env());

// Non-classicality certificate.  The state-sum polynomial never sees the
// rotation system, the marked expansion does, and the two agree on any
// diagram drawable in the plane (after the same -1-per-open-strand unit), so
// a difference certifies that no planar drawing of the same diagram data
// exists.  Equality certifies nothing.
struct NonclassicalityReport {
  LaurentPoly state_sum;   // rotation-blind polynomial
  LaurentPoly marked;      // generalized polynomial
  int open_strands = 0;
  LaurentPoly calibrated;  // (-1)^{open strands} * state_sum
  bool certified = false;  // marked != calibrated
};
NonclassicalityReport nonclassicality_test(const Diagram& d,
                                           const Budget& budget = Budget::from_env());

}  // namespace graphoid
