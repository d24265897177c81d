#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphoid/budget.hpp"
#include "graphoid/diagram.hpp"
#include "graphoid/laurent.hpp"

namespace graphoid {

// Crossing resolutions.  With the crossing's over strand occupying slots
// (i, i+2) of its counterclockwise rotation:
//   A joins each over half-edge to its counterclockwise successor,
//   B joins each over half-edge to its counterclockwise predecessor,
//   X forgets the over/under data and leaves a flat degree-4 vertex.
enum class Smoothing : uint8_t { A, B, X };

// List of crossing site indices, ascending; rho vectors are indexed by
// position in this list.
std::vector<int> crossing_sites(const Diagram& d);

// The flat diagram obtained by closing the open strand (when the diagram has
// endpoints) and applying one resolution per crossing.  A and B resolutions
// replace the crossing by two degree-2 vertices, one per smoothing arc; these
// subdivision vertices are recorded per crossing so state graphs can be
// marked.  The closure of a strand that touches no other site leaves a bare
// circle.
struct ResolvedState {
  Diagram flat;
  struct CrossingTrace {
    int crossing_site;  // site index in the input diagram
    Smoothing s;
    // For A/B: the two arc vertices in `flat`.  arc_a holds the arc made of
    // the over slot i and its joined neighbour; arc_b the opposite arc.  For
    // X: arc_a is the surviving flat vertex and arc_b is -1.
    int arc_a = -1;
    int arc_b = -1;
  };
  std::vector<CrossingTrace> traces;
  int a_count = 0, b_count = 0, x_count = 0;
};
ResolvedState resolve_state(const Diagram& d, const std::vector<Smoothing>& rho);

// Evaluation of a flat (crossingless, closed) state: the flow polynomial of
// its site graph.
LaurentPoly evaluate_flat_state(const Diagram& flat, const Budget& budget, bool brute_route);

struct YamadaOptions {
  enum class Route { Auto, StateSum, Skein };
  Route route = Route::Auto;
  Budget budget = Budget::from_env();
};

// Topological polynomial R(d) = sum over states of A^{a-b} H(state graph).
// The two routes compute it independently:
//  - state sum: all 3^c resolutions, each state evaluated by the 2^E subset
//    expansion of the flow polynomial;
//  - skein: one crossing expanded at a time with memoization on canonical
//    diagram forms, flat leaves evaluated by deletion-contraction.
LaurentPoly yamada_state_sum(const Diagram& d, const Budget& budget = Budget::from_env());
LaurentPoly yamada_skein(const Diagram& d, const Budget& budget = Budget::from_env());
LaurentPoly yamada(const Diagram& d, const YamadaOptions& options = {});

struct YamadaReport {
  LaurentPoly poly;
  std::string route;  // "statesum" or "skein"
  int crossings = 0;
  bool open = false;  // input had endpoints (closed virtually for evaluation)
  bool zero = false;
  int max_degree = 0, min_degree = 0, span = 0;  // meaningful when !zero
  // First Betti numbers of the two extreme states (after virtual closure).
  int beta1_all_a = 0;
  int beta1_all_b = 0;
  // Degree window: max deg <= crossings + beta1_all_a and
  //                min deg >= -(crossings + beta1_all_b).
  int upper_bound_max_degree = 0;
  int lower_bound_min_degree = 0;
  bool degree_bounds_hold = true;
  // First Betti number of the underlying graph (crossings dissolved), both
  // for the input as given and for its virtual closure.
  int beta1_underlying_open = 0;
  int beta1_underlying_closed = 0;
  // ceil((span - 2*beta1_underlying_closed) / 3), clamped at 0: a lower bound
  // for the crossing number of any diagram of the same object.
  int crossing_lower_bound = 0;
  // Set when the bound exceeds the diagram's own crossing count (possible for
  // open diagrams read without closure; surfaced, never silently clamped).
  bool crossing_bound_exceeds_diagram = false;
};
YamadaReport yamada_report(const Diagram& d, const YamadaOptions& options = {});

}  // namespace graphoid
