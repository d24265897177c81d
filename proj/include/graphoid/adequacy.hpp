#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphoid/budget.hpp"
#include "graphoid/diagram.hpp"
#include "graphoid/multigraph.hpp"
#include "graphoid/yamada.hpp"

namespace graphoid {

// Three-valued outcome for the optional consistency checks: a check can fail
// only by exposing a bug, but it can also be out of reach (polynomial over
// budget, disconnected shadow, no valid checkerboard structure).
enum class CheckResult { Pass, Fail, NotApplicable };

const char* check_result_name(CheckResult c);

// ---- Marked extreme states ----

// The all-A (or all-B) state of the closed diagram, with the two subdivision
// vertices that every smoothing leaves behind kept in place and tagged: one
// vertex per smoothing arc, remembering which crossing it came from.
struct MarkedState {
  Diagram flat;                            // the state with its arc vertices
  Multigraph graph;                        // shadow multigraph (vertex = site)
  std::vector<int> crossings;              // crossing sites of the closed input
  std::vector<std::pair<int, int>> marks;  // per crossing: its two arc vertices
  int beta1 = 0;
};
// `which` must be Smoothing::A or Smoothing::B.  Open diagrams are closed
// virtually first; `crossings` then indexes the closed diagram.
MarkedState marked_state(const Diagram& d, Smoothing which);

// Bridges of a multigraph (loops never qualify; one of two parallel edges
// never qualifies).  Alias with this module's vocabulary.
std::vector<int> cut_edges(const Multigraph& g);

// Quotient of a state by its cut edges: one vertex per component of g minus
// its bridges, one edge per bridge with the induced incidence.  Always a
// forest (possibly with isolated vertices).
struct BridgeQuotient {
  Multigraph f;
  std::vector<int> vertex_of;       // original vertex -> quotient vertex
  std::vector<int> bridge_of_edge;  // quotient edge -> original bridge edge id
};
BridgeQuotient build_f(const Multigraph& g);

// Crossings whose flip from the A-resolution (resp. B) to the X-resolution
// raises the first Betti number of the extreme state by exactly one.
// Returned as crossing site indices of the closed diagram, ascending.
std::vector<int> essential_crossings(const Diagram& d, Smoothing which);

// Count, per first Betti number k, the subgraphs that contain all of `f`,
// use any subset of the `added` edges, and have no cut edges.  Enumerates
// the 2^|added| subsets; throws budget_exceeded above max_added.
std::map<int, long long> subgraph_counts(const Multigraph& f,
                                         const std::vector<std::pair<int, int>>& added,
                                         int max_added = 20);

// ---- The adequacy report ----

struct AdequacyReport {
  bool closed_first = false;  // input was open and analysed via virtual closure
  int crossings = 0;
  int beta1_state_a = 0, beta1_state_b = 0;
  std::vector<int> essential_a, essential_b;
  std::map<int, long long> a_counts, b_counts;
  // The verdict sums are alternating: sum over k of (-1)^k * count_k.  The
  // plain sums are reported alongside.
  long long alt_sum_a = 0, alt_sum_b = 0;
  long long plain_sum_a = 0, plain_sum_b = 0;
  bool a_adequate = false, b_adequate = false, adequate = false;
  // Euler characteristic and first Betti number of the underlying graph of
  // the closed diagram (crossings dissolved).
  int chi_graph = 0;
  int beta1_graph = 0;
  // Polynomial-backed checks, NotApplicable when R is out of budget:
  //  - extreme coefficients: coeff at c + beta1(S_A) must be
  //    (-1)^{chi} * alt_sum_a, and coeff at -(c + beta1(S_B)) must be
  //    (-1)^{chi} * alt_sum_b (only claimed for adequate diagrams);
  //  - span identity (adequate diagrams): span = 2c + beta1(S_A) + beta1(S_B).
  bool poly_computed = false;
  CheckResult extreme_coeff_check = CheckResult::NotApplicable;
  CheckResult span_identity = CheckResult::NotApplicable;
  int span = 0, expected_span = 0;
  // Nontriviality certificate: adequate and span > 2 * beta1_graph.
  bool nontrivial = false;
};
AdequacyReport adequacy_report(const Diagram& d, const Budget& budget = Budget::from_env());

// ---- Dual graph of the face structure ----

// Vertices of the dual are the faces of the (closed) diagram; every crossing
// contributes two edges, each joining the two opposite corner faces that one
// of its smoothings would merge.  s_hat is the component count of the dual.
struct DualReport {
  int faces = 0;
  Multigraph dual;
  int s_hat = 0;
  bool shadow_connected = true;
  int chi_surface = 0;  // Euler characteristic of the ribbon surface
  int chi_graph = 0;
  int beta1_graph = 0;
  int beta1_state_a = 0, beta1_state_b = 0;
  // For connected shadows: s_hat <= beta1_graph + chi_surface - 1.
  CheckResult component_bound = CheckResult::NotApplicable;
  // For connected shadows: beta1(S_A) + beta1(S_B) <=
  //   s_hat - chi_graph + crossings - chi_surface + 2.
  CheckResult state_betti_bound = CheckResult::NotApplicable;
};
DualReport dual_graph_report(const Diagram& d);

// ---- Checkerboard bound ----

// Augments the closed diagram with o(G)/2 face-respecting edges to make every
// flat vertex even, 2-colors the faces, and checks that every crossing's
// over/under decoration matches the coloring (the corner pair its A-smoothing
// covers is the same color at every crossing of a connected component).  When
// all of that holds the report carries the resulting lower bound on
// beta1(S_A) + beta1(S_B) and the crossing-gap bound
//   c(D) - c(G) <= (s_hat + o/2 - 2*chi + 2) / 3,
// with this diagram's s_hat standing in for the shadow maximum (surrogate).
struct CheckerboardReport {
  CheckResult verdict = CheckResult::NotApplicable;  // Pass = structure found
  std::string reason;                                // set when NotApplicable
  int odd_vertices = 0;
  std::vector<std::pair<int, int>> augmentation;  // vertex site pairs added
  bool eulerian = false;
  bool two_colorable = false;
  bool decorations_follow = false;
  int chi_surface = 0;
  int crossings = 0;
  int lower_bound = 0;  // on beta1(S_A) + beta1(S_B)
  int beta1_sum = 0;
  bool bound_holds = false;
  int s_hat_surrogate = 0;
  int gap_bound_numerator = 0;  // bound = numerator / 3
};
// `augment` empty means search all pairings of odd vertices through shared
// faces (requires o(G) <= max_odd); explicit pairs are routed through the
// first shared face found.
CheckerboardReport checkerboard_bound(const Diagram& d,
                                      const std::vector<std::pair<int, int>>& augment = {},
                                      int max_odd = 8);

}  // namespace graphoid
