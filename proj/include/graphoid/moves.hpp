#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "graphoid/diagram.hpp"

namespace graphoid {

// Local rewrite moves.  R1..R3 are the classical crossing moves.  R4 slides a
// strand past a flat vertex, trading a crossed rotation window for its
// complement.  R5 is the rigid vertex move: the whole vertex passes through a
// strand, so a strand crossing every leg uniformly (all over or all under)
// detaches to run beside the vertex, and conversely a strand sharing a face
// corner with the vertex can be pushed across all of its legs.  R1..R5 never
// touch any rotation list, so rigid equivalence preserves each vertex
// rotation's cyclic class.  R6 (the pliable vertex twist) instead transposes
// two adjacent rotation entries: the dragged half-twist is made of virtual
// crossings with no representation in the abstract encoding, so the twist is
// exactly the transposition, and it may change the realized genus.
// Patterns never involve Head/Tail/Free sites, so the forbidden endpoint
// moves are not expressible.
enum class MoveKind { R1Plus, R1Minus, R2Plus, R2Minus, R3, R4, R5, R6 };

const char* move_kind_name(MoveKind k);
std::optional<MoveKind> move_kind_from_name(const std::string& name);

// args by kind:
//   R1+  {edge, side 0/1, over 0/1}     kink inserted on the edge
//   R1-  {crossing, slot}               loop pair at rotation slots k, k+1
//   R2+  {half_a, half_b, a_over 0/1}   both halves on one face, edges differ
//   R2-  {half}                         bigon face walk starting at half
//   R3   {half}                         triangle face walk; edge(next half)
//                                       is the strand that slides
//   R4   {vertex, start slot, width}    slide the strand crossing the given
//                                       rotation window to the other side
//   R5   {vertex, start slot}           detach: a strand crossing all k legs
//                                       (window read from the start slot)
//                                       re-routes to run beside the vertex
//   R5   {vertex, corner, orient 0/1,   insert: cut the half-edge's edge and
//         over 0/1, half}               weave it across every leg, entering
//                                       at the face corner (corner j sits
//                                       between rotation slots j and j+1;
//                                       orient 0 wraps against the rotation,
//                                       1 with it)
//   R6   {vertex, slot}                 twist: swap rotation entries at
//                                       slot, slot+1
struct MoveSite {
  MoveKind kind;
  std::vector<int> args;
};

using MoveKindSet = std::set<MoveKind>;
const MoveKindSet& all_moves();
const MoveKindSet& rigid_moves();  // all but R6

std::vector<MoveSite> enumerate_moves(const Diagram& d, const MoveKindSet& kinds = all_moves());
Diagram apply_move(const Diagram& d, const MoveSite& m);

std::string move_site_text(const MoveSite& m);

enum class EquivVerdict { Equivalent, NotFoundExhausted, NotFoundBudget };
const char* equiv_verdict_name(EquivVerdict v);

struct SearchOptions {
  // Crossing ceiling; -1 means max crossing count of the endpoints plus the
  // headroom below.
  int max_crossings = -1;
  int crossing_headroom = 2;
  long long max_steps = 100000;  // move applications
  bool rigid = false;
};

struct EquivResult {
  EquivVerdict verdict = EquivVerdict::NotFoundExhausted;
  std::vector<MoveSite> path;  // replayable move script from the first input
  long long steps = 0;
  long long visited = 0;
};

// Breadth-first search over the move graph from d1 toward any diagram
// isomorphic to d2, deduplicating by canonical form.  A not-found verdict is
// not a proof of inequivalence.
EquivResult search_equivalent(const Diagram& d1, const Diagram& d2, SearchOptions opt = {});

}  // namespace graphoid
