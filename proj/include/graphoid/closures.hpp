#pragma once

#include <vector>

#include "graphoid/diagram.hpp"

namespace graphoid {

class DiagramEditor;

enum class ClosureMode { Virtual, Under, Over };

const char* closure_mode_name(ClosureMode m);

// Editor-level primitive shared with the state-sum machinery: join the open
// strand's two endpoint sites (any endpoint kinds).  Zero endpoints is a
// no-op; any other count than two is an endpoint_mismatch error.
void close_endpoints(DiagramEditor& ed, const Diagram& d);

// Join Head to Tail by a direct arc.  In the abstract encoding the arc never
// needs to cross anything, so this is always defined and canonical.
// Errors: already_closed when the diagram has no endpoints.
Diagram virtual_closure(const Diagram& d);

// Join Head to Tail by a shortcut drawn in the plane: the shortcut follows a
// shortest path in the face-adjacency graph from the face at the Head to the
// face at the Tail, and every strand it meets becomes a new crossing with the
// shortcut underneath (Under) or on top (Over).  Ties between equally short
// routes are broken toward the lexicographically smallest face sequence, then
// the smallest crossed-edge id.
// Errors: already_closed (no endpoints), not_classical_planar (genus > 0).
Diagram close_diagram(const Diagram& d, ClosureMode m);
Diagram underpass_closure(const Diagram& d);
Diagram overpass_closure(const Diagram& d);

// Every shortest shortcut routing, deduplicated up to isomorphism.  Virtual
// mode yields the single virtual closure.  Throws budget_exceeded when more
// than max_routings raw routes exist.
std::vector<Diagram> closure_routings(const Diagram& d, ClosureMode m, int max_routings = 10000);

}  // namespace graphoid
