#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphoid/multigraph.hpp"

namespace graphoid {

// A diagram is a ribbon-graph structure: sites carrying cyclic (counter-
// clockwise) rotations of half-edges, plus a fixed-point-free pairing theta
// on the half-edges.  Over/under data lives only at crossings.
enum class SiteKind : uint8_t {
  Vertex,    // flat (rigid) vertex, any degree >= 0
  Crossing,  // degree 4; one opposite pair of slots passes over
  Head,      // degree 1, the distinguished outgoing endpoint
  Tail,      // degree 1, the distinguished incoming endpoint
  Free,      // degree 1, an unmarked endpoint (internal constructions only)
};

const char* site_kind_name(SiteKind k);

struct Site {
  SiteKind kind = SiteKind::Vertex;
  std::vector<int> rot;    // incident half-edges, counterclockwise
  bool over_even = false;  // crossings: the rot[0]/rot[2] strand is the over strand

  int degree() const { return static_cast<int>(rot.size()); }
};

struct ValidationIssue {
  std::string code;
  std::string message;
};

class Diagram {
public:
  Diagram() = default;
  // `pairing[h]` is the partner of half-edge h.  Half-edge ids must be exactly
  // 0..pairing.size()-1, each appearing in exactly one rotation slot, and the
  // pairing must be a fixed-point-free involution.  Structural violations
  // throw immediately; semantic rules are reported by validate().
  Diagram(std::vector<Site> sites, std::vector<int> pairing);

  int site_count() const { return static_cast<int>(sites_.size()); }
  const Site& site(int s) const { return sites_[s]; }
  const std::vector<Site>& sites() const { return sites_; }
  int half_edge_count() const { return static_cast<int>(theta_.size()); }
  int edge_count() const { return half_edge_count() / 2; }
  int theta(int h) const { return theta_[h]; }
  int site_of(int h) const { return site_of_[h]; }
  int slot_of(int h) const { return slot_of_[h]; }
  // Counterclockwise successor / predecessor around the site of h.
  int sigma_next(int h) const;
  int sigma_prev(int h) const;
  // True iff h sits at a crossing on its over strand.
  bool is_over(int h) const;

  int count_kind(SiteKind k) const;
  int crossing_count() const { return count_kind(SiteKind::Crossing); }
  int endpoint_count() const;
  int open_strand_count() const { return endpoint_count() / 2; }

  // Edges sorted by their smaller half-edge: edge e = (half_lo, half_hi).
  const std::vector<std::pair<int, int>>& edge_list() const { return edges_; }
  int edge_of_half(int h) const { return edge_of_half_[h]; }

  // Semantic validation.  With strict_endpoints the endpoint sites must be
  // either none at all or exactly one Head and one Tail (no Free ends).
  std::vector<ValidationIssue> validate(bool strict_endpoints = true) const;
  void require_valid(bool strict_endpoints = true) const;

  // Connected-component label per site (isolated sites get their own label).
  std::vector<int> site_components() const;
  int component_count() const;

private:
  std::vector<Site> sites_;
  std::vector<int> theta_;
  std::vector<int> site_of_, slot_of_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> edge_of_half_;
};

// ---- Ribbon structure ----

// Boundary walks of the ribbon surface.  A walk is a cyclic sequence of
// half-edges; the step after h is sigma_next(theta(h)).  Each degree-0 site
// contributes one extra boundary component beyond the listed walks.
struct Faces {
  std::vector<std::vector<int>> walks;
  std::vector<int> face_of_half;  // walk index per half-edge
  int isolated_sites = 0;
  int count() const { return static_cast<int>(walks.size()) + isolated_sites; }
};
Faces trace_faces(const Diagram& d);

// Boundary-component count of the spanning sub-ribbon keeping only the edges
// with edge_kept[e] true (rotations restrict accordingly; sites incident to
// no kept edge count one component each).
int boundary_component_count(const Diagram& d, const std::vector<char>& edge_kept);

// Euler characteristic of the closed surface obtained by capping every
// boundary walk: V - E + F.  Genus sums over connected components.
int euler_characteristic(const Diagram& d);
int ribbon_genus(const Diagram& d);
bool is_planar_ribbon(const Diagram& d);

// ---- Derived graphs ----

// All sites as vertices, diagram edges as edges.
Multigraph shadow_graph(const Diagram& d);

// Strand decomposition: crossings are dissolved and strands run straight
// through them.  Each run becomes one edge of `graph` (closed runs that meet
// no non-crossing site get a fresh vertex carrying a loop).
struct Strands {
  Multigraph graph;
  std::vector<int> vertex_of_site;  // per site; -1 for crossings
  std::vector<int> site_of_vertex;  // per graph vertex; -1 for circle vertices
  // Run r (== graph edge r) as the ordered list of diagram edge ids it uses.
  std::vector<std::vector<int>> run_edges;
  // Per crossing site: run through slots {0,2} and run through slots {1,3}.
  std::map<int, std::array<int, 2>> runs_at_crossing;
};
Strands strand_decomposition(const Diagram& d);
// Convenience: strand_decomposition(d).graph.
Multigraph underlying_graph(const Diagram& d);

// ---- Normal form ----

// Splice away invisible degree-2 flat vertices.  Components consisting
// entirely of degree-2 vertices keep exactly one as a circle marker; crossings
// and endpoint sites are never touched.
Diagram normalized(const Diagram& d);

// Canonical encoding, invariant under site/half-edge relabeling and rotation
// shifts (orientation-preserving isomorphism).  Equal strings <=> isomorphic
// diagrams.  Reflection is deliberately not quotiented out: reversing every
// rotation mirrors the state sum (A <-> A^{-1}), so a reflected diagram is a
// genuinely different object.
std::string canonical_string(const Diagram& d);
bool isomorphic(const Diagram& a, const Diagram& b);
// Coarser comparison that also allows the global reflection.
bool isomorphic_up_to_reflection(const Diagram& a, const Diagram& b);

// Mirror image (over/under swapped at every crossing).
Diagram crossing_switched(const Diagram& d);
// Global reflection (every rotation reversed).
Diagram reflected(const Diagram& d);

// ---- Construction ----

// Label-based builder: every label must occur exactly twice overall; the two
// occurrences become a paired half-edge couple.
class DiagramBuilder {
public:
  DiagramBuilder& vertex(const std::vector<std::string>& labels);
  // Rotation (a, b, c, d) counterclockwise; the (b, d) strand passes over.
  DiagramBuilder& crossing(const std::string& a, const std::string& b, const std::string& c,
                           const std::string& d);
  DiagramBuilder& head(const std::string& label);
  DiagramBuilder& tail(const std::string& label);
  DiagramBuilder& free_end(const std::string& label);
  DiagramBuilder& circle();  // bare circle (degree-2 marker vertex with a loop)

  Diagram build(bool strict_endpoints = true) const;

private:
  struct Rec {
    SiteKind kind;
    std::vector<std::string> labels;
  };
  std::vector<Rec> recs_;
  int auto_label_ = 0;
};

}  // namespace graphoid
