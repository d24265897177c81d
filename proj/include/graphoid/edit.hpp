#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "graphoid/diagram.hpp"

namespace graphoid {

// Mutable half-edge structure for diagram surgery.  Half-edge ids are
// arbitrary non-negative integers and are never reused; freeze() compacts
// them back into a Diagram.  Over/under data at crossings is tracked as the
// pair of half-edges of the over strand, which stays meaningful while
// rotations are being rewritten.
class DiagramEditor {
public:
  DiagramEditor() = default;
  explicit DiagramEditor(const Diagram& d);

  int new_half() { return next_half_++; }
  int add_site(SiteKind kind, std::vector<int> rot = {});
  int add_crossing(std::vector<int> rot, std::pair<int, int> over_halves);
  // Fresh bare circle: degree-2 marker vertex with a loop.
  int add_circle();

  bool alive(int site) const { return sites_[site].alive; }
  int site_limit() const { return static_cast<int>(sites_.size()); }
  SiteKind kind(int site) const { return sites_[site].kind; }
  void set_kind(int site, SiteKind k) { sites_[site].kind = k; }
  const std::vector<int>& rotation(int site) const { return sites_[site].rot; }
  void set_rotation(int site, std::vector<int> rot);
  std::pair<int, int> over_pair(int site) const { return sites_[site].over; }
  void set_over_pair(int site, std::pair<int, int> over_halves);

  // Unpairs and discards every half-edge still in the site's rotation.
  void remove_site(int site);

  int partner(int h) const;  // -1 when unpaired
  void pair_halves(int a, int b);
  void unpair_half(int h);
  // Site currently holding h in its rotation, -1 if detached (linear scan).
  int site_of_half(int h) const;

  // Remove a degree-2 site and reconnect its two neighbour half-edges.  When
  // the site's slots pair each other (a bare circle) the component would
  // vanish; keep_circle then leaves a fresh circle marker behind.
  void splice_out(int site, bool keep_circle = true);

  // When site_map is given it receives, per editor site id, the index of that
  // site in the frozen diagram (-1 for removed sites).
  Diagram freeze(std::vector<int>* site_map = nullptr) const;

private:
  struct ESite {
    SiteKind kind = SiteKind::Vertex;
    std::vector<int> rot;
    std::pair<int, int> over{-1, -1};
    bool alive = true;
  };
  std::vector<ESite> sites_;
  std::unordered_map<int, int> theta_;
  int next_half_ = 0;
};

}  // namespace graphoid
