#include "graphoid/edit.hpp"

#include <algorithm>

#include "graphoid/errors.hpp"

namespace graphoid {

DiagramEditor::DiagramEditor(const Diagram& d) {
  next_half_ = d.half_edge_count();
  sites_.reserve(d.site_count());
  for (int s = 0; s < d.site_count(); ++s) {
    const Site& site = d.site(s);
    ESite es;
    es.kind = site.kind;
    es.rot = site.rot;
    if (site.kind == SiteKind::Crossing) {
      es.over = site.over_even ? std::pair<int, int>{site.rot[0], site.rot[2]}
                               : std::pair<int, int>{site.rot[1], site.rot[3]};
    }
    sites_.push_back(std::move(es));
  }
  for (int h = 0; h < d.half_edge_count(); ++h) theta_[h] = d.theta(h);
}

int DiagramEditor::add_site(SiteKind kind, std::vector<int> rot) {
  ESite es;
  es.kind = kind;
  es.rot = std::move(rot);
  sites_.push_back(std::move(es));
  return static_cast<int>(sites_.size()) - 1;
}

int DiagramEditor::add_crossing(std::vector<int> rot, std::pair<int, int> over_halves) {
  int s = add_site(SiteKind::Crossing, std::move(rot));
  sites_[s].over = over_halves;
  return s;
}

int DiagramEditor::add_circle() {
  int a = new_half();
  int b = new_half();
  int s = add_site(SiteKind::Vertex, {a, b});
  pair_halves(a, b);
  return s;
}

void DiagramEditor::set_rotation(int site, std::vector<int> rot) {
  sites_[site].rot = std::move(rot);
}

void DiagramEditor::set_over_pair(int site, std::pair<int, int> over_halves) {
  sites_[site].over = over_halves;
}

void DiagramEditor::remove_site(int site) {
  ESite& es = sites_[site];
  for (int h : es.rot) unpair_half(h);
  es.rot.clear();
  es.alive = false;
}

int DiagramEditor::partner(int h) const {
  auto it = theta_.find(h);
  return it == theta_.end() ? -1 : it->second;
}

void DiagramEditor::pair_halves(int a, int b) {
  if (a == b) throw GraphoidError("edit", "half-edge cannot pair with itself");
  if (partner(a) != -1 || partner(b) != -1)
    throw GraphoidError("edit", "pairing an already paired half-edge");
  theta_[a] = b;
  theta_[b] = a;
}

void DiagramEditor::unpair_half(int h) {
  auto it = theta_.find(h);
  if (it == theta_.end()) return;
  theta_.erase(it->second);
  theta_.erase(h);
}

int DiagramEditor::site_of_half(int h) const {
  for (int s = 0; s < static_cast<int>(sites_.size()); ++s) {
    if (!sites_[s].alive) continue;
    const auto& rot = sites_[s].rot;
    if (std::find(rot.begin(), rot.end(), h) != rot.end()) return s;
  }
  return -1;
}

void DiagramEditor::splice_out(int site, bool keep_circle) {
  const auto& rot = sites_[site].rot;
  if (rot.size() != 2) throw GraphoidError("edit", "splice_out needs a degree-2 site");
  int x = rot[0], y = rot[1];
  int px = partner(x), py = partner(y);
  if (px == -1 || py == -1) throw GraphoidError("edit", "splice_out on unpaired half-edges");
  if (px == y) {
    remove_site(site);
    if (keep_circle) add_circle();
    return;
  }
  unpair_half(x);
  unpair_half(y);
  remove_site(site);
  pair_halves(px, py);
}

Diagram DiagramEditor::freeze(std::vector<int>* site_map) const {
  if (site_map) site_map->assign(sites_.size(), -1);
  // Collect live half-edges in ascending id order and compact.
  std::vector<int> halves;
  for (const auto& es : sites_) {
    if (!es.alive) continue;
    halves.insert(halves.end(), es.rot.begin(), es.rot.end());
  }
  std::sort(halves.begin(), halves.end());
  std::unordered_map<int, int> compact;
  compact.reserve(halves.size());
  for (int i = 0; i < static_cast<int>(halves.size()); ++i) {
    if (compact.count(halves[i]))
      throw GraphoidError("edit", "half-edge appears in two rotation slots");
    compact[halves[i]] = i;
  }
  std::vector<Site> out_sites;
  for (int es_index = 0; es_index < static_cast<int>(sites_.size()); ++es_index) {
    const ESite& es = sites_[es_index];
    if (!es.alive) continue;
    if (site_map) (*site_map)[es_index] = static_cast<int>(out_sites.size());
    Site s;
    s.kind = es.kind;
    for (int h : es.rot) s.rot.push_back(compact.at(h));
    if (es.kind == SiteKind::Crossing) {
      if (es.rot.size() != 4) throw GraphoidError("edit", "crossing must have degree 4");
      auto slot = [&](int h) {
        auto it = std::find(es.rot.begin(), es.rot.end(), h);
        if (it == es.rot.end()) throw GraphoidError("edit", "over pair not in crossing rotation");
        return static_cast<int>(it - es.rot.begin());
      };
      int s1 = slot(es.over.first), s2 = slot(es.over.second);
      if ((s1 + 2) % 4 != s2 && (s2 + 2) % 4 != s1)
        throw GraphoidError("edit", "over pair must be opposite slots");
      s.over_even = (s1 % 2 == 0);
    }
    out_sites.push_back(std::move(s));
  }
  std::vector<int> pairing(halves.size(), -1);
  for (int h : halves) {
    auto it = theta_.find(h);
    if (it == theta_.end()) throw GraphoidError("edit", "freeze with unpaired half-edge");
    pairing[compact.at(h)] = compact.at(it->second);
  }
  return Diagram(std::move(out_sites), std::move(pairing));
}

}  // namespace graphoid
