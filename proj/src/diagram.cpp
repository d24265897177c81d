#include "graphoid/diagram.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "graphoid/edit.hpp"
#include "graphoid/errors.hpp"

namespace graphoid {

const char* site_kind_name(SiteKind k) {
  switch (k) {
    case SiteKind::Vertex: return "vertex";
    case SiteKind::Crossing: return "crossing";
    case SiteKind::Head: return "head";
    case SiteKind::Tail: return "tail";
    case SiteKind::Free: return "free";
  }
  return "?";
}

Diagram::Diagram(std::vector<Site> sites, std::vector<int> pairing)
    : sites_(std::move(sites)), theta_(std::move(pairing)) {
  int n_half = static_cast<int>(theta_.size());
  site_of_.assign(n_half, -1);
  slot_of_.assign(n_half, -1);
  for (int s = 0; s < site_count(); ++s) {
    const auto& rot = sites_[s].rot;
    for (int slot = 0; slot < static_cast<int>(rot.size()); ++slot) {
      int h = rot[slot];
      if (h < 0 || h >= n_half)
        throw GraphoidError("structure", "half-edge id out of range");
      if (site_of_[h] != -1)
        throw GraphoidError("structure", "half-edge appears in two rotation slots");
      site_of_[h] = s;
      slot_of_[h] = slot;
    }
  }
  for (int h = 0; h < n_half; ++h) {
    if (site_of_[h] == -1)
      throw GraphoidError("structure", "half-edge id missing from all rotations");
    int t = theta_[h];
    if (t < 0 || t >= n_half || t == h || theta_[t] != h)
      throw GraphoidError("structure", "pairing is not a fixed-point-free involution");
  }
  edge_of_half_.assign(n_half, -1);
  for (int h = 0; h < n_half; ++h) {
    if (h < theta_[h]) {
      edge_of_half_[h] = edge_of_half_[theta_[h]] = static_cast<int>(edges_.size());
      edges_.emplace_back(h, theta_[h]);
    }
  }
}

int Diagram::sigma_next(int h) const {
  const auto& rot = sites_[site_of_[h]].rot;
  return rot[(slot_of_[h] + 1) % rot.size()];
}

int Diagram::sigma_prev(int h) const {
  const auto& rot = sites_[site_of_[h]].rot;
  int n = static_cast<int>(rot.size());
  return rot[(slot_of_[h] + n - 1) % n];
}

bool Diagram::is_over(int h) const {
  const Site& s = sites_[site_of_[h]];
  if (s.kind != SiteKind::Crossing) return false;
  return (slot_of_[h] % 2 == 0) == s.over_even;
}

int Diagram::count_kind(SiteKind k) const {
  int n = 0;
  for (const auto& s : sites_)
    if (s.kind == k) ++n;
  return n;
}

int Diagram::endpoint_count() const {
  return count_kind(SiteKind::Head) + count_kind(SiteKind::Tail) + count_kind(SiteKind::Free);
}

std::vector<ValidationIssue> Diagram::validate(bool strict_endpoints) const {
  std::vector<ValidationIssue> issues;
  for (int s = 0; s < site_count(); ++s) {
    const Site& site = sites_[s];
    switch (site.kind) {
      case SiteKind::Vertex:
        break;  // any degree
      case SiteKind::Crossing:
        if (site.degree() != 4)
          issues.push_back({"crossing_degree", "crossing site " + std::to_string(s) +
                                                   " has degree " + std::to_string(site.degree())});
        break;
      case SiteKind::Head:
      case SiteKind::Tail:
      case SiteKind::Free:
        if (site.degree() != 1)
          issues.push_back({"endpoint_degree", std::string(site_kind_name(site.kind)) + " site " +
                                                   std::to_string(s) + " has degree " +
                                                   std::to_string(site.degree())});
        break;
    }
  }
  if (strict_endpoints) {
    int heads = count_kind(SiteKind::Head);
    int tails = count_kind(SiteKind::Tail);
    int frees = count_kind(SiteKind::Free);
    if (frees > 0)
      issues.push_back({"free_end_present", "free endpoints are not allowed here"});
    if (!((heads == 0 && tails == 0) || (heads == 1 && tails == 1)))
      issues.push_back({"endpoint_mismatch", "expected no endpoints or exactly one head and one "
                                             "tail, got " +
                                                 std::to_string(heads) + " head(s), " +
                                                 std::to_string(tails) + " tail(s)"});
  }
  return issues;
}

void Diagram::require_valid(bool strict_endpoints) const {
  auto issues = validate(strict_endpoints);
  if (issues.empty()) return;
  std::string msg;
  for (const auto& i : issues) {
    if (!msg.empty()) msg += "; ";
    msg += i.message;
  }
  throw GraphoidError(issues.front().code, msg);
}

std::vector<int> Diagram::site_components() const {
  std::vector<int> parent(site_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& [a, b] : edges_) {
    int ra = find(site_of_[a]), rb = find(site_of_[b]);
    if (ra != rb) parent[ra] = rb;
  }
  std::vector<int> label(site_count(), -1);
  int next = 0;
  for (int s = 0; s < site_count(); ++s) {
    int r = find(s);
    if (label[r] == -1) label[r] = next++;
    label[s] = label[r];
  }
  return label;
}

int Diagram::component_count() const {
  auto l = site_components();
  return l.empty() ? 0 : *std::max_element(l.begin(), l.end()) + 1;
}

Faces trace_faces(const Diagram& d) {
  Faces out;
  out.face_of_half.assign(d.half_edge_count(), -1);
  for (int h0 = 0; h0 < d.half_edge_count(); ++h0) {
    if (out.face_of_half[h0] != -1) continue;
    std::vector<int> walk;
    int face = static_cast<int>(out.walks.size());
    int h = h0;
    do {
      out.face_of_half[h] = face;
      walk.push_back(h);
      h = d.sigma_next(d.theta(h));
    } while (h != h0);
    out.walks.push_back(std::move(walk));
  }
  for (const auto& s : d.sites())
    if (s.degree() == 0) ++out.isolated_sites;
  return out;
}

int boundary_component_count(const Diagram& d, const std::vector<char>& edge_kept) {
  // sigma restricted to kept half-edges: first kept slot counterclockwise.
  auto kept = [&](int h) { return edge_kept[d.edge_of_half(h)] != 0; };
  auto sigma_kept = [&](int h) {
    const auto& rot = d.site(d.site_of(h)).rot;
    int n = static_cast<int>(rot.size());
    for (int i = 1; i <= n; ++i) {
      int cand = rot[(d.slot_of(h) + i) % n];
      if (kept(cand)) return cand;
    }
    return h;
  };
  std::vector<char> seen(d.half_edge_count(), 0);
  int walks = 0;
  for (int h0 = 0; h0 < d.half_edge_count(); ++h0) {
    if (seen[h0] || !kept(h0)) continue;
    ++walks;
    int h = h0;
    do {
      seen[h] = 1;
      h = sigma_kept(d.theta(h));
    } while (h != h0);
  }
  int bare_sites = 0;
  for (int s = 0; s < d.site_count(); ++s) {
    bool any = false;
    for (int h : d.site(s).rot)
      if (kept(h)) any = true;
    if (!any) ++bare_sites;
  }
  return walks + bare_sites;
}

int euler_characteristic(const Diagram& d) {
  return d.site_count() - d.edge_count() + trace_faces(d).count();
}

int ribbon_genus(const Diagram& d) {
  int chi = euler_characteristic(d);
  return d.component_count() - chi / 2;
}

bool is_planar_ribbon(const Diagram& d) { return ribbon_genus(d) == 0; }

Multigraph shadow_graph(const Diagram& d) {
  Multigraph g;
  g.vertex_count = d.site_count();
  for (const auto& [a, b] : d.edge_list()) g.add_edge(d.site_of(a), d.site_of(b));
  return g;
}

Strands strand_decomposition(const Diagram& d) {
  Strands out;
  out.vertex_of_site.assign(d.site_count(), -1);
  for (int s = 0; s < d.site_count(); ++s) {
    if (d.site(s).kind == SiteKind::Crossing) continue;
    out.vertex_of_site[s] = out.graph.add_vertex();
    out.site_of_vertex.push_back(s);
  }
  std::vector<char> visited(d.half_edge_count(), 0);
  auto straight_through = [&](int arriving) {
    const Site& c = d.site(d.site_of(arriving));
    return c.rot[(d.slot_of(arriving) + 2) % 4];
  };
  auto record_passage = [&](int arriving, int run) {
    int c = d.site_of(arriving);
    auto it = out.runs_at_crossing.find(c);
    if (it == out.runs_at_crossing.end())
      it = out.runs_at_crossing.emplace(c, std::array<int, 2>{-1, -1}).first;
    it->second[d.slot_of(arriving) % 2] = run;
  };
  // Runs starting at non-crossing slots.
  for (int s = 0; s < d.site_count(); ++s) {
    if (d.site(s).kind == SiteKind::Crossing) continue;
    for (int h0 : d.site(s).rot) {
      if (visited[h0]) continue;
      int run = out.graph.edge_count();
      std::vector<int> edges_along;
      int cur = h0;
      visited[cur] = 1;
      int end_site;
      while (true) {
        int t = d.theta(cur);
        visited[t] = 1;
        edges_along.push_back(d.edge_of_half(cur));
        if (d.site(d.site_of(t)).kind != SiteKind::Crossing) {
          end_site = d.site_of(t);
          break;
        }
        record_passage(t, run);
        cur = straight_through(t);
        visited[cur] = 1;
      }
      out.graph.add_edge(out.vertex_of_site[s], out.vertex_of_site[end_site]);
      out.run_edges.push_back(std::move(edges_along));
    }
  }
  // Circles running only through crossings.
  for (int h0 = 0; h0 < d.half_edge_count(); ++h0) {
    if (visited[h0]) continue;
    int run = out.graph.edge_count();
    int v = out.graph.add_vertex();
    out.site_of_vertex.push_back(-1);
    std::vector<int> edges_along;
    int cur = h0;
    do {
      visited[cur] = 1;
      int t = d.theta(cur);
      visited[t] = 1;
      edges_along.push_back(d.edge_of_half(cur));
      record_passage(t, run);
      cur = straight_through(t);
    } while (cur != h0);
    out.graph.add_edge(v, v);
    out.run_edges.push_back(std::move(edges_along));
  }
  return out;
}

Multigraph underlying_graph(const Diagram& d) { return strand_decomposition(d).graph; }

Diagram normalized(const Diagram& d) {
  DiagramEditor ed(d);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < ed.site_limit(); ++s) {
      if (!ed.alive(s) || ed.kind(s) != SiteKind::Vertex) continue;
      const auto& rot = ed.rotation(s);
      if (rot.size() != 2) continue;
      if (ed.partner(rot[0]) == rot[1]) continue;  // bare circle marker, keep
      ed.splice_out(s);
      changed = true;
    }
  }
  return ed.freeze();
}

namespace {

// Deterministic encoding of the connected component containing start_half,
// numbering half-edges breadth-first from that seed.  refl reverses every
// rotation (the global reflection).
std::string component_encoding(const Diagram& d, int start_half, bool refl) {
  std::vector<int> half_num(d.half_edge_count(), -1);
  std::vector<int> order;
  std::ostringstream sites;
  auto discover = [&](int entry) {
    const Site& st = d.site(d.site_of(entry));
    int deg = st.degree();
    int k = d.slot_of(entry);
    for (int i = 0; i < deg; ++i) {
      int slot = refl ? ((k - i) % deg + deg) % deg : (k + i) % deg;
      int h = st.rot[slot];
      half_num[h] = static_cast<int>(order.size());
      order.push_back(h);
    }
    switch (st.kind) {
      case SiteKind::Vertex: sites << "V" << deg; break;
      case SiteKind::Crossing: sites << (d.is_over(entry) ? "Xo" : "Xu"); break;
      case SiteKind::Head: sites << "H"; break;
      case SiteKind::Tail: sites << "T"; break;
      case SiteKind::Free: sites << "F"; break;
    }
    sites << ";";
  };
  discover(start_half);
  for (size_t i = 0; i < order.size(); ++i) {
    int t = d.theta(order[i]);
    if (half_num[t] == -1) discover(t);
  }
  std::ostringstream enc;
  enc << sites.str() << "/";
  for (size_t i = 0; i < order.size(); ++i) {
    if (i) enc << ",";
    enc << half_num[d.theta(order[i])];
  }
  return enc.str();
}

}  // namespace

namespace {

std::string canonical_string_impl(const Diagram& d, bool allow_reflection) {
  auto comp = d.site_components();
  int n_comp = d.component_count();
  // Component -> its half-edges.
  std::vector<std::vector<int>> halves(n_comp);
  for (int h = 0; h < d.half_edge_count(); ++h) halves[comp[d.site_of(h)]].push_back(h);
  std::vector<std::string> parts;
  std::map<std::string, int> isolated;
  for (int c = 0; c < n_comp; ++c) {
    if (halves[c].empty()) continue;  // isolated sites handled below
    std::string best;
    for (int h : halves[c]) {
      std::string enc = component_encoding(d, h, false);
      if (best.empty() || enc < best) best = std::move(enc);
      if (allow_reflection) {
        enc = component_encoding(d, h, true);
        if (enc < best) best = std::move(enc);
      }
    }
    parts.push_back(std::move(best));
  }
  for (const auto& s : d.sites())
    if (s.degree() == 0) ++isolated[site_kind_name(s.kind)];
  std::sort(parts.begin(), parts.end());
  std::ostringstream out;
  for (const auto& [k, n] : isolated) out << "iso." << k << "=" << n << "|";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out << "|";
    out << parts[i];
  }
  return out.str();
}

}  // namespace

std::string canonical_string(const Diagram& d) { return canonical_string_impl(d, false); }

bool isomorphic(const Diagram& a, const Diagram& b) {
  return canonical_string(a) == canonical_string(b);
}

bool isomorphic_up_to_reflection(const Diagram& a, const Diagram& b) {
  // Components are compared up to reflection independently, so for
  // multi-component diagrams this is slightly coarser than one global
  // reflection; connected diagrams match the usual notion exactly.
  return canonical_string_impl(a, true) == canonical_string_impl(b, true);
}

Diagram crossing_switched(const Diagram& d) {
  std::vector<Site> sites = d.sites();
  for (auto& s : sites)
    if (s.kind == SiteKind::Crossing) s.over_even = !s.over_even;
  std::vector<int> pairing(d.half_edge_count());
  for (int h = 0; h < d.half_edge_count(); ++h) pairing[h] = d.theta(h);
  return Diagram(std::move(sites), std::move(pairing));
}

Diagram reflected(const Diagram& d) {
  std::vector<Site> sites = d.sites();
  for (auto& s : sites) {
    std::reverse(s.rot.begin(), s.rot.end());
    if (s.kind == SiteKind::Crossing) s.over_even = !s.over_even;
  }
  std::vector<int> pairing(d.half_edge_count());
  for (int h = 0; h < d.half_edge_count(); ++h) pairing[h] = d.theta(h);
  return Diagram(std::move(sites), std::move(pairing));
}

DiagramBuilder& DiagramBuilder::vertex(const std::vector<std::string>& labels) {
  recs_.push_back({SiteKind::Vertex, labels});
  return *this;
}

DiagramBuilder& DiagramBuilder::crossing(const std::string& a, const std::string& b,
                                         const std::string& c, const std::string& d) {
  recs_.push_back({SiteKind::Crossing, {a, b, c, d}});
  return *this;
}

DiagramBuilder& DiagramBuilder::head(const std::string& label) {
  recs_.push_back({SiteKind::Head, {label}});
  return *this;
}

DiagramBuilder& DiagramBuilder::tail(const std::string& label) {
  recs_.push_back({SiteKind::Tail, {label}});
  return *this;
}

DiagramBuilder& DiagramBuilder::free_end(const std::string& label) {
  recs_.push_back({SiteKind::Free, {label}});
  return *this;
}

DiagramBuilder& DiagramBuilder::circle() {
  std::string lab = "__circle" + std::to_string(auto_label_++);
  recs_.push_back({SiteKind::Vertex, {lab, lab}});
  return *this;
}

Diagram DiagramBuilder::build(bool strict_endpoints) const {
  std::map<std::string, std::vector<int>> where;  // label -> half-edge ids
  std::vector<Site> sites;
  int next_half = 0;
  for (const auto& rec : recs_) {
    Site s;
    s.kind = rec.kind;
    s.over_even = false;  // crossings: the slot-1/slot-3 strand is over
    for (const auto& lab : rec.labels) {
      int h = next_half++;
      s.rot.push_back(h);
      where[lab].push_back(h);
    }
    sites.push_back(std::move(s));
  }
  std::vector<int> pairing(next_half, -1);
  for (const auto& [lab, hs] : where) {
    if (hs.size() != 2)
      throw GraphoidError("label_count",
                          "label '" + lab + "' occurs " + std::to_string(hs.size()) +
                              " time(s); every label must occur exactly twice");
    pairing[hs[0]] = hs[1];
    pairing[hs[1]] = hs[0];
  }
  Diagram d(std::move(sites), std::move(pairing));
  d.require_valid(strict_endpoints);
  return d;
}

}  // namespace graphoid
