#include "graphoid/closures.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <unordered_set>

#include "graphoid/edit.hpp"
#include "graphoid/errors.hpp"

namespace graphoid {

const char* closure_mode_name(ClosureMode m) {
  switch (m) {
    case ClosureMode::Virtual: return "virtual";
    case ClosureMode::Under: return "under";
    case ClosureMode::Over: return "over";
  }
  return "?";
}

void close_endpoints(DiagramEditor& ed, const Diagram& d) {
  std::vector<int> ends;
  for (int s = 0; s < d.site_count(); ++s) {
    SiteKind k = d.site(s).kind;
    if (k == SiteKind::Head || k == SiteKind::Tail || k == SiteKind::Free) ends.push_back(s);
  }
  if (ends.empty()) return;
  if (ends.size() != 2)
    throw GraphoidError("endpoint_mismatch", "closure needs exactly two endpoints, found " +
                                                 std::to_string(ends.size()));
  int h1 = d.site(ends[0]).rot.at(0);
  int h2 = d.site(ends[1]).rot.at(0);
  int p1 = ed.partner(h1);
  int p2 = ed.partner(h2);
  if (p1 == h2) {
    // The strand is a single edge; closing it leaves a bare circle.
    ed.remove_site(ends[0]);
    ed.remove_site(ends[1]);
    ed.add_circle();
    return;
  }
  ed.remove_site(ends[0]);
  ed.remove_site(ends[1]);
  ed.pair_halves(p1, p2);
}

Diagram virtual_closure(const Diagram& d) {
  d.require_valid();
  if (d.endpoint_count() == 0)
    throw GraphoidError("already_closed", "virtual closure needs an open strand");
  DiagramEditor ed(d);
  close_endpoints(ed, d);
  return ed.freeze();
}

namespace {

struct DualRouting {
  int head_face = -1, tail_face = -1;
  int length = 0;
  std::vector<int> dist_head, dist_tail;
  // Per face, sorted (neighbour face, crossed edge id).  Edges bounding the
  // same face on both sides cannot be usefully crossed and are omitted.
  std::vector<std::vector<std::pair<int, int>>> adj;

  bool on_shortest(int from, int to) const {
    return dist_head[to] == dist_head[from] + 1 && dist_head[to] + dist_tail[to] == length;
  }
};

std::vector<int> bfs_distances(const DualRouting& r, int src) {
  std::vector<int> dist(r.adj.size(), -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int f = q.front();
    q.pop();
    for (auto [n, e] : r.adj[f])
      if (dist[n] < 0) {
        dist[n] = dist[f] + 1;
        q.push(n);
      }
  }
  return dist;
}

int endpoint_site(const Diagram& d, SiteKind k) {
  for (int s = 0; s < d.site_count(); ++s)
    if (d.site(s).kind == k) return s;
  return -1;
}

DualRouting build_routing(const Diagram& d, const Faces& faces) {
  DualRouting r;
  r.adj.resize(faces.walks.size());
  const auto& edges = d.edge_list();
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    int f1 = faces.face_of_half[edges[e].first];
    int f2 = faces.face_of_half[edges[e].second];
    if (f1 == f2) continue;
    r.adj[f1].push_back({f2, e});
    r.adj[f2].push_back({f1, e});
  }
  for (auto& v : r.adj) std::sort(v.begin(), v.end());
  int head = endpoint_site(d, SiteKind::Head);
  int tail = endpoint_site(d, SiteKind::Tail);
  r.head_face = faces.face_of_half[d.site(head).rot.at(0)];
  r.tail_face = faces.face_of_half[d.site(tail).rot.at(0)];
  r.dist_head = bfs_distances(r, r.head_face);
  r.dist_tail = bfs_distances(r, r.tail_face);
  r.length = r.dist_head[r.tail_face];
  return r;
}

// Insert the shortcut along the given crossed-edge route.  Empty route means
// Head and Tail share a face and the shortcut is a plain arc.
Diagram apply_route(const Diagram& d, const Faces& faces, const std::vector<int>& route,
                    bool under) {
  DiagramEditor ed(d);
  if (route.empty()) {
    close_endpoints(ed, d);
    return ed.freeze();
  }
  int head = endpoint_site(d, SiteKind::Head);
  int tail = endpoint_site(d, SiteKind::Tail);
  int ph = d.theta(d.site(head).rot.at(0));
  int pt = d.theta(d.site(tail).rot.at(0));
  int cur_face = faces.face_of_half[d.site(head).rot.at(0)];
  ed.remove_site(head);
  ed.remove_site(tail);
  int prev = ph;
  for (int e : route) {
    auto [lo, hi] = d.edge_list()[e];
    // u is the crossed edge's half on our side of the fence: the boundary
    // walk of the current face travels along u.
    int u = faces.face_of_half[lo] == cur_face ? lo : hi;
    int w = d.theta(u);
    ed.unpair_half(u);
    int c_in = ed.new_half();
    int z_w = ed.new_half();
    int c_out = ed.new_half();
    int z_u = ed.new_half();
    // The boundary walk keeps its face on the right of u's travel direction,
    // so approaching from inside cur_face and piercing toward w puts the
    // counterclockwise order at the new crossing at: shortcut in, stub to w,
    // shortcut out, stub back to u.
    ed.add_crossing({c_in, z_w, c_out, z_u},
                    under ? std::make_pair(z_w, z_u) : std::make_pair(c_in, c_out));
    ed.pair_halves(z_u, u);
    ed.pair_halves(z_w, w);
    ed.pair_halves(c_in, prev);
    prev = c_out;
    cur_face = faces.face_of_half[w];
  }
  ed.pair_halves(prev, pt);
  Diagram out = ed.freeze();
  if (ribbon_genus(out) != 0)
    throw GraphoidError("internal", "closure surgery left the plane");
  return out;
}

void require_classical_open(const Diagram& d) {
  d.require_valid();
  if (d.endpoint_count() == 0)
    throw GraphoidError("already_closed", "classical closure needs an open strand");
  if (ribbon_genus(d) != 0)
    throw GraphoidError("not_classical_planar",
                        "underpass/overpass closure is defined only for planar diagrams");
}

std::vector<int> canonical_route(const DualRouting& r) {
  std::vector<int> route;
  int cur = r.head_face;
  while (cur != r.tail_face) {
    bool advanced = false;
    for (auto [n, e] : r.adj[cur]) {
      if (r.on_shortest(cur, n)) {
        route.push_back(e);
        cur = n;
        advanced = true;
        break;
      }
    }
    if (!advanced) throw GraphoidError("internal", "dual route reconstruction failed");
  }
  return route;
}

void enumerate_routes(const DualRouting& r, int cur, std::vector<int>& route,
                      std::vector<std::vector<int>>& out, int max_routings) {
  if (cur == r.tail_face) {
    if (static_cast<int>(out.size()) >= max_routings)
      throw BudgetExceeded("more than " + std::to_string(max_routings) + " shortcut routings");
    out.push_back(route);
    return;
  }
  for (auto [n, e] : r.adj[cur]) {
    if (!r.on_shortest(cur, n)) continue;
    route.push_back(e);
    enumerate_routes(r, n, route, out, max_routings);
    route.pop_back();
  }
}

}  // namespace

Diagram close_diagram(const Diagram& d, ClosureMode m) {
  if (m == ClosureMode::Virtual) return virtual_closure(d);
  require_classical_open(d);
  Faces faces = trace_faces(d);
  DualRouting r = build_routing(d, faces);
  return apply_route(d, faces, canonical_route(r), m == ClosureMode::Under);
}

Diagram underpass_closure(const Diagram& d) { return close_diagram(d, ClosureMode::Under); }
Diagram overpass_closure(const Diagram& d) { return close_diagram(d, ClosureMode::Over); }

std::vector<Diagram> closure_routings(const Diagram& d, ClosureMode m, int max_routings) {
  if (m == ClosureMode::Virtual) return {virtual_closure(d)};
  require_classical_open(d);
  Faces faces = trace_faces(d);
  DualRouting r = build_routing(d, faces);
  std::vector<std::vector<int>> routes;
  std::vector<int> scratch;
  enumerate_routes(r, r.head_face, scratch, routes, max_routings);
  std::vector<Diagram> out;
  std::unordered_set<std::string> seen;
  for (const auto& route : routes) {
    Diagram c = apply_route(d, faces, route, m == ClosureMode::Under);
    if (seen.insert(canonical_string(c)).second) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace graphoid
