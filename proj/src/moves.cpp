#include "graphoid/moves.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "graphoid/edit.hpp"
#include "graphoid/errors.hpp"

namespace graphoid {

const char* move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::R1Plus: return "R1+";
    case MoveKind::R1Minus: return "R1-";
    case MoveKind::R2Plus: return "R2+";
    case MoveKind::R2Minus: return "R2-";
    case MoveKind::R3: return "R3";
    case MoveKind::R4: return "R4";
    case MoveKind::R5: return "R5";
    case MoveKind::R6: return "R6";
  }
  return "?";
}

std::optional<MoveKind> move_kind_from_name(const std::string& name) {
  static const std::pair<const char*, MoveKind> table[] = {
      {"R1+", MoveKind::R1Plus}, {"R1-", MoveKind::R1Minus}, {"R2+", MoveKind::R2Plus},
      {"R2-", MoveKind::R2Minus}, {"R3", MoveKind::R3},      {"R4", MoveKind::R4},
      {"R5", MoveKind::R5},       {"R6", MoveKind::R6},
  };
  for (const auto& [n, k] : table)
    if (name == n) return k;
  return std::nullopt;
}

const MoveKindSet& all_moves() {
  static const MoveKindSet s{MoveKind::R1Plus, MoveKind::R1Minus, MoveKind::R2Plus,
                             MoveKind::R2Minus, MoveKind::R3,     MoveKind::R4,
                             MoveKind::R5,      MoveKind::R6};
  return s;
}

const MoveKindSet& rigid_moves() {
  static const MoveKindSet s{MoveKind::R1Plus, MoveKind::R1Minus, MoveKind::R2Plus,
                             MoveKind::R2Minus, MoveKind::R3,     MoveKind::R4,
                             MoveKind::R5};
  return s;
}

std::string move_site_text(const MoveSite& m) {
  std::ostringstream os;
  os << move_kind_name(m.kind) << "(";
  for (size_t i = 0; i < m.args.size(); ++i) {
    if (i) os << ",";
    os << m.args[i];
  }
  os << ")";
  return os.str();
}

const char* equiv_verdict_name(EquivVerdict v) {
  switch (v) {
    case EquivVerdict::Equivalent: return "equivalent";
    case EquivVerdict::NotFoundExhausted: return "not-found-exhausted";
    case EquivVerdict::NotFoundBudget: return "not-found-budget";
  }
  return "?";
}

namespace {

[[noreturn]] void inapplicable(const std::string& what) {
  throw GraphoidError("move_inapplicable", what);
}

void check_args(const MoveSite& m, size_t n) {
  if (m.args.size() != n)
    inapplicable(std::string(move_kind_name(m.kind)) + " takes " + std::to_string(n) +
                 " argument(s)");
}

bool valid_half(const Diagram& d, int h) { return h >= 0 && h < d.half_edge_count(); }

int opp(const Diagram& d, int h) {
  const Site& s = d.site(d.site_of(h));
  return s.rot[(d.slot_of(h) + 2) % 4];
}

// Split a crossing into its two through-strand degree-2 remnants.  The caller
// splices the remnants after all rewiring; splice_out composes through chains
// of remnants and turns fully looped ones into circle markers.
void dissolve_crossing(DiagramEditor& ed, const Diagram& d, int site, std::vector<int>& remnants) {
  const Site& s = d.site(site);
  ed.set_kind(site, SiteKind::Vertex);
  ed.set_rotation(site, {s.rot[0], s.rot[2]});
  int other = ed.add_site(SiteKind::Vertex, {s.rot[1], s.rot[3]});
  remnants.push_back(site);
  remnants.push_back(other);
}

// ---- patterns ----

bool r1minus_at(const Diagram& d, int c, int k) {
  if (c < 0 || c >= d.site_count() || k < 0 || k >= 4) return false;
  const Site& s = d.site(c);
  if (s.kind != SiteKind::Crossing) return false;
  return d.theta(s.rot[k]) == s.rot[(k + 1) % 4];
}

struct BigonPat {
  int h1, h2, x, y;
};

std::optional<BigonPat> r2minus_at(const Diagram& d, int h1) {
  if (!valid_half(d, h1)) return std::nullopt;
  int x = d.site_of(h1);
  if (d.site(x).kind != SiteKind::Crossing) return std::nullopt;
  int h2 = d.sigma_next(d.theta(h1));
  int y = d.site_of(h2);
  if (y == x || d.site(y).kind != SiteKind::Crossing) return std::nullopt;
  if (d.sigma_next(d.theta(h2)) != h1) return std::nullopt;
  // One of the two strands must pass over at both corners of the bigon.
  bool e1_over = d.is_over(h1) && d.is_over(d.theta(h1));
  bool e2_over = d.is_over(h2) && d.is_over(d.theta(h2));
  if (!e1_over && !e2_over) return std::nullopt;
  return BigonPat{h1, h2, x, y};
}

struct TriPat {
  int h1, h2, h3, s1, s2, s3;
  bool moving_over;
};

std::optional<TriPat> r3_at(const Diagram& d, int h1) {
  if (!valid_half(d, h1)) return std::nullopt;
  int h2 = d.sigma_next(d.theta(h1));
  int h3 = d.sigma_next(d.theta(h2));
  if (d.sigma_next(d.theta(h3)) != h1) return std::nullopt;
  int s1 = d.site_of(h1), s2 = d.site_of(h2), s3 = d.site_of(h3);
  if (s1 == s2 || s2 == s3 || s1 == s3) return std::nullopt;
  for (int s : {s1, s2, s3})
    if (d.site(s).kind != SiteKind::Crossing) return std::nullopt;
  // The strand carrying the side from s2 to s3 slides across s1; it must pass
  // the other two strands uniformly.
  if (d.is_over(h2) != d.is_over(d.theta(h2))) return std::nullopt;
  return TriPat{h1, h2, h3, s1, s2, s3, d.is_over(h2)};
}

struct SlidePat {
  int v = -1, a = 0, m = 0, k = 0;
  std::vector<int> window;  // half at v per window slot
  std::vector<int> g;       // arrival half at the crossed crossing
  std::vector<int> xs;      // the crossing sites, in window order
  bool beta_over = false;
};

// One strand crossing m consecutive legs of flat vertex v, read ascending
// from rotation slot a: the passages are uniformly over or under, and
// consecutive crossings are joined by single strand segments that bound
// triangles with the vertex (the segment leaves x_i on the far rotation side
// of the vertex edge and arrives on the near side of x_{i+1}).
std::optional<SlidePat> crossed_window_at(const Diagram& d, int v, int a, int m) {
  if (v < 0 || v >= d.site_count()) return std::nullopt;
  const Site& s = d.site(v);
  if (s.kind != SiteKind::Vertex) return std::nullopt;
  int k = s.degree();
  if (k < 1 || a < 0 || a >= k || m < 1 || m > k) return std::nullopt;
  SlidePat p;
  p.v = v;
  p.a = a;
  p.m = m;
  p.k = k;
  for (int i = 0; i < m; ++i) {
    int vh = s.rot[(a + i) % k];
    int g = d.theta(vh);
    int x = d.site_of(g);
    if (x == v || d.site(x).kind != SiteKind::Crossing) return std::nullopt;
    if (std::find(p.xs.begin(), p.xs.end(), x) != p.xs.end()) return std::nullopt;
    p.window.push_back(vh);
    p.g.push_back(g);
    p.xs.push_back(x);
  }
  for (int i = 0; i < m; ++i) {
    bool over = d.is_over(d.sigma_next(p.g[i]));
    if (i == 0)
      p.beta_over = over;
    else if (over != p.beta_over)
      return std::nullopt;
  }
  for (int i = 0; i + 1 < m; ++i)
    if (d.theta(d.sigma_prev(p.g[i])) != d.sigma_next(p.g[i + 1])) return std::nullopt;
  return p;
}

std::optional<SlidePat> r4_at(const Diagram& d, int v, int a, int m) {
  auto p = crossed_window_at(d, v, a, m);
  if (!p || m > p->k - 1) return std::nullopt;
  // The strand's outer arcs must leave the vertex neighbourhood; a strand
  // whose free end feeds straight back into the vertex would wind around it
  // instead of sliding past.
  int p_outer = d.theta(d.sigma_next(p->g[0]));
  int q_outer = d.theta(d.sigma_prev(p->g[m - 1]));
  for (int h : d.site(v).rot)
    if (h == p_outer || h == q_outer) return std::nullopt;
  return p;
}

// R5 detach: the strand crosses every leg, so the window is the whole
// rotation and no leg is left over for an outer arc to feed back into.
std::optional<SlidePat> r5_detach_at(const Diagram& d, int v, int a) {
  if (v < 0 || v >= d.site_count() || d.site(v).kind != SiteKind::Vertex) return std::nullopt;
  return crossed_window_at(d, v, a, d.site(v).degree());
}

// R5 insert: the cut edge must border the face that turns at the vertex
// corner, and may not be a leg of the vertex itself -- crossing a leg of the
// same vertex would wind it around the vertex rather than pass the vertex
// through the strand.  The wrap sense is tied to the side of the edge that
// borders the corner face: around that face's boundary disk the edge ends and
// the two corner flanks appear in a fixed cyclic order, and only one wrap
// keeps the re-routed chords disjoint.  Read from h, the wrap must go with
// the rotation when h's own walk position lies on the corner face, and
// against it when the opposite position does; a two-sided edge allows both.
struct WeaveSite {
  int v, corner, orient, over, h, k;
};

std::optional<WeaveSite> r5_insert_at(const Diagram& d, int v, int corner, int orient, int over,
                                      int h) {
  if (v < 0 || v >= d.site_count() || !valid_half(d, h)) return std::nullopt;
  if (orient < 0 || orient > 1 || over < 0 || over > 1) return std::nullopt;
  const Site& s = d.site(v);
  if (s.kind != SiteKind::Vertex) return std::nullopt;
  int k = s.degree();
  if (k < 1 || corner < 0 || corner >= k) return std::nullopt;
  if (d.site_of(h) == v || d.site_of(d.theta(h)) == v) return std::nullopt;
  Faces faces = trace_faces(d);
  int cf = faces.face_of_half[d.theta(s.rot[corner])];
  int side = faces.face_of_half[orient ? h : d.theta(h)];
  if (side != cf) return std::nullopt;
  return WeaveSite{v, corner, orient, over, h, k};
}

bool vertex_for_twist(const Diagram& d, int v, int min_degree) {
  if (v < 0 || v >= d.site_count()) return false;
  const Site& s = d.site(v);
  return s.kind == SiteKind::Vertex && s.degree() >= min_degree;
}

// ---- applications ----

Diagram apply_r1plus(const Diagram& d, const MoveSite& m) {
  check_args(m, 3);
  int e = m.args[0], side = m.args[1], over = m.args[2];
  if (e < 0 || e >= d.edge_count() || side < 0 || side > 1 || over < 0 || over > 1)
    inapplicable("R1+ wants (edge, side, over)");
  auto [p, q] = d.edge_list()[e];
  DiagramEditor ed(d);
  ed.unpair_half(p);
  int a = ed.new_half(), b = ed.new_half(), c = ed.new_half(), dd = ed.new_half();
  ed.add_crossing({a, b, c, dd},
                  over ? std::pair<int, int>{a, c} : std::pair<int, int>{b, dd});
  ed.pair_halves(p, a);
  if (side == 0) {
    ed.pair_halves(b, c);
    ed.pair_halves(q, dd);
  } else {
    ed.pair_halves(c, dd);
    ed.pair_halves(q, b);
  }
  return ed.freeze();
}

Diagram apply_r1minus(const Diagram& d, const MoveSite& m) {
  check_args(m, 2);
  int c = m.args[0], k = m.args[1];
  if (!r1minus_at(d, c, k)) inapplicable("no removable kink at this crossing slot");
  const Site& s = d.site(c);
  int l1 = s.rot[k];
  int keep1 = s.rot[(k + 2) % 4], keep2 = s.rot[(k + 3) % 4];
  DiagramEditor ed(d);
  ed.unpair_half(l1);
  ed.set_kind(c, SiteKind::Vertex);
  ed.set_rotation(c, {keep1, keep2});
  ed.splice_out(c);
  return ed.freeze();
}

Diagram apply_r2plus(const Diagram& d, const MoveSite& m) {
  check_args(m, 3);
  int ha = m.args[0], hb = m.args[1], a_over = m.args[2];
  if (!valid_half(d, ha) || !valid_half(d, hb) || a_over < 0 || a_over > 1)
    inapplicable("R2+ wants (half, half, over)");
  if (d.edge_of_half(ha) == d.edge_of_half(hb))
    inapplicable("R2+ needs two distinct edges");
  Faces faces = trace_faces(d);
  if (faces.face_of_half[ha] != faces.face_of_half[hb])
    inapplicable("R2+ halves must bound a common face");
  int ta = d.theta(ha), tb = d.theta(hb);
  DiagramEditor ed(d);
  ed.unpair_half(ha);
  ed.unpair_half(hb);
  int tip_x = ed.new_half(), ub_x = ed.new_half(), wa_x = ed.new_half(), mid_x = ed.new_half();
  int tip_y = ed.new_half(), mid_y = ed.new_half(), ua_y = ed.new_half(), wb_y = ed.new_half();
  ed.add_crossing({tip_x, ub_x, wa_x, mid_x},
                  a_over ? std::pair<int, int>{tip_x, wa_x} : std::pair<int, int>{ub_x, mid_x});
  ed.add_crossing({tip_y, mid_y, ua_y, wb_y},
                  a_over ? std::pair<int, int>{tip_y, ua_y} : std::pair<int, int>{mid_y, wb_y});
  ed.pair_halves(tip_x, tip_y);
  ed.pair_halves(mid_x, mid_y);
  ed.pair_halves(ub_x, hb);
  ed.pair_halves(wb_y, tb);
  ed.pair_halves(ua_y, ha);
  ed.pair_halves(wa_x, ta);
  return ed.freeze();
}

Diagram apply_r2minus(const Diagram& d, const MoveSite& m) {
  check_args(m, 1);
  auto pat = r2minus_at(d, m.args[0]);
  if (!pat) inapplicable("no reducible bigon at this half-edge");
  DiagramEditor ed(d);
  std::vector<int> remnants;
  dissolve_crossing(ed, d, pat->x, remnants);
  dissolve_crossing(ed, d, pat->y, remnants);
  for (int r : remnants) ed.splice_out(r);
  return ed.freeze();
}

Diagram apply_r3(const Diagram& d, const MoveSite& m) {
  check_args(m, 1);
  auto pat = r3_at(d, m.args[0]);
  if (!pat) inapplicable("no slidable triangle at this half-edge");
  int h1 = pat->h1, h2 = pat->h2, h3 = pat->h3;
  int s2 = pat->s2, s3 = pat->s3;
  int in1 = d.theta(h3), in2 = d.theta(h1), in3 = d.theta(h2);
  int v2 = opp(d, in2), w2 = opp(d, h2);
  int v3 = opp(d, h3), w3 = opp(d, in3);
  int u1 = opp(d, h1), z1 = opp(d, in1);
  int pu1 = d.theta(u1), pz1 = d.theta(z1);
  bool over = pat->moving_over;

  DiagramEditor ed(d);
  ed.unpair_half(h2);  // the moving side between s2 and s3
  ed.unpair_half(u1);
  ed.unpair_half(z1);
  ed.set_kind(s2, SiteKind::Vertex);
  ed.set_rotation(s2, {in2, v2});
  ed.set_kind(s3, SiteKind::Vertex);
  ed.set_rotation(s3, {h3, v3});
  // n3 crosses the extension of the s3-side strand beyond s1; n2 crosses the
  // extension of the s2-side strand.  The moving strand runs w2 - n3 - n2 - w3.
  int pn = ed.new_half(), m3 = ed.new_half(), zn = ed.new_half();
  int m2 = ed.new_half(), qn = ed.new_half(), un = ed.new_half();
  ed.add_crossing({pn, m3, zn, w2},
                  over ? std::pair<int, int>{m3, w2} : std::pair<int, int>{pn, zn});
  ed.add_crossing({m2, qn, w3, un},
                  over ? std::pair<int, int>{m2, w3} : std::pair<int, int>{qn, un});
  ed.pair_halves(zn, z1);
  ed.pair_halves(un, u1);
  ed.pair_halves(m3, m2);
  if (pu1 == z1) {
    // The two extension stubs at s1 belonged to one loop edge.
    ed.pair_halves(qn, pn);
  } else {
    ed.pair_halves(qn, pu1);
    ed.pair_halves(pn, pz1);
  }
  ed.splice_out(s2);
  ed.splice_out(s3);
  return ed.freeze();
}

// Weave a strand across the given vertex legs in order, adding one uniform
// crossing per leg and chaining them together.  Returns the chain's two open
// strand stubs {before the first leg, after the last}.  with_rotation picks
// the wrap sense -- whether the strand sweeps with the vertex rotation or
// against it -- which fixes the side of each new crossing that faces the
// previous one.
std::pair<int, int> weave_strand(DiagramEditor& ed, const std::vector<int>& legs, bool over,
                                 bool with_rotation) {
  int first = -1, prev = -1;
  for (int vh : legs) {
    int live_far = ed.partner(vh);
    ed.unpair_half(vh);
    int fr = ed.new_half(), bp = ed.new_half(), tv = ed.new_half(), bq = ed.new_half();
    ed.add_crossing(with_rotation ? std::vector<int>{fr, bq, tv, bp}
                                  : std::vector<int>{fr, bp, tv, bq},
                    over ? std::pair<int, int>{bp, bq} : std::pair<int, int>{fr, tv});
    ed.pair_halves(tv, vh);
    ed.pair_halves(fr, live_far);
    if (prev == -1)
      first = bp;
    else
      ed.pair_halves(bp, prev);
    prev = bq;
  }
  return {first, prev};
}

// Dissolve the crossings of an abandoned window.  The vertex-edge passages
// always splice back together; the strand passages form a chain that is
// either dangling (the strand now runs elsewhere entirely: delete it),
// re-paired into a replacement chain (splice it through), or closed onto
// itself (leave a free circle marker).
void dissolve_window(DiagramEditor& ed, const Diagram& d, const std::vector<int>& xs) {
  std::vector<int> remnants;
  for (int x : xs) dissolve_crossing(ed, d, x, remnants);
  bool pruned = true;
  while (pruned) {
    pruned = false;
    for (int r : remnants) {
      if (!ed.alive(r)) continue;
      bool dangling = false;
      for (int h : ed.rotation(r))
        if (ed.partner(h) == -1) dangling = true;
      if (dangling) {
        ed.remove_site(r);
        pruned = true;
      }
    }
  }
  for (int r : remnants)
    if (ed.alive(r)) ed.splice_out(r);
}

Diagram apply_r4(const Diagram& d, const MoveSite& m) {
  check_args(m, 3);
  auto pat = r4_at(d, m.args[0], m.args[1], m.args[2]);
  if (!pat) inapplicable("no slidable strand window at this vertex");
  const Site& vs = d.site(pat->v);
  int k = pat->k, a = pat->a, mm = pat->m;
  int east = d.sigma_next(pat->g[0]);       // strand stub toward the east outer edge
  int west = d.sigma_prev(pat->g[mm - 1]);  // stub toward the west outer edge
  bool closed = d.theta(east) == west;      // the strand is a loop around the window
  int p_outer = closed ? -1 : d.theta(east);
  int q_outer = closed ? -1 : d.theta(west);

  DiagramEditor ed(d);
  ed.unpair_half(east);
  if (!closed) ed.unpair_half(west);
  // Re-route the strand across the complementary rotation window, crossing its
  // edges in reversed rotation order (seen from the east attachment).
  std::vector<int> legs;
  for (int t = 0; t < k - mm; ++t) legs.push_back(vs.rot[(a + k - 1 - t) % k]);
  auto [chain_w, chain_e] = weave_strand(ed, legs, pat->beta_over, false);
  if (closed) {
    ed.pair_halves(chain_w, chain_e);
  } else {
    ed.pair_halves(chain_w, p_outer);
    ed.pair_halves(chain_e, q_outer);
  }
  dissolve_window(ed, d, pat->xs);
  return ed.freeze();
}

Diagram apply_r5_detach(const Diagram& d, const MoveSite& m) {
  check_args(m, 2);
  auto pat = r5_detach_at(d, m.args[0], m.args[1]);
  if (!pat) inapplicable("no strand crossing every leg of this vertex");
  int k = pat->k;
  int east = d.sigma_next(pat->g[0]);
  int west = d.sigma_prev(pat->g[k - 1]);
  DiagramEditor ed(d);
  if (d.theta(east) != west) {
    // The strand continues elsewhere: join its outer arcs directly and abandon
    // the chain between them.  A strand closed around the vertex has nothing
    // to join; its passages splice into a free circle instead.
    int p_outer = d.theta(east), q_outer = d.theta(west);
    ed.unpair_half(east);
    ed.unpair_half(west);
    ed.pair_halves(p_outer, q_outer);
  }
  dissolve_window(ed, d, pat->xs);
  return ed.freeze();
}

Diagram apply_r5_insert(const Diagram& d, const MoveSite& m) {
  check_args(m, 5);
  auto pat = r5_insert_at(d, m.args[0], m.args[1], m.args[2], m.args[3], m.args[4]);
  if (!pat) inapplicable("R5 wants a strand edge on the face of the vertex corner");
  const Site& vs = d.site(pat->v);
  int k = pat->k, corner = pat->corner;
  int h = pat->h, th = d.theta(h);
  // Read from h, the strand wraps against the rotation starting at the corner
  // slot when orient is 0, and with the rotation from the slot after the
  // corner when orient is 1.  Both wraps enter and leave at the same corner.
  std::vector<int> legs;
  for (int t = 0; t < k; ++t)
    legs.push_back(vs.rot[pat->orient ? (corner + 1 + t) % k : (corner - t + k) % k]);
  DiagramEditor ed(d);
  ed.unpair_half(h);
  auto [chain_w, chain_e] = weave_strand(ed, legs, pat->over != 0, pat->orient != 0);
  ed.pair_halves(chain_w, h);
  ed.pair_halves(chain_e, th);
  return ed.freeze();
}

Diagram apply_r6(const Diagram& d, const MoveSite& m) {
  check_args(m, 2);
  int v = m.args[0], slot = m.args[1];
  if (!vertex_for_twist(d, v, 3)) inapplicable("R6 wants a flat vertex of degree >= 3");
  int k = d.site(v).degree();
  if (slot < 0 || slot >= k) inapplicable("R6 slot out of range");
  DiagramEditor ed(d);
  std::vector<int> rot = d.site(v).rot;
  std::swap(rot[slot], rot[(slot + 1) % k]);
  ed.set_rotation(v, rot);
  return ed.freeze();
}

}  // namespace

std::vector<MoveSite> enumerate_moves(const Diagram& d, const MoveKindSet& kinds) {
  std::vector<MoveSite> out;
  auto want = [&](MoveKind k) { return kinds.count(k) > 0; };

  if (want(MoveKind::R1Plus))
    for (int e = 0; e < d.edge_count(); ++e)
      for (int side = 0; side < 2; ++side)
        for (int over = 0; over < 2; ++over)
          out.push_back({MoveKind::R1Plus, {e, side, over}});

  if (want(MoveKind::R1Minus))
    for (int c = 0; c < d.site_count(); ++c)
      for (int k = 0; k < 4; ++k)
        if (r1minus_at(d, c, k)) out.push_back({MoveKind::R1Minus, {c, k}});

  if (want(MoveKind::R2Plus)) {
    Faces faces = trace_faces(d);
    for (const auto& walk : faces.walks)
      for (size_t i = 0; i < walk.size(); ++i)
        for (size_t j = i + 1; j < walk.size(); ++j) {
          if (d.edge_of_half(walk[i]) == d.edge_of_half(walk[j])) continue;
          for (int over = 0; over < 2; ++over)
            out.push_back({MoveKind::R2Plus, {walk[i], walk[j], over}});
        }
  }

  if (want(MoveKind::R2Minus))
    for (int h = 0; h < d.half_edge_count(); ++h)
      if (auto pat = r2minus_at(d, h); pat && h < pat->h2)
        out.push_back({MoveKind::R2Minus, {h}});

  if (want(MoveKind::R3))
    for (int h = 0; h < d.half_edge_count(); ++h)
      if (r3_at(d, h)) out.push_back({MoveKind::R3, {h}});

  if (want(MoveKind::R4))
    for (int v = 0; v < d.site_count(); ++v) {
      if (d.site(v).kind != SiteKind::Vertex) continue;
      int k = d.site(v).degree();
      for (int a = 0; a < k; ++a)
        for (int m = 1; m <= k - 1; ++m)
          if (r4_at(d, v, a, m)) out.push_back({MoveKind::R4, {v, a, m}});
    }

  if (want(MoveKind::R5)) {
    Faces faces = trace_faces(d);
    for (int v = 0; v < d.site_count(); ++v) {
      const Site& s = d.site(v);
      if (s.kind != SiteKind::Vertex) continue;
      int k = s.degree();
      for (int a = 0; a < k; ++a)
        if (r5_detach_at(d, v, a)) out.push_back({MoveKind::R5, {v, a}});
      for (int corner = 0; corner < k; ++corner) {
        int face = faces.face_of_half[d.theta(s.rot[corner])];
        for (int h = 0; h < d.half_edge_count(); ++h) {
          if (d.site_of(h) == v || d.site_of(d.theta(h)) == v) continue;
          for (int orient = 0; orient < 2; ++orient) {
            if (faces.face_of_half[orient ? h : d.theta(h)] != face) continue;
            for (int over = 0; over < 2; ++over)
              out.push_back({MoveKind::R5, {v, corner, orient, over, h}});
          }
        }
      }
    }
  }

  if (want(MoveKind::R6))
    for (int v = 0; v < d.site_count(); ++v)
      if (vertex_for_twist(d, v, 3)) {
        int k = d.site(v).degree();
        for (int slot = 0; slot < k; ++slot) out.push_back({MoveKind::R6, {v, slot}});
      }

  return out;
}

Diagram apply_move(const Diagram& d, const MoveSite& m) {
  switch (m.kind) {
    case MoveKind::R1Plus: return apply_r1plus(d, m);
    case MoveKind::R1Minus: return apply_r1minus(d, m);
    case MoveKind::R2Plus: return apply_r2plus(d, m);
    case MoveKind::R2Minus: return apply_r2minus(d, m);
    case MoveKind::R3: return apply_r3(d, m);
    case MoveKind::R4: return apply_r4(d, m);
    case MoveKind::R5:
      return m.args.size() == 2 ? apply_r5_detach(d, m) : apply_r5_insert(d, m);
    case MoveKind::R6: return apply_r6(d, m);
  }
  inapplicable("unknown move kind");
}

EquivResult search_equivalent(const Diagram& d1, const Diagram& d2, SearchOptions opt) {
  d1.require_valid(false);
  d2.require_valid(false);
  int ceiling = opt.max_crossings >= 0
                    ? opt.max_crossings
                    : std::max(d1.crossing_count(), d2.crossing_count()) + opt.crossing_headroom;
  const MoveKindSet& kinds = opt.rigid ? rigid_moves() : all_moves();
  std::string target = canonical_string(d2);

  EquivResult res;
  std::string start = canonical_string(d1);
  if (start == target) {
    res.verdict = EquivVerdict::Equivalent;
    res.visited = 1;
    return res;
  }

  struct Node {
    int parent;
    MoveSite mv;
  };
  std::vector<Node> nodes;
  std::unordered_set<std::string> seen{start};
  std::deque<std::pair<Diagram, int>> queue;
  queue.emplace_back(d1, -1);

  auto unwind = [&](int idx) {
    std::vector<MoveSite> path;
    for (int at = idx; at != -1; at = nodes[at].parent) path.push_back(nodes[at].mv);
    std::reverse(path.begin(), path.end());
    return path;
  };

  while (!queue.empty()) {
    auto [cur, parent_idx] = std::move(queue.front());
    queue.pop_front();
    for (const MoveSite& mv : enumerate_moves(cur, kinds)) {
      if (res.steps >= opt.max_steps) {
        res.verdict = EquivVerdict::NotFoundBudget;
        res.visited = static_cast<long long>(seen.size());
        return res;
      }
      ++res.steps;
      Diagram nxt = apply_move(cur, mv);
      if (nxt.crossing_count() > ceiling) continue;
      std::string canon = canonical_string(nxt);
      if (!seen.insert(canon).second) continue;
      nodes.push_back({parent_idx, mv});
      int idx = static_cast<int>(nodes.size()) - 1;
      if (canon == target) {
        res.verdict = EquivVerdict::Equivalent;
        res.path = unwind(idx);
        res.visited = static_cast<long long>(seen.size());
        return res;
      }
      queue.emplace_back(std::move(nxt), idx);
    }
  }
  res.verdict = EquivVerdict::NotFoundExhausted;
  res.visited = static_cast<long long>(seen.size());
  return res;
}

}  // namespace graphoid
