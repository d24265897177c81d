#include "graphoid/adequacy.hpp"

#include <algorithm>
#include <optional>

#include "graphoid/closures.hpp"
#include "graphoid/edit.hpp"
#include "graphoid/errors.hpp"

namespace graphoid {

namespace {

Diagram closed_input(const Diagram& d, bool* was_open = nullptr) {
  if (d.endpoint_count() > 0) {
    if (was_open) *was_open = true;
    return virtual_closure(d);
  }
  if (was_open) *was_open = false;
  return d;
}

// Corner j of a site lies between rot[j] and rot[j+1]; the boundary walk that
// turns through it is the one containing rot[j+1] as an entry.
int corner_face(const Faces& fc, const Site& st, int j) {
  return fc.face_of_half[st.rot[(j + 1) % st.degree()]];
}

int state_beta1(const Diagram& dc, const std::vector<Smoothing>& rho) {
  ResolvedState rs = resolve_state(dc, rho);
  return betti1(shadow_graph(rs.flat));
}

}  // namespace

const char* check_result_name(CheckResult c) {
  switch (c) {
    case CheckResult::Pass: return "pass";
    case CheckResult::Fail: return "fail";
    case CheckResult::NotApplicable: return "not_applicable";
  }
  return "?";
}

MarkedState marked_state(const Diagram& d, Smoothing which) {
  if (which == Smoothing::X)
    throw GraphoidError("bad_argument", "marked_state wants the A or the B resolution");
  Diagram dc = closed_input(d);
  MarkedState out;
  out.crossings = crossing_sites(dc);
  std::vector<Smoothing> rho(out.crossings.size(), which);
  ResolvedState rs = resolve_state(dc, rho);
  out.flat = rs.flat;
  out.graph = shadow_graph(out.flat);
  out.beta1 = betti1(out.graph);
  out.marks.assign(out.crossings.size(), {-1, -1});
  for (const auto& tr : rs.traces) {
    auto it = std::find(out.crossings.begin(), out.crossings.end(), tr.crossing_site);
    out.marks[it - out.crossings.begin()] = {tr.arc_a, tr.arc_b};
  }
  return out;
}

std::vector<int> cut_edges(const Multigraph& g) { return bridge_edges(g); }

BridgeQuotient build_f(const Multigraph& g) {
  std::vector<int> bridges = bridge_edges(g);
  std::vector<char> is_bridge(g.edge_count(), 0);
  for (int e : bridges) is_bridge[e] = 1;
  Multigraph trimmed;
  trimmed.vertex_count = g.vertex_count;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!is_bridge[e]) trimmed.add_edge(g.edges[e].first, g.edges[e].second);
  BridgeQuotient out;
  out.vertex_of = component_labels(trimmed);
  out.f.vertex_count = betti0(trimmed);
  for (int e : bridges) {
    out.f.add_edge(out.vertex_of[g.edges[e].first], out.vertex_of[g.edges[e].second]);
    out.bridge_of_edge.push_back(e);
  }
  return out;
}

std::vector<int> essential_crossings(const Diagram& d, Smoothing which) {
  Diagram dc = closed_input(d);
  std::vector<int> xs = crossing_sites(dc);
  std::vector<Smoothing> rho(xs.size(), which);
  int base = state_beta1(dc, rho);
  std::vector<int> out;
  for (size_t i = 0; i < xs.size(); ++i) {
    rho[i] = Smoothing::X;
    if (state_beta1(dc, rho) == base + 1) out.push_back(xs[i]);
    rho[i] = which;
  }
  return out;
}

std::map<int, long long> subgraph_counts(const Multigraph& f,
                                         const std::vector<std::pair<int, int>>& added,
                                         int max_added) {
  int m = static_cast<int>(added.size());
  if (m > max_added)
    throw BudgetExceeded("subgraph enumeration over " + std::to_string(m) + " added edges");
  std::map<int, long long> counts;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    Multigraph k = f;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) k.add_edge(added[i].first, added[i].second);
    if (!has_bridge(k)) ++counts[betti1(k)];
  }
  return counts;
}

namespace {

struct SideAnalysis {
  int beta1 = 0;
  std::vector<int> essential;
  std::map<int, long long> counts;
};

SideAnalysis analyse_side(const Diagram& dc, Smoothing which) {
  SideAnalysis out;
  MarkedState ms = marked_state(dc, which);
  out.beta1 = ms.beta1;
  out.essential = essential_crossings(dc, which);
  BridgeQuotient q = build_f(ms.graph);
  std::vector<std::pair<int, int>> added;
  for (int x : out.essential) {
    auto it = std::find(ms.crossings.begin(), ms.crossings.end(), x);
    auto [sa, sb] = ms.marks[it - ms.crossings.begin()];
    added.emplace_back(q.vertex_of[sa], q.vertex_of[sb]);
  }
  out.counts = subgraph_counts(q.f, added);
  return out;
}

long long alternating_sum(const std::map<int, long long>& counts) {
  long long s = 0;
  for (const auto& [k, n] : counts) s += (k % 2 ? -n : n);
  return s;
}

long long plain_sum(const std::map<int, long long>& counts) {
  long long s = 0;
  for (const auto& [k, n] : counts) s += n;
  return s;
}

}  // namespace

AdequacyReport adequacy_report(const Diagram& d, const Budget& budget) {
  AdequacyReport rep;
  Diagram dc = closed_input(d, &rep.closed_first);
  rep.crossings = dc.crossing_count();

  SideAnalysis a = analyse_side(dc, Smoothing::A);
  SideAnalysis b = analyse_side(dc, Smoothing::B);
  rep.beta1_state_a = a.beta1;
  rep.beta1_state_b = b.beta1;
  rep.essential_a = a.essential;
  rep.essential_b = b.essential;
  rep.a_counts = a.counts;
  rep.b_counts = b.counts;
  rep.alt_sum_a = alternating_sum(a.counts);
  rep.alt_sum_b = alternating_sum(b.counts);
  rep.plain_sum_a = plain_sum(a.counts);
  rep.plain_sum_b = plain_sum(b.counts);
  rep.a_adequate = rep.alt_sum_a != 0;
  rep.b_adequate = rep.alt_sum_b != 0;
  rep.adequate = rep.a_adequate && rep.b_adequate;

  Multigraph ug = underlying_graph(dc);
  rep.chi_graph = ug.vertex_count - ug.edge_count();
  rep.beta1_graph = betti1(ug);
  rep.expected_span = 2 * rep.crossings + rep.beta1_state_a + rep.beta1_state_b;

  LaurentPoly r;
  try {
    YamadaOptions opt;
    opt.budget = budget;
    r = yamada(dc, opt);
    rep.poly_computed = true;
  } catch (const BudgetExceeded&) {
    return rep;
  }

  Int sign = (((rep.chi_graph % 2) + 2) % 2 == 0) ? 1 : -1;
  bool top = r.coeff(rep.crossings + rep.beta1_state_a) == sign * rep.alt_sum_a;
  bool bottom = r.coeff(-(rep.crossings + rep.beta1_state_b)) == sign * rep.alt_sum_b;
  rep.extreme_coeff_check = (top && bottom) ? CheckResult::Pass : CheckResult::Fail;

  if (rep.adequate && !r.is_zero()) {
    rep.span = r.span();
    rep.span_identity =
        (rep.span == rep.expected_span) ? CheckResult::Pass : CheckResult::Fail;
    rep.nontrivial = rep.span > 2 * rep.beta1_graph;
  }
  return rep;
}

DualReport dual_graph_report(const Diagram& d) {
  DualReport rep;
  Diagram dc = closed_input(d);
  Faces fc = trace_faces(dc);
  rep.faces = fc.count();
  rep.dual.vertex_count = rep.faces;
  for (int x : crossing_sites(dc)) {
    const Site& st = dc.site(x);
    int i = st.over_even ? 0 : 2;
    // The two dual edges at a crossing join opposite corner faces: the pair a
    // smoothing merges, one edge per smoothing direction.
    rep.dual.add_edge(corner_face(fc, st, (i + 1) % 4), corner_face(fc, st, (i + 3) % 4));
    rep.dual.add_edge(corner_face(fc, st, i), corner_face(fc, st, (i + 2) % 4));
  }
  rep.s_hat = betti0(rep.dual);
  rep.shadow_connected = dc.component_count() == 1;
  rep.chi_surface = euler_characteristic(dc);
  Multigraph ug = underlying_graph(dc);
  rep.chi_graph = ug.vertex_count - ug.edge_count();
  rep.beta1_graph = betti1(ug);
  int c = dc.crossing_count();
  std::vector<Smoothing> rho(crossing_sites(dc).size(), Smoothing::A);
  rep.beta1_state_a = state_beta1(dc, rho);
  std::fill(rho.begin(), rho.end(), Smoothing::B);
  rep.beta1_state_b = state_beta1(dc, rho);
  if (rep.shadow_connected) {
    rep.component_bound = (rep.s_hat <= rep.beta1_graph + rep.chi_surface - 1)
                              ? CheckResult::Pass
                              : CheckResult::Fail;
    rep.state_betti_bound =
        (rep.beta1_state_a + rep.beta1_state_b <=
         rep.s_hat - rep.chi_graph + c - rep.chi_surface + 2)
            ? CheckResult::Pass
            : CheckResult::Fail;
  }
  return rep;
}

namespace {

std::vector<int> odd_vertex_sites(const Diagram& d) {
  std::vector<int> out;
  for (int s = 0; s < d.site_count(); ++s)
    if (d.site(s).kind == SiteKind::Vertex && d.site(s).degree() % 2 == 1) out.push_back(s);
  return out;
}

// Insert a new edge between corner cu of site u and corner cv of site v
// (both corners on the same face, so the edge lives inside that face).
Diagram with_face_edge(const Diagram& d, int u, int cu, int v, int cv) {
  DiagramEditor ed(d);
  int p = ed.new_half();
  int q = ed.new_half();
  std::vector<int> ru = d.site(u).rot;
  ru.insert(ru.begin() + cu + 1, p);
  ed.set_rotation(u, ru);
  std::vector<int> rv = d.site(v).rot;
  rv.insert(rv.begin() + cv + 1, q);
  ed.set_rotation(v, rv);
  ed.pair_halves(p, q);
  return ed.freeze();
}

// Pair up every odd vertex through shared faces, one edge per pair, adding
// edges one at a time (each insertion splits a face, so corners are retraced
// after every step).  Returns the augmented diagram and the chosen pairs.
bool augment_all(const Diagram& cur, std::vector<std::pair<int, int>>& pairs, Diagram* out) {
  std::vector<int> odd = odd_vertex_sites(cur);
  if (odd.empty()) {
    *out = cur;
    return true;
  }
  Faces fc = trace_faces(cur);
  int u = odd.front();
  int du = cur.site(u).degree();
  for (size_t vi = 1; vi < odd.size(); ++vi) {
    int v = odd[vi];
    int dv = cur.site(v).degree();
    for (int cu = 0; cu < du; ++cu) {
      for (int cv = 0; cv < dv; ++cv) {
        if (corner_face(fc, cur.site(u), cu) != corner_face(fc, cur.site(v), cv)) continue;
        pairs.emplace_back(u, v);
        if (augment_all(with_face_edge(cur, u, cu, v, cv), pairs, out)) return true;
        pairs.pop_back();
      }
    }
  }
  return false;
}

// Route one requested pair through the first shared face.
bool augment_pair(const Diagram& cur, int u, int v, Diagram* out) {
  Faces fc = trace_faces(cur);
  int du = cur.site(u).degree();
  int dv = cur.site(v).degree();
  for (int cu = 0; cu < du; ++cu)
    for (int cv = 0; cv < dv; ++cv)
      if (corner_face(fc, cur.site(u), cu) == corner_face(fc, cur.site(v), cv)) {
        *out = with_face_edge(cur, u, cu, v, cv);
        return true;
      }
  return false;
}

}  // namespace

CheckerboardReport checkerboard_bound(const Diagram& d,
                                      const std::vector<std::pair<int, int>>& augment,
                                      int max_odd) {
  CheckerboardReport rep;
  Diagram dc = closed_input(d);
  rep.crossings = dc.crossing_count();
  std::vector<int> odd = odd_vertex_sites(dc);
  rep.odd_vertices = static_cast<int>(odd.size());

  Diagram aug = dc;
  if (!augment.empty()) {
    for (auto [u, v] : augment) {
      if (u < 0 || v < 0 || u >= aug.site_count() || v >= aug.site_count() || u == v)
        throw GraphoidError("bad_argument", "augmentation wants two distinct vertex sites");
      if (!augment_pair(aug, u, v, &aug)) {
        rep.reason = "requested augmentation edge has no shared face";
        return rep;
      }
      rep.augmentation.emplace_back(u, v);
    }
  } else if (!odd.empty()) {
    if (rep.odd_vertices > max_odd)
      throw BudgetExceeded("augmentation search over " + std::to_string(rep.odd_vertices) +
                           " odd vertices");
    if (!augment_all(dc, rep.augmentation, &aug)) {
      rep.reason = "no face-respecting pairing of the odd vertices exists";
      return rep;
    }
  }

  rep.eulerian = odd_vertex_sites(aug).empty();
  if (!rep.eulerian) {
    rep.reason = "augmented diagram still has odd vertices";
    return rep;
  }

  Faces fc = trace_faces(aug);
  std::vector<int> color(fc.count(), -1);
  rep.two_colorable = true;
  for (int f = 0; f < static_cast<int>(fc.walks.size()) && rep.two_colorable; ++f) {
    if (color[f] != -1) continue;
    color[f] = 0;
    std::vector<int> queue{f};
    while (!queue.empty() && rep.two_colorable) {
      int cur = queue.back();
      queue.pop_back();
      for (int h : fc.walks[cur]) {
        int other = fc.face_of_half[aug.theta(h)];
        if (color[other] == -1) {
          color[other] = 1 - color[cur];
          queue.push_back(other);
        } else if (color[other] == color[cur]) {
          rep.two_colorable = false;
          break;
        }
      }
    }
  }
  if (!rep.two_colorable) {
    rep.reason = "faces are not 2-colorable";
    return rep;
  }

  // The corner pair covered by the A-smoothing must get one color, the pair
  // covered by the B-smoothing the other, consistently per component.
  std::vector<int> comp = aug.site_components();
  std::map<int, int> component_shade;
  rep.decorations_follow = true;
  for (int x : crossing_sites(aug)) {
    const Site& st = aug.site(x);
    int i = st.over_even ? 0 : 2;
    int ca = color[corner_face(fc, st, i)];
    int ca2 = color[corner_face(fc, st, (i + 2) % 4)];
    if (ca != ca2) {
      rep.decorations_follow = false;
      break;
    }
    auto [it, fresh] = component_shade.emplace(comp[x], ca);
    if (!fresh && it->second != ca) {
      rep.decorations_follow = false;
      break;
    }
  }
  if (!rep.decorations_follow) {
    rep.reason = "over/under decorations do not follow the face coloring";
    return rep;
  }

  rep.chi_surface = euler_characteristic(aug);
  Multigraph ug = underlying_graph(dc);
  int chi_graph = ug.vertex_count - ug.edge_count();
  rep.lower_bound =
      rep.crossings - chi_graph - rep.odd_vertices / 2 + rep.chi_surface;
  std::vector<Smoothing> rho(crossing_sites(dc).size(), Smoothing::A);
  int ba = state_beta1(dc, rho);
  std::fill(rho.begin(), rho.end(), Smoothing::B);
  int bb = state_beta1(dc, rho);
  rep.beta1_sum = ba + bb;
  rep.bound_holds = rep.beta1_sum >= rep.lower_bound;
  rep.s_hat_surrogate = dual_graph_report(dc).s_hat;
  rep.gap_bound_numerator =
      rep.s_hat_surrogate + rep.odd_vertices / 2 - 2 * rep.chi_surface + 2;
  rep.verdict = rep.bound_holds ? CheckResult::Pass : CheckResult::Fail;
  return rep;
}

}  // namespace graphoid
