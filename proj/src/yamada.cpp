#include "graphoid/yamada.hpp"

#include <map>

#include "graphoid/closures.hpp"
#include "graphoid/edit.hpp"
#include "graphoid/errors.hpp"

namespace graphoid {

std::vector<int> crossing_sites(const Diagram& d) {
  std::vector<int> out;
  for (int s = 0; s < d.site_count(); ++s)
    if (d.site(s).kind == SiteKind::Crossing) out.push_back(s);
  return out;
}

ResolvedState resolve_state(const Diagram& d, const std::vector<Smoothing>& rho) {
  std::vector<int> xs = crossing_sites(d);
  if (rho.size() != xs.size())
    throw GraphoidError("resolution_arity", "expected " + std::to_string(xs.size()) +
                                                " resolutions, got " + std::to_string(rho.size()));
  DiagramEditor ed(d);
  close_endpoints(ed, d);
  ResolvedState out;
  struct PendingTrace {
    int crossing_site;
    Smoothing s;
    int arc_a_ed, arc_b_ed;
  };
  std::vector<PendingTrace> pending;
  for (size_t k = 0; k < xs.size(); ++k) {
    int site = xs[k];
    const Site& c = d.site(site);
    switch (rho[k]) {
      case Smoothing::X:
        ed.set_kind(site, SiteKind::Vertex);
        ++out.x_count;
        pending.push_back({site, Smoothing::X, site, -1});
        break;
      case Smoothing::A:
      case Smoothing::B: {
        int i = c.over_even ? 0 : 1;  // an over slot
        bool a_side = rho[k] == Smoothing::A;
        // A: over half joins its counterclockwise successor; B: predecessor.
        auto at = [&](int slot) { return c.rot[((slot % 4) + 4) % 4]; };
        std::vector<int> arc_a =
            a_side ? std::vector<int>{at(i), at(i + 1)} : std::vector<int>{at(i - 1), at(i)};
        std::vector<int> arc_b =
            a_side ? std::vector<int>{at(i + 2), at(i + 3)} : std::vector<int>{at(i + 1), at(i + 2)};
        ed.set_kind(site, SiteKind::Vertex);
        ed.set_rotation(site, arc_a);
        int other = ed.add_site(SiteKind::Vertex, arc_b);
        if (a_side)
          ++out.a_count;
        else
          ++out.b_count;
        pending.push_back({site, rho[k], site, other});
        break;
      }
    }
  }
  std::vector<int> site_map;
  out.flat = ed.freeze(&site_map);
  for (const auto& p : pending) {
    ResolvedState::CrossingTrace t;
    t.crossing_site = p.crossing_site;
    t.s = p.s;
    t.arc_a = site_map[p.arc_a_ed];
    t.arc_b = p.arc_b_ed == -1 ? -1 : site_map[p.arc_b_ed];
    out.traces.push_back(t);
  }
  return out;
}

LaurentPoly evaluate_flat_state(const Diagram& flat, const Budget& budget, bool brute_route) {
  if (flat.crossing_count() != 0)
    throw GraphoidError("not_flat", "state evaluation needs a crossingless diagram");
  Multigraph g = shadow_graph(normalized(flat));
  return brute_route ? flow_poly_brute(g, budget.brute_flow_max_edges) : flow_poly_dc(g);
}

LaurentPoly yamada_state_sum(const Diagram& d, const Budget& budget) {
  int c = d.crossing_count();
  if (c > budget.statesum_max_crossings || c > budget.max_crossings)
    throw BudgetExceeded("state sum over 3^" + std::to_string(c) +
                         " states exceeds the configured budget");
  if (d.edge_count() + 1 > budget.brute_flow_max_edges)
    throw BudgetExceeded("state graphs would exceed the subset-enumeration edge budget");
  std::vector<Smoothing> rho(c, Smoothing::A);
  LaurentPoly total;
  const LaurentPoly A = LaurentPoly::variable();
  const LaurentPoly Ainv = LaurentPoly::monomial(1, -1);
  while (true) {
    ResolvedState st = resolve_state(d, rho);
    LaurentPoly weight =
        A.pow(static_cast<unsigned>(st.a_count)) * Ainv.pow(static_cast<unsigned>(st.b_count));
    total += weight * evaluate_flat_state(st.flat, budget, /*brute_route=*/true);
    // Increment the ternary counter A < B < X.
    size_t k = 0;
    for (; k < rho.size(); ++k) {
      if (rho[k] == Smoothing::A) {
        rho[k] = Smoothing::B;
        break;
      }
      if (rho[k] == Smoothing::B) {
        rho[k] = Smoothing::X;
        break;
      }
      rho[k] = Smoothing::A;
    }
    if (k == rho.size()) break;
  }
  return total;
}

namespace {

LaurentPoly skein_rec(const Diagram& d, std::map<std::string, LaurentPoly>& memo,
                      const Budget& budget) {
  Diagram n = normalized(d);
  if (n.crossing_count() == 0) return evaluate_flat_state(n, budget, /*brute_route=*/false);
  std::string key = canonical_string(n);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  int c = crossing_sites(n).front();
  auto child = [&](Smoothing s) {
    // Resolve just this crossing, leaving the others intact.
    DiagramEditor ed(n);
    const Site& site = n.site(c);
    if (s == Smoothing::X) {
      ed.set_kind(c, SiteKind::Vertex);
    } else {
      int i = site.over_even ? 0 : 1;
      auto at = [&](int slot) { return site.rot[((slot % 4) + 4) % 4]; };
      bool a_side = s == Smoothing::A;
      std::vector<int> arc_a =
          a_side ? std::vector<int>{at(i), at(i + 1)} : std::vector<int>{at(i - 1), at(i)};
      std::vector<int> arc_b =
          a_side ? std::vector<int>{at(i + 2), at(i + 3)} : std::vector<int>{at(i + 1), at(i + 2)};
      ed.set_kind(c, SiteKind::Vertex);
      ed.set_rotation(c, arc_a);
      ed.add_site(SiteKind::Vertex, arc_b);
    }
    return ed.freeze();
  };
  const LaurentPoly A = LaurentPoly::variable();
  const LaurentPoly Ainv = LaurentPoly::monomial(1, -1);
  LaurentPoly value = A * skein_rec(child(Smoothing::A), memo, budget) +
                      Ainv * skein_rec(child(Smoothing::B), memo, budget) +
                      skein_rec(child(Smoothing::X), memo, budget);
  memo.emplace(std::move(key), value);
  return value;
}

}  // namespace

LaurentPoly yamada_skein(const Diagram& d, const Budget& budget) {
  if (d.crossing_count() > budget.max_crossings)
    throw BudgetExceeded("crossing count " + std::to_string(d.crossing_count()) +
                         " exceeds the budget of " + std::to_string(budget.max_crossings));
  DiagramEditor ed(d);
  close_endpoints(ed, d);
  Diagram closed = ed.freeze();
  std::map<std::string, LaurentPoly> memo;
  return skein_rec(closed, memo, budget);
}

LaurentPoly yamada(const Diagram& d, const YamadaOptions& options) {
  const Budget& b = options.budget;
  switch (options.route) {
    case YamadaOptions::Route::StateSum: return yamada_state_sum(d, b);
    case YamadaOptions::Route::Skein: return yamada_skein(d, b);
    case YamadaOptions::Route::Auto: break;
  }
  int c = d.crossing_count();
  if (c <= b.statesum_max_crossings && d.edge_count() + 1 <= b.brute_flow_max_edges)
    return yamada_state_sum(d, b);
  return yamada_skein(d, b);
}

YamadaReport yamada_report(const Diagram& d, const YamadaOptions& options) {
  YamadaReport r;
  const Budget& b = options.budget;
  r.crossings = d.crossing_count();
  r.open = d.endpoint_count() > 0;

  bool statesum;
  switch (options.route) {
    case YamadaOptions::Route::StateSum: statesum = true; break;
    case YamadaOptions::Route::Skein: statesum = false; break;
    default:
      statesum =
          r.crossings <= b.statesum_max_crossings && d.edge_count() + 1 <= b.brute_flow_max_edges;
  }
  r.route = statesum ? "statesum" : "skein";
  r.poly = statesum ? yamada_state_sum(d, b) : yamada_skein(d, b);

  r.zero = r.poly.is_zero();
  if (!r.zero) {
    r.max_degree = r.poly.max_degree();
    r.min_degree = r.poly.min_degree();
    r.span = r.poly.span();
  }

  int c = r.crossings;
  ResolvedState all_a = resolve_state(d, std::vector<Smoothing>(c, Smoothing::A));
  ResolvedState all_b = resolve_state(d, std::vector<Smoothing>(c, Smoothing::B));
  r.beta1_all_a = betti1(shadow_graph(all_a.flat));
  r.beta1_all_b = betti1(shadow_graph(all_b.flat));
  r.upper_bound_max_degree = c + r.beta1_all_a;
  r.lower_bound_min_degree = -(c + r.beta1_all_b);
  r.degree_bounds_hold = r.zero || (r.max_degree <= r.upper_bound_max_degree &&
                                    r.min_degree >= r.lower_bound_min_degree);

  r.beta1_underlying_open = betti1(underlying_graph(d));
  {
    DiagramEditor ed(d);
    close_endpoints(ed, d);
    r.beta1_underlying_closed = betti1(underlying_graph(ed.freeze()));
  }
  if (!r.zero) {
    int excess = r.span - 2 * r.beta1_underlying_closed;
    r.crossing_lower_bound = excess <= 0 ? 0 : (excess + 2) / 3;
    r.crossing_bound_exceeds_diagram = r.crossing_lower_bound > c;
  }
  return r;
}

}  // namespace graphoid
