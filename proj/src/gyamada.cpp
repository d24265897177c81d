#include "graphoid/gyamada.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "graphoid/errors.hpp"
#include "graphoid/yamada.hpp"

namespace graphoid {

namespace {

// beta_0 of the spanning subdiagram keeping only the flagged edges; sites
// incident to nothing count one component each.
int kept_component_count(const Diagram& d, const std::vector<char>& kept) {
  std::vector<int> parent(d.site_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int components = d.site_count();
  for (int e = 0; e < d.edge_count(); ++e) {
    if (!kept[e]) continue;
    auto [lo, hi] = d.edge_list()[e];
    int a = find(d.site_of(lo));
    int b = find(d.site_of(hi));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

}  // namespace

LaurentPoly marked_expansion(const Diagram& flat, const Budget& budget) {
  if (flat.crossing_count() > 0)
    throw GraphoidError("bad_argument", "marked_expansion requires a crossingless diagram");
  Diagram n = normalized(flat);
  int e = n.edge_count();
  if (e > budget.gyamada_max_edges)
    throw BudgetExceeded("marked-edge expansion over " + std::to_string(e) +
                         " edges exceeds the edge budget " +
                         std::to_string(budget.gyamada_max_edges));
  LaurentPoly total;
  std::vector<char> kept(e, 0);
  for (unsigned long mask = 0; mask < (1ul << e); ++mask) {
    for (int i = 0; i < e; ++i) kept[i] = static_cast<char>((mask >> i) & 1u);
    int bc = boundary_component_count(n, kept);
    int k = kept_component_count(n, kept);
    LaurentPoly term = sigma_dprime().pow(static_cast<unsigned>(bc - k));
    if (bc % 2)
      total -= term;
    else
      total += term;
  }
  return total;
}

LaurentPoly gyamada(const Diagram& d, const Budget& budget) {
  d.require_valid();
  int c = d.crossing_count();
  if (c > budget.gyamada_max_crossings)
    throw BudgetExceeded("diagram has " + std::to_string(c) +
                         " crossings, over the marked-expansion budget " +
                         std::to_string(budget.gyamada_max_crossings));
  long long patterns = 1;
  for (int i = 0; i < c; ++i) patterns *= 3;
  LaurentPoly total;
  std::vector<Smoothing> rho(c, Smoothing::A);
  for (long long p = 0; p < patterns; ++p) {
    long long t = p;
    for (int i = 0; i < c; ++i) {
      rho[i] = static_cast<Smoothing>(t % 3);
      t /= 3;
    }
    ResolvedState st = resolve_state(d, rho);
    total += marked_expansion(st.flat, budget).shifted(st.a_count - st.b_count);
  }
  if (d.open_strand_count() % 2) total = -total;
  return total;
}

NonclassicalityReport nonclassicality_test(const Diagram& d, const Budget& budget) {
  NonclassicalityReport rep;
  rep.open_strands = d.open_strand_count();
  YamadaOptions options;
  options.budget = budget;
  rep.state_sum = yamada(d, options);
  rep.marked = gyamada(d, budget);
  rep.calibrated = rep.open_strands % 2 ? -rep.state_sum : rep.state_sum;
  rep.certified = rep.marked != rep.calibrated;
  return rep;
}

}  // namespace graphoid
