#include "graphoid/pi1.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <thread>

#include "graphoid/errors.hpp"

namespace graphoid {

namespace {

// Arcs end where the strand dives under a crossing and at every
// non-crossing site; they run straight through over-slots.
bool breaks_arc(const Diagram& d, int h) {
  if (d.site(d.site_of(h)).kind != SiteKind::Crossing) return true;
  return !d.is_over(h);
}

}  // namespace

GroupPresentation wirtinger(const Diagram& d) {
  d.require_valid();
  if (ribbon_genus(d) != 0)
    throw GraphoidError("not_classical_planar",
                        "the Wirtinger algorithm needs a planar diagram");
  const int H = d.half_edge_count();
  GroupPresentation p;
  std::vector<int> arc_of(H, -1);
  std::vector<char> departs(H, 0);  // even position in its arc's traversal

  auto extend = [&](std::vector<int>& seq, int idx, int cur) {
    // cur is a departure half; append the crossing-over continuation until
    // the strand breaks, returning the arrival half that ended the arc.
    for (;;) {
      seq.push_back(cur);
      arc_of[cur] = idx;
      departs[cur] = 1;
      int a = d.theta(cur);
      seq.push_back(a);
      arc_of[a] = idx;
      if (breaks_arc(d, a)) return a;
      cur = d.site(d.site_of(a)).rot[(d.slot_of(a) + 2) % 4];
    }
  };

  for (int h = 0; h < H; ++h) {
    if (arc_of[h] >= 0 || !breaks_arc(d, h)) continue;
    int idx = static_cast<int>(p.arc_halves.size());
    std::vector<int> seq;
    extend(seq, idx, h);
    p.arc_halves.push_back(std::move(seq));
    p.arc_closed.push_back(0);
  }
  // Remaining halves belong to closed all-over loops.
  for (int h = 0; h < H; ++h) {
    if (arc_of[h] >= 0) continue;
    int idx = static_cast<int>(p.arc_halves.size());
    std::vector<int> seq;
    int cur = h;
    for (;;) {
      seq.push_back(cur);
      arc_of[cur] = idx;
      departs[cur] = 1;
      int a = d.theta(cur);
      seq.push_back(a);
      arc_of[a] = idx;
      int dep = d.site(d.site_of(a)).rot[(d.slot_of(a) + 2) % 4];
      if (dep == h) break;
      cur = dep;
    }
    p.arc_halves.push_back(std::move(seq));
    p.arc_closed.push_back(1);
  }
  p.generator_count = static_cast<int>(p.arc_halves.size());

  for (int s = 0; s < d.site_count(); ++s) {
    const Site& site = d.site(s);
    if (site.kind == SiteKind::Crossing) {
      int i = site.over_even ? 0 : 1;  // over slots i, i+2
      int j = 1 - i;                   // under slots j, j+2
      int hu_in = site.rot[j], hu_out = site.rot[j + 2];
      int ho1 = site.rot[i], ho2 = site.rot[i + 2];
      int gin = arc_of[hu_in], gout = arc_of[hu_out], gov = arc_of[ho1];
      int s_in = departs[hu_in] ? -1 : 1;
      int s_out = departs[hu_out] ? 1 : -1;
      int o_d_slot = departs[ho1] ? i : i + 2;
      // Positive conjugation when the over strand departs through the slot
      // counterclockwise-next from the under strand's exit.
      int eps = o_d_slot % 4 == (j + 3) % 4 ? 1 : -1;
      p.relators.push_back(
          {{gov, eps}, {gin, s_in}, {gov, -eps}, {gout, -s_out}});
    } else if (site.kind == SiteKind::Vertex && site.degree() > 0) {
      std::vector<std::pair<int, int>> rel;
      for (int h : site.rot) rel.push_back({arc_of[h], departs[h] ? 1 : -1});
      p.relators.push_back(std::move(rel));
    }
  }
  return p;
}

std::string presentation_text(const GroupPresentation& p) {
  std::string out = "<";
  for (int g = 0; g < p.generator_count; ++g) {
    if (g) out += ", ";
    out += "x" + std::to_string(g);
  }
  out += " | ";
  for (size_t r = 0; r < p.relators.size(); ++r) {
    if (r) out += ", ";
    for (size_t k = 0; k < p.relators[r].size(); ++k) {
      if (k) out += " ";
      out += "x" + std::to_string(p.relators[r][k].first);
      if (p.relators[r][k].second < 0) out += "^-1";
    }
  }
  out += ">";
  return out;
}

std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> m) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  auto abs_of = [](const Int& v) { return v < 0 ? Int(-v) : v; };
  int t = 0;
  while (t < rows && t < cols) {
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (m[i][j] != 0 && (pi < 0 || abs_of(m[i][j]) < best)) {
          best = abs_of(m[i][j]);
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    std::swap(m[t], m[pi]);
    for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        Int q = m[i][t] / m[t][t];
        for (int j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {  // remainder is strictly smaller; re-pivot on it
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        Int q = m[t][j] / m[t][t];
        for (int i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
          clean = false;
        }
      }
      if (clean) {
        // Enforce the divisibility chain before moving on.
        for (int i = t + 1; i < rows && clean; ++i)
          for (int j = t + 1; j < cols && clean; ++j)
            if (m[i][j] % m[t][t] != 0) {
              for (int k = t; k < cols; ++k) m[t][k] += m[i][k];
              clean = false;
            }
      }
    }
    ++t;
  }
  std::vector<Int> diag;
  for (int i = 0; i < std::min(rows, cols); ++i) diag.push_back(abs_of(m[i][i]));
  return diag;
}

Abelianization abelianization(const GroupPresentation& p) {
  Abelianization out;
  if (p.relators.empty()) {
    out.rank = p.generator_count;
    return out;
  }
  std::vector<std::vector<Int>> m(p.relators.size(),
                                  std::vector<Int>(p.generator_count, 0));
  for (size_t r = 0; r < p.relators.size(); ++r)
    for (auto [g, e] : p.relators[r]) m[r][g] += e;
  if (p.generator_count == 0) {
    out.rank = 0;
    return out;
  }
  std::vector<Int> diag = smith_diagonal(std::move(m));
  int nonzero = 0;
  for (const Int& v : diag)
    if (v != 0) {
      ++nonzero;
      if (v > 1) out.torsion.push_back(v);
    }
  out.rank = p.generator_count - nonzero;
  return out;
}

// ---- finite groups ----

FiniteGroup FiniteGroup::from_permutations(const std::string& name,
                                           const std::vector<std::vector<int>>& gens) {
  int n = gens.empty() ? 1 : static_cast<int>(gens[0].size());
  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elems;
  index[identity] = 0;
  elems.push_back(identity);
  for (size_t q = 0; q < elems.size(); ++q) {
    for (const auto& g : gens) {
      std::vector<int> prod(n);
      for (int k = 0; k < n; ++k) prod[k] = g[elems[q][k]];
      if (index.insert({prod, static_cast<int>(elems.size())}).second)
        elems.push_back(prod);
    }
  }
  FiniteGroup out;
  out.name = name;
  out.order = static_cast<int>(elems.size());
  out.mul.assign(out.order, std::vector<int>(out.order, 0));
  for (int a = 0; a < out.order; ++a)
    for (int b = 0; b < out.order; ++b) {
      std::vector<int> prod(n);
      for (int k = 0; k < n; ++k) prod[k] = elems[a][elems[b][k]];
      out.mul[a][b] = index.at(prod);
    }
  out.inv.assign(out.order, 0);
  for (int a = 0; a < out.order; ++a)
    for (int b = 0; b < out.order; ++b)
      if (out.mul[a][b] == 0) out.inv[a] = b;
  return out;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  std::vector<int> shift(n);
  for (int k = 0; k < n; ++k) shift[k] = (k + 1) % n;
  return from_permutations("Z" + std::to_string(n), {shift});
}

FiniteGroup FiniteGroup::dihedral(int n) {
  std::vector<int> rot(n), refl(n);
  for (int k = 0; k < n; ++k) {
    rot[k] = (k + 1) % n;
    refl[k] = (n - k) % n;
  }
  return from_permutations("D" + std::to_string(n), {rot, refl});
}

FiniteGroup FiniteGroup::symmetric(int n) {
  std::vector<int> swap01(n), cyc(n);
  std::iota(swap01.begin(), swap01.end(), 0);
  if (n >= 2) std::swap(swap01[0], swap01[1]);
  for (int k = 0; k < n; ++k) cyc[k] = (k + 1) % n;
  return from_permutations("S" + std::to_string(n), {swap01, cyc});
}

FiniteGroup FiniteGroup::alternating(int n) {
  std::vector<std::vector<int>> gens;
  for (int k = 0; k + 2 < n; ++k) {
    std::vector<int> c(n);
    std::iota(c.begin(), c.end(), 0);
    c[k] = k + 1;
    c[k + 1] = k + 2;
    c[k + 2] = k;
    gens.push_back(c);
  }
  if (gens.empty()) {
    std::vector<int> id(std::max(n, 1));
    std::iota(id.begin(), id.end(), 0);
    gens.push_back(id);
  }
  return from_permutations("A" + std::to_string(n), gens);
}

std::optional<FiniteGroup> FiniteGroup::by_name(const std::string& name) {
  if (name.size() < 2) return std::nullopt;
  char kind = name[0];
  int n = 0;
  for (size_t k = 1; k < name.size(); ++k) {
    if (name[k] < '0' || name[k] > '9') return std::nullopt;
    n = n * 10 + (name[k] - '0');
  }
  if (n < 1 || n > 12) return std::nullopt;
  switch (kind) {
    case 'S': return symmetric(n);
    case 'A': return alternating(n);
    case 'D': return dihedral(n);
    case 'Z': return cyclic(n);
    default: return std::nullopt;
  }
}

// ---- hom counting ----

namespace {

struct HomProblem {
  int gens = 0;
  std::vector<std::vector<std::pair<int, int>>> rels;
};

// Drop empty relators; repeatedly eliminate any generator occurring exactly
// once over all relators (its relator determines it uniquely, so the hom
// count is unchanged), then reindex the survivors.
HomProblem tietze_reduce(const GroupPresentation& p) {
  std::vector<std::vector<std::pair<int, int>>> rels;
  for (const auto& r : p.relators)
    if (!r.empty()) rels.push_back(r);
  std::vector<char> removed(p.generator_count, 0);
  for (;;) {
    std::vector<int> occ(p.generator_count, 0), where(p.generator_count, -1);
    for (size_t ri = 0; ri < rels.size(); ++ri)
      for (auto [g, e] : rels[ri]) {
        ++occ[g];
        where[g] = static_cast<int>(ri);
      }
    int victim = -1;
    for (int g = 0; g < p.generator_count; ++g)
      if (!removed[g] && occ[g] == 1) {
        victim = g;
        break;
      }
    if (victim < 0) break;
    removed[victim] = 1;
    rels.erase(rels.begin() + where[victim]);
  }
  HomProblem out;
  std::vector<int> remap(p.generator_count, -1);
  for (int g = 0; g < p.generator_count; ++g)
    if (!removed[g]) remap[g] = out.gens++;
  for (auto& r : rels) {
    for (auto& [g, e] : r) g = remap[g];
    out.rels.push_back(std::move(r));
  }
  return out;
}

struct HomSearch {
  const FiniteGroup& G;
  const HomProblem& P;
  std::vector<int> order;                     // generator assignment order
  std::vector<std::vector<int>> check_after;  // relators complete per step
  std::atomic<long long> nodes{0};
  long long budget;

  HomSearch(const FiniteGroup& g, const HomProblem& p, long long b)
      : G(g), P(p), budget(b) {
    int n = P.gens;
    std::vector<char> chosen(n, 0);
    std::vector<int> occ(n, 0);
    for (const auto& r : P.rels)
      for (auto [gen, e] : r) ++occ[gen];
    check_after.resize(n);
    std::vector<char> rel_done(P.rels.size(), 0);
    for (int step = 0; step < n; ++step) {
      int best = -1, best_complete = -1, best_occ = -1;
      for (int g = 0; g < n; ++g) {
        if (chosen[g]) continue;
        int complete = 0;
        for (size_t ri = 0; ri < P.rels.size(); ++ri) {
          if (rel_done[ri]) continue;
          bool all = true;
          for (auto [gen, e] : P.rels[ri])
            if (gen != g && !chosen[gen]) {
              all = false;
              break;
            }
          if (all) ++complete;
        }
        if (complete > best_complete ||
            (complete == best_complete && occ[g] > best_occ)) {
          best = g;
          best_complete = complete;
          best_occ = occ[g];
        }
      }
      chosen[best] = 1;
      order.push_back(best);
      for (size_t ri = 0; ri < P.rels.size(); ++ri) {
        if (rel_done[ri]) continue;
        bool all = true;
        for (auto [gen, e] : P.rels[ri])
          if (!chosen[gen]) {
            all = false;
            break;
          }
        if (all) {
          rel_done[ri] = 1;
          check_after[step].push_back(static_cast<int>(ri));
        }
      }
    }
  }

  bool relator_holds(const std::vector<std::pair<int, int>>& rel,
                     const std::vector<int>& val) const {
    int v = 0;
    for (auto [g, e] : rel) {
      int x = val[g];
      if (e < 0) x = G.inv[x];
      v = G.mul[v][x];
    }
    return v == 0;
  }

  long long dfs(int step, std::vector<int>& val, int lo, int hi) {
    if (step == static_cast<int>(order.size())) return 1;
    long long total = 0;
    int from = step == 0 ? lo : 0;
    int to = step == 0 ? hi : G.order;
    for (int v = from; v < to; ++v) {
      if (nodes.fetch_add(1, std::memory_order_relaxed) >= budget)
        throw BudgetExceeded("hom-count search exceeded " + std::to_string(budget) + " nodes");
      val[order[step]] = v;
      bool ok = true;
      for (int ri : check_after[step])
        if (!relator_holds(P.rels[ri], val)) {
          ok = false;
          break;
        }
      if (ok) total += dfs(step + 1, val, lo, hi);
    }
    return total;
  }
};

}  // namespace

long long count_homs(const GroupPresentation& p, const FiniteGroup& g, HomCountOptions opt) {
  for (const auto& r : p.relators)
    for (auto [gen, e] : r)
      if (gen < 0 || gen >= p.generator_count)
        throw GraphoidError("presentation", "relator references unknown generator");
  HomProblem prob = tietze_reduce(p);
  if (prob.gens == 0) return 1;
  HomSearch search(g, prob, opt.budget);
  int workers = std::max(1, std::min(opt.workers, g.order));
  if (workers == 1) {
    std::vector<int> val(prob.gens, 0);
    return search.dfs(0, val, 0, g.order);
  }
  std::vector<long long> partial(workers, 0);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        int lo = g.order * w / workers;
        int hi = g.order * (w + 1) / workers;
        std::vector<int> val(prob.gens, 0);
        partial[w] = search.dfs(0, val, lo, hi);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  long long total = 0;
  for (long long v : partial) total += v;
  return total;
}

}  // namespace graphoid
