#include "graphoid/multigraph.hpp"

#include <algorithm>
#include <numeric>

#include "graphoid/errors.hpp"

namespace graphoid {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

std::vector<int> component_labels(const Multigraph& g) {
  Dsu dsu(g.vertex_count);
  for (const auto& [u, v] : g.edges) dsu.unite(u, v);
  std::vector<int> label(g.vertex_count, -1);
  int next = 0;
  for (int v = 0; v < g.vertex_count; ++v) {
    int r = dsu.find(v);
    if (label[r] == -1) label[r] = next++;
    label[v] = label[r];
  }
  return label;
}

int betti0(const Multigraph& g) {
  auto labels = component_labels(g);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

int betti1(const Multigraph& g) { return g.edge_count() - g.vertex_count + betti0(g); }

std::vector<int> bridge_edges(const Multigraph& g) {
  // Low-link DFS; a tree edge is a bridge iff no back edge (including a
  // parallel copy of the tree edge itself) jumps over it.
  std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count);
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges[e];
    if (u == v) continue;  // loops are never bridges
    adj[u].emplace_back(v, e);
    adj[v].emplace_back(u, e);
  }
  std::vector<int> disc(g.vertex_count, -1), low(g.vertex_count, 0);
  std::vector<int> bridges;
  int timer = 0;
  // Iterative DFS: frame = (vertex, incoming edge id, adjacency cursor).
  struct Frame {
    int v;
    int in_edge;
    size_t cursor = 0;
  };
  for (int start = 0; start < g.vertex_count; ++start) {
    if (disc[start] != -1) continue;
    std::vector<Frame> stack{{start, -1}};
    disc[start] = low[start] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.cursor < adj[f.v].size()) {
        auto [to, eid] = adj[f.v][f.cursor++];
        if (eid == f.in_edge) continue;
        if (disc[to] != -1) {
          low[f.v] = std::min(low[f.v], disc[to]);
        } else {
          disc[to] = low[to] = timer++;
          stack.push_back({to, eid});
        }
      } else {
        int v = f.v;
        int in_edge = f.in_edge;
        stack.pop_back();
        if (!stack.empty()) {
          int parent = stack.back().v;
          low[parent] = std::min(low[parent], low[v]);
          if (low[v] > disc[parent]) bridges.push_back(in_edge);
        }
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

bool has_bridge(const Multigraph& g) { return !bridge_edges(g).empty(); }

Multigraph contracted(const Multigraph& g, int e) {
  auto [a, b] = g.edges[e];
  Multigraph out;
  std::vector<int> remap(g.vertex_count);
  int next = 0;
  for (int v = 0; v < g.vertex_count; ++v) {
    if (v == std::max(a, b) && a != b) {
      remap[v] = -1;  // filled below: merged into min(a, b)
    } else {
      remap[v] = next++;
    }
  }
  if (a != b) remap[std::max(a, b)] = remap[std::min(a, b)];
  out.vertex_count = next;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (i == e) continue;
    out.add_edge(remap[g.edges[i].first], remap[g.edges[i].second]);
  }
  return out;
}

Multigraph deleted(const Multigraph& g, int e) {
  Multigraph out;
  out.vertex_count = g.vertex_count;
  for (int i = 0; i < g.edge_count(); ++i)
    if (i != e) out.edges.push_back(g.edges[i]);
  return out;
}

LaurentPoly flow_poly_brute(const Multigraph& g, int max_edges) {
  int m = g.edge_count();
  if (m > max_edges)
    throw BudgetExceeded("flow polynomial brute force limited to " + std::to_string(max_edges) +
                         " edges, got " + std::to_string(m));
  LaurentPoly total;
  const LaurentPoly sp = sigma_prime();
  // Cache sigma'^k.
  std::vector<LaurentPoly> sp_pow{LaurentPoly(1)};
  for (int k = 1; k <= m; ++k) sp_pow.push_back(sp_pow.back() * sp);
  for (unsigned long long mask = 0; mask < (1ull << m); ++mask) {
    Dsu dsu(g.vertex_count);
    int kept = 0;
    for (int e = 0; e < m; ++e) {
      if (mask >> e & 1ull) {
        ++kept;
        dsu.unite(g.edges[e].first, g.edges[e].second);
      }
    }
    int b0 = 0;
    for (int v = 0; v < g.vertex_count; ++v)
      if (dsu.find(v) == v) ++b0;
    int b1 = kept - g.vertex_count + b0;
    LaurentPoly term = sp_pow[b1];
    if (b0 % 2 == 1) term = -term;
    total += term;
  }
  return total;
}

namespace {

LaurentPoly flow_dc_rec(Multigraph g) {
  // Factor out loops, then isolated vertices, then split components.
  LaurentPoly factor(1);
  const LaurentPoly minus_sigma = -sigma();
  for (int e = g.edge_count() - 1; e >= 0; --e) {
    if (g.edges[e].first == g.edges[e].second) {
      factor *= minus_sigma;
      g.edges.erase(g.edges.begin() + e);
    }
  }
  std::vector<int> degree(g.vertex_count, 0);
  for (const auto& [u, v] : g.edges) {
    ++degree[u];
    ++degree[v];
  }
  int isolated = 0;
  std::vector<int> remap(g.vertex_count);
  int next = 0;
  for (int v = 0; v < g.vertex_count; ++v) {
    if (degree[v] == 0) {
      ++isolated;
      remap[v] = -1;
    } else {
      remap[v] = next++;
    }
  }
  if (isolated % 2 == 1) factor = -factor;
  if (next != g.vertex_count) {
    for (auto& [u, v] : g.edges) {
      u = remap[u];
      v = remap[v];
    }
    g.vertex_count = next;
  }
  if (g.edges.empty()) return factor;  // empty graph contributes 1

  auto labels = component_labels(g);
  int comps = *std::max_element(labels.begin(), labels.end()) + 1;
  if (comps > 1) {
    LaurentPoly prod = factor;
    for (int c = 0; c < comps; ++c) {
      Multigraph sub;
      std::vector<int> sub_id(g.vertex_count, -1);
      for (int v = 0; v < g.vertex_count; ++v)
        if (labels[v] == c) sub_id[v] = sub.add_vertex();
      for (const auto& [u, v] : g.edges)
        if (labels[u] == c) sub.add_edge(sub_id[u], sub_id[v]);
      prod *= flow_dc_rec(std::move(sub));
    }
    return prod;
  }

  if (has_bridge(g)) return LaurentPoly();

  // Deletion-contraction on the first edge (non-loop by construction).
  LaurentPoly a = flow_dc_rec(contracted(g, 0));
  LaurentPoly b = flow_dc_rec(deleted(g, 0));
  return factor * (a + b);
}

}  // namespace

LaurentPoly flow_poly_dc(const Multigraph& g) { return flow_dc_rec(g); }

}  // namespace graphoid
