#pragma once

#include <utility>
#include <vector>

#include "graphoid/laurent.hpp"

namespace graphoid {

// Undirected multigraph: loops and parallel edges allowed.  Vertices are the
// integers 0..vertex_count-1; edges are endpoint pairs (u, v) with u == v for
// a loop.  Edge indices into `edges` are stable identifiers.
struct Multigraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  int add_vertex() { return vertex_count++; }
  int add_edge(int u, int v) {
    edges.emplace_back(u, v);
    return edge_count() - 1;
  }
};

// Connected-component label (0-based, in order of first vertex) per vertex.
std::vector<int> component_labels(const Multigraph& g);
int betti0(const Multigraph& g);
// First Betti number: E - V + beta0.
int betti1(const Multigraph& g);
// Indices of bridge edges.  Parallel edges are handled correctly (neither of
// two parallel edges is a bridge); loops are never bridges.
std::vector<int> bridge_edges(const Multigraph& g);
bool has_bridge(const Multigraph& g);

// Contract edge `e` (merge endpoints, drop the edge, keep everything else;
// parallel copies become loops).  Contracting a loop just drops it.
Multigraph contracted(const Multigraph& g, int e);
// Delete edge `e` (keep all vertices).
Multigraph deleted(const Multigraph& g, int e);

// Flow-type polynomial of a multigraph:
//   H(G) = sum over edge subsets F of (-1)^{beta0(V, F)} * sigma'^{beta1(V, F)}
// with sigma' = -A - 2 - A^{-1}.  Identities used throughout the test suite:
//   H(empty graph) = 1, H(single vertex) = -1, H(vertex + loop) = sigma,
//   H(G) = 0 whenever G has a bridge,
//   H(G) = H(G/e) + H(G-e) for every non-loop edge e,
//   H(G with loop l) = -sigma * H(G - l),
//   H(G ⊔ single vertex) = -H(G).

// Direct 2^E subset enumeration.  Throws BudgetExceeded above max_edges.
LaurentPoly flow_poly_brute(const Multigraph& g, int max_edges = 24);
// Deletion-contraction with loop/isolated-vertex factoring and a bridge
// cutoff (any bridge forces the value 0).
LaurentPoly flow_poly_dc(const Multigraph& g);

}  // namespace graphoid
