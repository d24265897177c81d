#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphoid/diagram.hpp"
#include "graphoid/laurent.hpp"

namespace graphoid {

// Finitely presented group.  Relators are words of (generator, +1/-1)
// letters whose product is the identity.
struct GroupPresentation {
  int generator_count = 0;
  std::vector<std::vector<std::pair<int, int>>> relators;
  // Provenance for diagram-born presentations: per generator the traversed
  // half-edge sequence of its arc, recording the chosen orientation.
  std::vector<std::vector<int>> arc_halves;
  std::vector<char> arc_closed;
};

// Wirtinger presentation of the complement: one generator per over-arc
// (strand segments break where they pass under a crossing and at every
// non-crossing site), one conjugation relator per crossing, one rotation-
// order relator per flat vertex.  Requires a planar diagram.
GroupPresentation wirtinger(const Diagram& d);

std::string presentation_text(const GroupPresentation& p);

struct Abelianization {
  int rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1 in divisibility order
};
Abelianization abelianization(const GroupPresentation& p);

// Smith normal form diagonal (including zeros) of an integer matrix.
std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> m);

// Small finite group as a multiplication table; element 0 is the identity.
struct FiniteGroup {
  std::string name;
  int order = 0;
  std::vector<std::vector<int>> mul;
  std::vector<int> inv;

  static FiniteGroup from_permutations(const std::string& name,
                                       const std::vector<std::vector<int>>& gens);
  static FiniteGroup cyclic(int n);
  static FiniteGroup dihedral(int n);  // order 2n
  static FiniteGroup symmetric(int n);
  static FiniteGroup alternating(int n);
  // "S3", "A4", "D4" (dihedral of the n-gon), "Z6".
  static std::optional<FiniteGroup> by_name(const std::string& name);
};

struct HomCountOptions {
  long long budget = 4000000;  // search-node allowance
  int workers = 1;
};

// Exact number of homomorphisms presentation -> g by pruned backtracking
// (generators occurring exactly once are eliminated first).
long long count_homs(const GroupPresentation& p, const FiniteGroup& g, HomCountOptions opt = {});

}  // namespace graphoid
