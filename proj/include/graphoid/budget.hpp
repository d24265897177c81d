#pragma once

namespace graphoid {

// Size limits for the exponential algorithms.  The environment variable
// GRAPHOID_BUDGET (an integer) overrides max_crossings; CLI flags override
// individual fields.
struct Budget {
  // Hard ceiling on crossing count for any polynomial evaluation.
  int max_crossings = 14;
  // The 3^c state-sum route is only auto-selected up to this many crossings
  // (each of the 3^c states costs another 2^E subset enumeration).
  int statesum_max_crossings = 6;
  // The 2^E subset evaluation of the flow polynomial.
  int brute_flow_max_edges = 18;
  // Marked-edge expansion limits (3^c states, 2^E subsets with face tracing).
  int gyamada_max_crossings = 10;
  int gyamada_max_edges = 18;
  // Move-search limits.
  long long search_max_steps = 100000;
  int search_crossing_headroom = 2;  // explore up to c(start) + headroom
  // Homomorphism counting cutoff (candidate assignments tried).
  long long hom_count_budget = 4000000;

  static Budget from_env();
};

}  // namespace graphoid
