#include "graphoid/budget.hpp"

#include <cstdlib>
#include <string>

namespace graphoid {

Budget Budget::from_env() {
  Budget b;
  if (const char* env = std::getenv("GRAPHOID_BUDGET")) {
    try {
      int v = std::stoi(env);
      if (v > 0) {
        b.max_crossings = v;
        if (b.statesum_max_crossings > v) b.statesum_max_crossings = v;
        if (b.gyamada_max_crossings > v) b.gyamada_max_crossings = v;
      }
    } catch (...) {
      // Unparseable values are ignored; the defaults stand.
    }
  }
  return b;
}

}  // namespace graphoid
