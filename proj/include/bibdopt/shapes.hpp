#pragma once

#include "bibdopt/design.hpp"

namespace bibdopt {

// Named k = 2 designs on treatments 0..v-1.

Design path_design(int v);
Design star_design(int v);
Design cycle_design(int v);
/// A c-cycle on 0..c-1 with vertex 0 also joined to every other treatment.
Design fan_cycle_design(int v, int c);

}  // namespace bibdopt
