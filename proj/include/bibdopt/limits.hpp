#pragma once

#include <cstdint>

namespace bibdopt {

// Size caps for the exhaustive routines. These are configuration, not
// mathematics: every routine stays exact below its cap and refuses above it.
struct Limits {
  int forest_oracle_max_vertices = 12;
  // Principal-minor summation is used up to this many vertices; above it the
  // fraction-free characteristic polynomial takes over.
  int minor_route_max_vertices = 12;
  int exact_canonical_max_vertices = 10;
  int regular_enumeration_max_vertices = 10;
  int graph_enumeration_max_vertices = 8;
  std::uint64_t raw_candidate_cap = 10'000'000;
  std::uint64_t crossover_evaluation_cap = 10'000'000;
};

}  // namespace bibdopt
