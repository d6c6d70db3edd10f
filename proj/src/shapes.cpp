#include "bibdopt/shapes.hpp"

#include <algorithm>

#include "bibdopt/errors.hpp"

namespace bibdopt {

Design path_design(int v) {
  std::vector<Block> blocks;
  for (int i = 0; i + 1 < v; ++i) blocks.push_back({i, i + 1});
  return Design(v, 2, std::move(blocks));
}

Design star_design(int v) {
  std::vector<Block> blocks;
  for (int i = 1; i < v; ++i) blocks.push_back({0, i});
  return Design(v, 2, std::move(blocks));
}

Design cycle_design(int v) { return fan_cycle_design(v, v); }

Design fan_cycle_design(int v, int c) {
  if (c < 3 || c > v) throw ValidationError("need 3 <= c <= v");
  std::vector<Block> blocks;
  for (int i = 0; i < c; ++i) {
    const int j = (i + 1) % c;
    blocks.push_back({std::min(i, j), std::max(i, j)});
  }
  for (int i = c; i < v; ++i) blocks.push_back({0, i});
  return Design(v, 2, std::move(blocks));
}

}  // namespace bibdopt
