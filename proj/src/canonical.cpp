#include "bibdopt/canonical.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "bibdopt/design.hpp"
#include "bibdopt/spectrum.hpp"

namespace bibdopt {

namespace {

using Colors = std::vector<int>;

// Equitable refinement: split cells by (color, diagonal weight, multiset of
// (neighbour color, weight)) until stable. New colors are ranks of the sorted
// signatures, so the result depends only on the isomorphism class.
void refine(const IntMatrix& w, Colors& colors) {
  const int n = w.size();
  int count = n == 0 ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
  std::vector<std::vector<std::int64_t>> sig(static_cast<std::size_t>(n));
  std::vector<std::pair<int, std::int64_t>> nbrs;
  while (true) {
    for (int y = 0; y < n; ++y) {
      nbrs.clear();
      for (int z = 0; z < n; ++z)
        if (z != y && w(y, z) != 0) nbrs.emplace_back(colors[z], w(y, z));
      std::sort(nbrs.begin(), nbrs.end());
      auto& s = sig[y];
      s.clear();
      s.push_back(colors[y]);
      s.push_back(w(y, y));
      for (const auto& [c, x] : nbrs) {
        s.push_back(c);
        s.push_back(x);
      }
    }
    auto distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int y = 0; y < n; ++y)
      colors[y] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[y]) - distinct.begin());
    const int next = static_cast<int>(distinct.size());
    if (next == count) return;
    count = next;
  }
}

void search(const IntMatrix& w, Colors colors, const std::function<void(std::span<const int>)>& visit) {
  refine(w, colors);
  const int n = w.size();
  std::vector<int> sizes(static_cast<std::size_t>(n), 0);
  for (int c : colors) ++sizes[c];
  const auto target = std::find_if(sizes.begin(), sizes.end(), [](int s) { return s > 1; });
  if (target == sizes.end()) {
    visit(colors);
    return;
  }
  const int cell = static_cast<int>(target - sizes.begin());
  for (int x = 0; x < n; ++x) {
    if (colors[x] != cell) continue;
    Colors child = colors;
    for (int y = 0; y < n; ++y) {
      if (colors[y] > cell || (colors[y] == cell && y != x)) ++child[y];
    }
    search(w, std::move(child), visit);
  }
}

}  // namespace

void for_each_refined_labeling(const IntMatrix& weights, const std::function<void(std::span<const int>)>& visit) {
  search(weights, Colors(static_cast<std::size_t>(weights.size()), 0), visit);
}

Graph canonical_form(const Graph& g) {
  std::optional<Graph> best;
  for_each_refined_labeling(g.adjacency(), [&](std::span<const int> perm) {
    Graph candidate = g.relabeled(perm);
    if (!best || candidate < *best) best = std::move(candidate);
  });
  return *best;
}

std::string canonical_key(const Design& d, const Limits& limits) {
  std::ostringstream key;
  key << "v" << d.v() << "k" << d.k() << ":";
  if (d.v() > limits.exact_canonical_max_vertices) {
    auto reps = d.replications();
    std::sort(reps.begin(), reps.end());
    key << "fp:";
    for (int r : reps) key << r << '.';
    for (const auto& s : sym_polys(laplacian(d)).s) key << ',' << s.get_str();
    return key.str();
  }

  std::optional<std::vector<Block>> best;
  std::vector<Block> candidate;
  for_each_refined_labeling(concurrence_matrix(d), [&](std::span<const int> perm) {
    candidate = d.blocks();
    for (auto& block : candidate) {
      for (int& t : block) t = perm[t];
      std::sort(block.begin(), block.end());
    }
    std::sort(candidate.begin(), candidate.end());
    if (!best || candidate < *best) best = candidate;
  });
  bool first_block = true;
  for (const auto& block : *best) {
    key << (first_block ? "" : ",");
    first_block = false;
    for (std::size_t i = 0; i < block.size(); ++i) key << (i ? "-" : "") << block[i] + 1;
  }
  return key.str();
}

}  // namespace bibdopt
