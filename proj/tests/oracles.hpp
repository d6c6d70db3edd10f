#pragma once

// Slow, obviously-correct reference computations used only by tests.

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <vector>

#include "bibdopt/graph.hpp"
#include "bibdopt/integer.hpp"
#include "bibdopt/matrix.hpp"
#include "bibdopt/optimality.hpp"
#include "bibdopt/spectrum.hpp"

namespace oracle {

using bibdopt::Integer;
using bibdopt::IntMatrix;
using bibdopt::Rational;

inline Integer leibniz_det(const IntMatrix& m, const std::vector<int>& rows) {
  std::vector<int> perm(rows);
  Integer total = 0;
  do {
    Integer term = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) term *= static_cast<long>(m(rows[i], perm[i]));
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    total += inversions % 2 ? Integer(-term) : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// e_j = sum of j x j principal minors, by Leibniz expansion.
inline std::vector<Integer> principal_minor_sums(const IntMatrix& m) {
  const int n = m.size();
  std::vector<Integer> e(static_cast<std::size_t>(n) + 1, 0);
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    std::vector<int> rows;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1U) rows.push_back(i);
    e[rows.size()] += rows.empty() ? Integer(1) : leibniz_det(m, rows);
  }
  return e;
}

/// Elementary symmetric polynomials of integer roots.
inline std::vector<Integer> esym(const std::vector<long>& roots) {
  std::vector<Integer> e{1};
  for (long x : roots) {
    e.push_back(0);
    for (std::size_t j = e.size() - 1; j > 0; --j) e[j] += e[j - 1] * x;
  }
  return e;
}

/// ExactSpectrum of v - 1 given non-trivial eigenvalues.
inline bibdopt::ExactSpectrum spectrum_of(const std::vector<long>& nontrivial) {
  const auto e = esym(nontrivial);
  return {static_cast<int>(nontrivial.size()) + 1, e};
}

inline Rational a_from_eigen(const std::vector<long>& rho, long v, long y) {
  Rational sum = 0;
  for (long x : rho) {
    if (v * y + x == 0) return 0;
    sum += Rational(1, v * y + x);
  }
  Rational out = Rational(static_cast<long>(rho.size())) / sum;
  out.canonicalize();
  return out;
}

inline Integer d_from_eigen(const std::vector<long>& rho, long v, long y) {
  Integer out = 1;
  for (long x : rho) out *= v * y + x;
  return out;
}

/// Connected components of the edge subset `mask` of `edges`, by BFS.
inline int components(int v, const std::vector<bibdopt::Edge>& edges, unsigned long mask) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(v));
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (mask >> i & 1UL) {
      adj[edges[i].u].push_back(edges[i].w);
      adj[edges[i].w].push_back(edges[i].u);
    }
  std::vector<bool> seen(static_cast<std::size_t>(v), false);
  int count = 0;
  for (int s = 0; s < v; ++s) {
    if (seen[s]) continue;
    ++count;
    std::queue<int> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int y : adj[x])
        if (!seen[y]) {
          seen[y] = true;
          q.push(y);
        }
    }
  }
  return count;
}

/// Spanning trees of a multigraph by testing every (v-1)-edge subset.
inline Integer spanning_trees(const bibdopt::Multigraph& g) {
  const auto& edges = g.edges();
  const int v = g.vertex_count();
  Integer count = 0;
  for (unsigned long mask = 0; mask < (1UL << edges.size()); ++mask)
    if (__builtin_popcountl(mask) == v - 1 && components(v, edges, mask) == 1) ++count;
  return count;
}

/// Last integer y in [0, horizon] where the winner falls behind, plus one.
inline long brute_crossover(const bibdopt::ExactSpectrum& w, const bibdopt::ExactSpectrum& l, bibdopt::Criterion c,
                            long horizon, long step = 1) {
  long y_star = 0;
  for (long y = 0; y <= horizon; ++y)
    if (bibdopt::criterion_value(w, Integer(y * step), c) < bibdopt::criterion_value(l, Integer(y * step), c))
      y_star = y + 1;
  return y_star;
}

inline bibdopt::Graph random_graph(std::mt19937_64& rng, int v) {
  bibdopt::Graph g(v);
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b)
      if (rng() & 1U) g.add_edge(a, b);
  return g;
}

inline std::vector<int> random_perm(std::mt19937_64& rng, int v) {
  std::vector<int> p(static_cast<std::size_t>(v));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle
