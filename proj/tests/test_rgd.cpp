#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "bibdopt/canonical.hpp"
#include "bibdopt/design.hpp"
#include "bibdopt/errors.hpp"
#include "bibdopt/rgd.hpp"
#include "bibdopt/shapes.hpp"
#include "bibdopt/spectrum.hpp"
#include "oracles.hpp"

using namespace bibdopt;

namespace {

Graph prism() {
  Graph g(6);
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}})
    g.add_edge(a, b);
  return g;
}

Graph cycle(int v) {
  Graph g(v);
  for (int i = 0; i < v; ++i) g.add_edge(i, (i + 1) % v);
  return g;
}

Graph complete(int v) {
  Graph g(v);
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b) g.add_edge(a, b);
  return g;
}

// Induced three-vertex subsets with exactly two edges, by direct count.
long v_subgraphs_brute(const Graph& g) {
  long count = 0;
  const int v = g.vertex_count();
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b)
      for (int c = b + 1; c < v; ++c)
        if (g.has_edge(a, b) + g.has_edge(b, c) + g.has_edge(a, c) == 2) ++count;
  return count;
}

// Canonical forms of every labeled graph on n vertices with the given
// degree, by scanning all edge subsets.
std::set<Graph> brute_regular_classes(int n, int delta) {
  std::vector<Edge> all;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) all.push_back({a, b});
  std::set<Graph> classes;
  for (unsigned long mask = 0; mask < (1UL << all.size()); ++mask) {
    if (__builtin_popcountl(mask) * 2 != n * delta) continue;
    Graph g(n);
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1UL) g.add_edge(all[i].u, all[i].w);
    if (g.regular_degree() == delta) classes.insert(canonical_form(g));
  }
  return classes;
}

}  // namespace

TEST_CASE("complement") {
  const auto c = complement(multipartite(2, 3));
  CHECK(c.edge_count() == 6);
  CHECK(triangle_count(c) == 2);
  CHECK_FALSE(c.connected());
  CHECK(complement(cycle(4)).edge_count() == 2);
  CHECK(complement(complete(5)).edge_count() == 0);
  CHECK(complement(complement(prism())) == prism());
}

TEST_CASE("V-subgraph counts") {
  CHECK(v_subgraph_count(complete(3)) == 0);
  CHECK(v_subgraph_count(multipartite(2, 3)) == 18);
  CHECK(v_subgraph_count(prism()) == 12);
  CHECK(v_subgraph_count(cycle(6)) == 6);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 10));
    CHECK(v_subgraph_count(g) == v_subgraphs_brute(g));
  }
}

TEST_CASE("complement transform") {
  const auto c4 = sym_polys(cycle(4).laplacian());
  const auto t = complement_sym_transform(c4, 4);
  CHECK(t.s == std::vector<Integer>{1, 4, 4, 0});
  const auto empty = complement_sym_transform(sym_polys(Graph(5).laplacian()), 5);
  for (int j = 0; j < 5; ++j) CHECK(empty[j] == binomial(4, j) * ipow(5, static_cast<unsigned long>(j)));
  const auto k33 = complement_sym_transform(sym_polys(multipartite(2, 3).laplacian()), 6);
  CHECK(k33.s == std::vector<Integer>{1, 12, 54, 108, 81, 0});

  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    const int v = 1 + static_cast<int>(rng() % 10);
    const auto g = oracle::random_graph(rng, v);
    CHECK(complement_sym_transform(sym_polys(g.laplacian()), v) == sym_polys(complement(g).laplacian()));
  }
}

TEST_CASE("rgd forms") {
  const auto k33_design = Design(6, 2, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  const auto form = rgd_form_of(k33_design);
  CHECK(form.lambda() == 0);
  CHECK(form.delta() == 3);
  CHECK(form.r() == 3);
  CHECK(rgd_laplacian(form, 0) == multipartite(2, 3).laplacian());
  CHECK(sym_polys(rgd_laplacian(form, 1))[1] == 18 + 5 * 6);

  // C5 residual at x = 2: eigenvalues 10 + psi(C5).
  const RgdForm c5(cycle(5), 2, 2);
  const auto shifted = float_eigenvalues(rgd_laplacian(c5, 2));
  const auto base = float_eigenvalues(cycle(5).laplacian());
  for (int i = 0; i < 4; ++i) CHECK(std::abs(shifted[i] - (10 + base[i])) < 1e-9);

  Graph not_regular(4);
  not_regular.add_edge(0, 1);
  CHECK_THROWS_AS(RgdForm(not_regular, 1, 2), ValidationError);
  CHECK_THROWS_AS(rgd_form_of(star_design(4)), ValidationError);

  // Extension of an RGD is an RGD at x = lambda + y lambda_tilde.
  const auto bibd = unreduced_bibd(6, 2);
  for (unsigned y = 0; y <= 3; ++y) {
    const auto ext = extend(k33_design, bibd, y);
    const auto ext_form = rgd_form_of(ext);
    CHECK(ext_form.lambda() == static_cast<int>(y));
    CHECK(laplacian(ext) == rgd_laplacian(form, y));
  }
}

TEST_CASE("multipartite") {
  const auto oct = multipartite(3, 2);
  CHECK(oct.edge_count() == 12);
  CHECK(oct.regular_degree() == 4);
  CHECK(v_subgraph_count(complement(oct)) == 0);
  CHECK(complement(oct).edge_count() == 3);
  CHECK(multipartite(2, 1).edge_count() == 1);
  CHECK(canonical_form(multipartite(2, 3)) == canonical_form(complement(complement(multipartite(2, 3)))));
  CHECK_THROWS_AS(multipartite(1, 3), ValidationError);
}

TEST_CASE("regular graph enumeration") {
  CHECK(enumerate_regular_graphs(6, 3).size() == 2);
  CHECK(enumerate_regular_graphs(4, 2).size() == 1);
  CHECK_THROWS_AS(enumerate_regular_graphs(5, 3), ValidationError);
  Limits small;
  small.regular_enumeration_max_vertices = 5;
  CHECK_THROWS_AS(enumerate_regular_graphs(6, 3, small), ScaleCapError);

  for (int n = 1; n <= 7; ++n)
    for (int delta = 0; delta < n; ++delta) {
      if ((n * delta) % 2) continue;
      const auto found = enumerate_regular_graphs(n, delta);
      const std::set<Graph> got(found.begin(), found.end());
      CHECK(got.size() == found.size());
      for (const auto& g : found) CHECK(g.regular_degree() == delta);
      std::set<Graph> canon;
      for (const auto& g : found) canon.insert(canonical_form(g));
      CHECK(canon == brute_regular_classes(n, delta));
    }
  // Known counts of cubic graphs on 8 vertices, connected or not.
  CHECK(enumerate_regular_graphs(8, 3).size() == 6);
}

TEST_CASE("graph enumeration counts") {
  const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156};
  const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) {
    const auto graphs = enumerate_graphs(n);
    CHECK(graphs.size() == all[n - 1]);
    CHECK(std::count_if(graphs.begin(), graphs.end(), [](const Graph& g) { return g.connected(); }) ==
          static_cast<long>(connected[n - 1]));
  }
}

TEST_CASE("canonical form is a relabeling invariant") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 80; ++trial) {
    const int v = 1 + static_cast<int>(rng() % 10);
    const auto g = oracle::random_graph(rng, v);
    const auto perm = oracle::random_perm(rng, v);
    CHECK(canonical_form(g) == canonical_form(g.relabeled(perm)));
    CHECK(canonical_form(g).edge_count() == g.edge_count());
  }
  CHECK(canonical_form(multipartite(2, 3)) != canonical_form(prism()));
}

TEST_CASE("canonical design keys") {
  const Design path(4, 2, {{0, 1}, {1, 2}, {2, 3}});
  const Design relabeled(4, 2, {{2, 0}, {0, 3}, {3, 1}});
  CHECK(canonical_key(path) == canonical_key(relabeled));
  CHECK(canonical_key(path) != canonical_key(star_design(4)));

  const Design fano(7, 3, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
  const Design fano2(7, 3, {{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {0, 4, 5}, {1, 5, 6}, {0, 2, 6}});
  CHECK(canonical_key(fano) == canonical_key(fano2));

  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const int v = 4 + static_cast<int>(rng() % 5);
    std::vector<Block> blocks;
    for (int i = 0; i < 6; ++i) {
      auto p = oracle::random_perm(rng, v);
      Block block(p.begin(), p.begin() + 3);
      std::sort(block.begin(), block.end());
      blocks.push_back(block);
    }
    const Design d(v, 3, blocks);
    const auto perm = oracle::random_perm(rng, v);
    std::vector<Block> moved;
    for (const auto& block : blocks) {
      Block m;
      for (int t : block) m.push_back(perm[t]);
      std::sort(m.begin(), m.end());
      moved.push_back(m);
    }
    CHECK(canonical_key(d) == canonical_key(Design(v, 3, moved)));
  }

  // Block multiplicities count.
  const Design a(6, 3, {{0, 1, 2}, {3, 4, 5}, {0, 1, 2}, {3, 4, 5}});
  const Design b(6, 3, {{0, 1, 2}, {3, 4, 5}, {0, 1, 2}, {0, 1, 2}});
  CHECK(canonical_key(a) != canonical_key(b));
}

TEST_CASE("fingerprint keys above the exact cap") {
  Limits limits;
  limits.exact_canonical_max_vertices = 4;
  const auto key = canonical_key(cycle_design(6), limits);
  CHECK(key.find("fp:") != std::string::npos);
  const Design moved(6, 2, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 5}, {0, 5}});
  CHECK(canonical_key(moved, limits) == key);
}
