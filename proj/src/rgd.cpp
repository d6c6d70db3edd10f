#include "bibdopt/rgd.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <set>

#include "bibdopt/canonical.hpp"
#include "bibdopt/errors.hpp"

namespace bibdopt {

namespace {

std::uint64_t low_bits(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

}  // namespace

Graph complement(const Graph& g) {
  const int v = g.vertex_count();
  std::vector<Edge> edges;
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j)
      if (!g.has_edge(i, j)) edges.push_back({i, j});
  return Graph(v, edges);
}

std::size_t triangle_count(const Graph& g) {
  std::size_t count = 0;
  const int v = g.vertex_count();
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j)
      if (g.has_edge(i, j)) count += std::popcount(g.row(i) & g.row(j) & ~low_bits(j + 1));
  return count;
}

Integer v_subgraph_count(const Graph& g) {
  Integer pairs = 0;
  for (int i = 0; i < g.vertex_count(); ++i) pairs += binomial(g.degree(i), 2);
  return pairs - 3 * Integer(static_cast<unsigned long>(triangle_count(g)));
}

ExactSpectrum complement_sym_transform(const ExactSpectrum& s, int v) {
  if (s.v != v) throw ValidationError("spectrum size does not match v");
  ExactSpectrum out{v, {}};
  for (int j = 0; j < v; ++j) {
    Integer sum = 0;
    for (int k = 0; k <= j; ++k) {
      Integer term = binomial(v - k - 1, j - k) * ipow(v, j - k) * s[k];
      if (k % 2 == 0)
        sum += term;
      else
        sum -= term;
    }
    out.s.push_back(sum);
  }
  return out;
}

RgdForm::RgdForm(Graph graph, int r, int k) : graph_(std::move(graph)), r_(r), k_(k) {
  const int v = graph_.vertex_count();
  if (v < 2 || k < 2 || k >= v || r < 0) throw ValidationError("RGD form needs v >= 2, 2 <= k < v and r >= 0");
  lambda_ = r * (k - 1) / (v - 1);
  delta_ = r * (k - 1) - lambda_ * (v - 1);
  const auto degree = graph_.regular_degree();
  if (!degree || *degree != delta_)
    throw ValidationError("residual graph must be " + std::to_string(delta_) + "-regular");
}

RgdForm rgd_form_of(const Design& d) {
  const auto c = classify(d);
  if (!c.rgd) throw ValidationError("design is not a regular graph design");
  const IntMatrix nnt = concurrence_matrix(d);
  Graph residual(d.v());
  for (int i = 0; i < d.v(); ++i)
    for (int j = i + 1; j < d.v(); ++j)
      if (nnt(i, j) == *c.lambda + 1) residual.add_edge(i, j);
  return RgdForm(std::move(residual), *c.r, d.k());
}

IntMatrix rgd_laplacian(const RgdForm& form, long x) {
  if (x < 0) throw ValidationError("x must be nonnegative");
  const int v = form.v();
  IntMatrix l(v);
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < v; ++j) {
      if (i == j)
        l(i, j) = form.delta() + static_cast<std::int64_t>(v - 1) * x;
      else
        l(i, j) = -(form.graph().has_edge(i, j) ? 1 : 0) - x;
    }
  return l;
}

Graph multipartite(int m, int alpha) {
  if (m < 2 || alpha < 1) throw ValidationError("multipartite graph needs m >= 2 and alpha >= 1");
  const int v = m * alpha;
  Graph g(v);
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j)
      if (i / alpha != j / alpha) g.add_edge(i, j);
  return g;
}

namespace {

// Labeled delta-regular graphs with vertex 0 adjacent to 1..delta (every
// class has such a labeling).
class RegularSearch {
 public:
  RegularSearch(int v, int delta) : v_(v), delta_(delta), g_(v), deg_(static_cast<std::size_t>(v), 0) {}

  std::vector<Graph> run() {
    for (int j = 1; j <= delta_; ++j) connect(0, j);
    fill(1);
    return std::move(found_);
  }

 private:
  void connect(int a, int b) {
    g_.add_edge(a, b);
    ++deg_[a];
    ++deg_[b];
  }
  void disconnect(int a, int b) {
    g_.remove_edge(a, b);
    --deg_[a];
    --deg_[b];
  }

  void fill(int i) {
    if (i == v_) {
      found_.push_back(g_);
      return;
    }
    std::vector<int> open;
    for (int j = i + 1; j < v_; ++j)
      if (deg_[j] < delta_) open.push_back(j);
    choose(i, open, 0, delta_ - deg_[i]);
  }

  void choose(int i, const std::vector<int>& open, std::size_t from, int need) {
    if (need == 0) {
      fill(i + 1);
      return;
    }
    if (open.size() - from < static_cast<std::size_t>(need)) return;
    for (std::size_t p = from; p < open.size(); ++p) {
      connect(i, open[p]);
      choose(i, open, p + 1, need - 1);
      disconnect(i, open[p]);
    }
  }

  int v_;
  int delta_;
  Graph g_;
  std::vector<int> deg_;
  std::vector<Graph> found_;
};

std::vector<Graph> canonical_classes(const std::vector<Graph>& labeled) {
  std::vector<Graph> forms(labeled.size(), Graph(0));
  const long n = static_cast<long>(labeled.size());
#pragma omp parallel for schedule(dynamic, 32) if (!omp_in_parallel())
  for (long i = 0; i < n; ++i) forms[i] = canonical_form(labeled[i]);
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  return forms;
}

}  // namespace

std::vector<Graph> enumerate_regular_graphs(int v, int delta, const Limits& limits) {
  if (v < 1 || delta < 0 || delta >= std::max(v, 1)) throw ValidationError("need 0 <= delta < v");
  if ((v * delta) % 2 != 0) throw ValidationError("v*delta odd: no " + std::to_string(delta) + "-regular graph on " +
                                                   std::to_string(v) + " vertices");
  if (v > limits.regular_enumeration_max_vertices)
    throw ScaleCapError("regular graph enumeration is capped at " +
                        std::to_string(limits.regular_enumeration_max_vertices) + " vertices");
  if (2 * delta > v - 1) {
    std::vector<Graph> out;
    for (const auto& g : enumerate_regular_graphs(v, v - 1 - delta, limits)) out.push_back(canonical_form(complement(g)));
    std::sort(out.begin(), out.end());
    return out;
  }
  return canonical_classes(RegularSearch(v, delta).run());
}

std::vector<Graph> enumerate_graphs(int n, const Limits& limits) {
  if (n < 1) throw ValidationError("need at least one vertex");
  if (n > limits.graph_enumeration_max_vertices)
    throw ScaleCapError("graph enumeration is capped at " + std::to_string(limits.graph_enumeration_max_vertices) +
                        " vertices");
  std::vector<Graph> level{Graph(1)};
  for (int m = 1; m < n; ++m) {
    std::vector<Graph> grown;
    for (const auto& g : level) {
      for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << m); ++subset) {
        Graph h(m + 1);
        for (const auto& e : g.edges()) h.add_edge(e.u, e.w);
        for (std::uint64_t s = subset; s != 0; s &= s - 1) h.add_edge(m, std::countr_zero(s));
        grown.push_back(std::move(h));
      }
    }
    level = canonical_classes(grown);
  }
  return level;
}

}  // namespace bibdopt
