#pragma once

#include <vector>

#include "bibdopt/design.hpp"
#include "bibdopt/graph.hpp"
#include "bibdopt/integer.hpp"
#include "bibdopt/limits.hpp"
#include "bibdopt/matrix.hpp"
#include "bibdopt/spectrum.hpp"

namespace bibdopt {

Graph complement(const Graph& g);

std::size_t triangle_count(const Graph& g);

/// Three-vertex subsets inducing exactly two edges:
/// sum_i C(deg i, 2) - 3 * triangles.
Integer v_subgraph_count(const Graph& g);

/// Symmetric polynomials of the complement's non-trivial Laplacian spectrum,
/// S_j(comp) = sum_k C(v-k-1, j-k) (-1)^k v^{j-k} S_k(g).
ExactSpectrum complement_sym_transform(const ExactSpectrum& s, int v);

/// Residual-graph description of a regular graph design:
///   L[x, T] = (delta + v x) I - T - x J,  delta = r(k-1) - lambda(v-1).
class RgdForm {
 public:
  /// Throws ValidationError unless graph is delta-regular for the delta
  /// implied by (v, r, k).
  RgdForm(Graph graph, int r, int k);

  const Graph& graph() const { return graph_; }
  int v() const { return graph_.vertex_count(); }
  int r() const { return r_; }
  int k() const { return k_; }
  int lambda() const { return lambda_; }
  int delta() const { return delta_; }

 private:
  Graph graph_;
  int r_;
  int k_;
  int lambda_;
  int delta_;
};

/// The residual graph of an RGD: i ~ j iff lambda_ij = lambda + 1.
RgdForm rgd_form_of(const Design& d);

IntMatrix rgd_laplacian(const RgdForm& form, long x);

/// Complete m-partite graph with parts of size alpha.
Graph multipartite(int m, int alpha);

/// One canonical representative per isomorphism class of delta-regular
/// simple graphs on v vertices, sorted. Throws ValidationError when v*delta
/// is odd and ScaleCapError above Limits::regular_enumeration_max_vertices.
std::vector<Graph> enumerate_regular_graphs(int v, int delta, const Limits& limits = {});

/// One canonical representative per isomorphism class of simple graphs on
/// n vertices (vertex-by-vertex augmentation), sorted.
std::vector<Graph> enumerate_graphs(int n, const Limits& limits = {});

}  // namespace bibdopt
