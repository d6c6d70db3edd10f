#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "bibdopt/graph.hpp"
#include "bibdopt/limits.hpp"
#include "bibdopt/matrix.hpp"

namespace bibdopt {

class Design;

/// Visits the leaves of the individualization-refinement tree of a symmetric
/// weighted matrix. Each leaf is a permutation perm[old] = new; the set of
/// leaves depends only on the isomorphism class, so the lexicographic
/// minimum of any relabeled certificate over it is a canonical form.
void for_each_refined_labeling(const IntMatrix& weights,
                               const std::function<void(std::span<const int>)>& visit);

/// Canonical representative of the isomorphism class of g.
Graph canonical_form(const Graph& g);

/// Relabeling-invariant fingerprint of a design. Exact (equal keys iff
/// isomorphic) up to Limits::exact_canonical_max_vertices treatments; above
/// that a spectral fingerprint prefixed with "fp:" is returned and distinct
/// classes may merge.
std::string canonical_key(const Design& d, const Limits& limits = {});

}  // namespace bibdopt
