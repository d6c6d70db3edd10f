#pragma once

// Exhaustive kernels with two interchangeable implementations: a plain serial
// reference and an OpenMP version. Both return bit-identical exact results;
// the serial one is kept for tests and for the benchmark comparison.

#include <span>
#include <vector>

#include "bibdopt/graph.hpp"
#include "bibdopt/integer.hpp"
#include "bibdopt/matrix.hpp"

namespace bibdopt {

class Design;
struct ExactSpectrum;

namespace kernels {

// E_j = sum of all j x j principal minors, j = 0..n (E_0 = 1).
namespace serial {
std::vector<Integer> principal_minor_sums(const IntMatrix& m);
std::vector<Integer> forest_sums(const Multigraph& g);
std::vector<ExactSpectrum> design_spectra(std::span<const Design> designs);
}  // namespace serial

namespace parallel {
std::vector<Integer> principal_minor_sums(const IntMatrix& m);
std::vector<Integer> forest_sums(const Multigraph& g);
std::vector<ExactSpectrum> design_spectra(std::span<const Design> designs);
}  // namespace parallel

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

}  // namespace kernels
}  // namespace bibdopt
