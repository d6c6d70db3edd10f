#pragma once

#include <span>
#include <vector>

#include "json.hpp"

#include "bibdopt/graph.hpp"
#include "bibdopt/integer.hpp"
#include "bibdopt/limits.hpp"
#include "bibdopt/matrix.hpp"

namespace bibdopt {

/// Elementary symmetric polynomials (S_0, ..., S_{v-1}) of the v-1
/// non-trivial Laplacian eigenvalues. S_0 = 1.
struct ExactSpectrum {
  int v = 0;
  std::vector<Integer> s;

  const Integer& operator[](int j) const { return s[static_cast<std::size_t>(j)]; }
  /// Number of non-trivial eigenvalues, v - 1.
  int degree() const { return v - 1; }

  bool operator==(const ExactSpectrum& other) const { return v == other.v && s == other.s; }
};

enum class SymPolyMethod { Automatic, PrincipalMinors, CharPoly };

/// S_j as the sum of the j x j principal minors of a Laplacian (valid since
/// the trivial eigenvalue is 0). Automatic uses principal minors up to
/// Limits::minor_route_max_vertices and the characteristic polynomial above.
/// Throws ValidationError for a non-symmetric matrix or nonzero row sums.
ExactSpectrum sym_polys(const IntMatrix& laplacian, SymPolyMethod method = SymPolyMethod::Automatic,
                        const Limits& limits = {});

/// det(xI - M) by the division-free Berkowitz recurrence; ascending
/// coefficients, size n + 1.
std::vector<Integer> char_poly(const IntMatrix& m);

/// S_{v-j} summed over spanning forests with j trees of prod(tree sizes).
/// Throws ScaleCapError above Limits::forest_oracle_max_vertices.
ExactSpectrum forest_oracle(const Multigraph& g, const Limits& limits = {});

/// Power sums p_m = sum rho_i^m for m = 0..up_to via Newton's identities;
/// p_0 is the number of non-trivial eigenvalues.
std::vector<Integer> power_sums(const ExactSpectrum& s, int up_to);

/// Inverse of power_sums: rebuilds S_0..S_{v-1} from p_0..p_{v-1}.
ExactSpectrum sym_from_power_sums(int v, std::span<const Integer> p);

/// floor((2v-3)/3), the index used for 2^j C(v-1, j) in the D bound.
int binom_peak_D(int v);
/// floor((v-2)/2), the index used for C(v-1, j) in the A bound.
int binom_peak_A(int v);

/// Eigenvalues of a symmetric matrix in descending order (double precision).
std::vector<double> float_eigenvalues(const IntMatrix& m);

/// Elementary symmetric polynomials of the given values, all but the
/// smallest (the trivial Laplacian eigenvalue) when drop_smallest is set.
std::vector<double> float_sym_polys(std::span<const double> descending, bool drop_smallest);

nlohmann::json to_json(const ExactSpectrum& s);
ExactSpectrum spectrum_from_json(const nlohmann::json& j);

}  // namespace bibdopt
