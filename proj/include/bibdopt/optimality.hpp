#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bibdopt/integer.hpp"
#include "bibdopt/limits.hpp"
#include "bibdopt/spectrum.hpp"

namespace bibdopt {

// Both criteria are oriented so that LARGER is better: the A-value is the
// harmonic mean and the D-value the product of the shifted non-trivial
// eigenvalues vy + rho_i.
enum class Criterion { A, D };

std::string to_string(Criterion c);
Criterion parse_criterion(std::string_view text);

/// Integer polynomial in the extension level, ascending coefficients with
/// trailing zeros trimmed. The zero polynomial has no coefficients.
class ValuePolynomial {
 public:
  ValuePolynomial() = default;
  explicit ValuePolynomial(std::vector<Integer> coefficients);

  const std::vector<Integer>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Integer& leading() const { return c_.back(); }
  Integer coefficient(int i) const;

  Integer operator()(const Integer& y) const;
  Rational operator()(const Rational& y) const;

  friend ValuePolynomial operator-(const ValuePolynomial& a, const ValuePolynomial& b);
  friend ValuePolynomial operator*(const ValuePolynomial& a, const ValuePolynomial& b);
  bool operator==(const ValuePolynomial&) const = default;

 private:
  std::vector<Integer> c_;
};

/// sum_j (v y)^{v-1-j} S_j as a polynomial in y.
ValuePolynomial d_polynomial(const ExactSpectrum& s);
/// sum_{j<=v-2} (v y)^{v-2-j} (v-1-j) S_j, the A-value denominator.
ValuePolynomial a_denominator_polynomial(const ExactSpectrum& s);

Integer d_value(const ExactSpectrum& s, const Integer& y);

struct AValue {
  Rational value;
  /// Set when some shifted eigenvalue is zero (disconnected at y = 0); the
  /// value is then 0 by convention.
  bool degenerate = false;
};

AValue a_value(const ExactSpectrum& s, const Integer& y);

/// D-value of the better design minus that of the other.
ValuePolynomial d_difference(const ExactSpectrum& s, const ExactSpectrum& s_prime);

/// P(y) = D_s(y) Den_s'(y) - D_s'(y) Den_s(y) built coefficient by coefficient
/// from p_{2v-3-i} = v^{2v-3-i} sum_j (v-1-j)[S_j' S_{i-j} - S_j S_{i-j}'].
/// P(y) >= 0 means a_value(s', y) <= a_value(s, y).
ValuePolynomial p_poly(const ExactSpectrum& s, const ExactSpectrum& s_prime);

enum class Order { less, greater, equivalent };
std::string to_string(Order o);

struct StableOrderResult {
  Order relation = Order::equivalent;
  std::optional<int> first_differing_index;
  Integer margin;  // S_l(s) - S_l(s'), zero when equivalent
};

/// Lexicographic comparison of (S_1, ..., S_{v-1}).
StableOrderResult stable_compare(const ExactSpectrum& s, const ExactSpectrum& s_prime);

/// For each member, the largest i such that it attains the pool maximum of
/// S_j for every j <= i. Members at v-1 lead the stable order.
std::vector<int> stratify(std::span<const ExactSpectrum> pool);

/// Level beyond which (M.S)-optimal designs are A- or D-optimal.
Rational bound_y0(int v, int b, int k, Criterion c);
/// Analogous threshold on x = lambda + y lambda_tilde within RGDs.
Rational bound_x0(int v, int delta, Criterion c);

enum class RootBoundKind { Cauchy, CauchyPositive };
std::string to_string(RootBoundKind k);

struct CrossoverCertificate {
  Criterion criterion = Criterion::D;
  /// False when the two spectra coincide ("indistinguishable"); y_star is then 0.
  bool distinguishable = true;
  Integer y_star;
  ValuePolynomial comparison;
  Rational root_bound;
  RootBoundKind root_bound_kind = RootBoundKind::Cauchy;
  Integer checked_from;
  Integer checked_to;
};

struct CrossoverOptions {
  /// Multiplier between the design-space level y and the eigenvalue shift
  /// level (lambda_tilde of the extension BIBD).
  unsigned long level_step = 1;
  Limits limits{};
};

/// Least integer y_star such that the winner's criterion value is >= the
/// loser's for every integer y >= y_star. The comparison polynomial keeps a
/// constant sign beyond the root bound, and every integer up to it is
/// evaluated exactly. Throws ValidationError when winner is not ahead in the
/// stable order.
CrossoverCertificate certified_crossover(const ExactSpectrum& winner, const ExactSpectrum& loser,
                                         Criterion c, const CrossoverOptions& options = {});

/// Exact criterion value as a rational (D-values have denominator 1).
Rational criterion_value(const ExactSpectrum& s, const Integer& y, Criterion c);

struct RankedMember {
  std::size_t index = 0;
  Rational value;
  std::size_t rank = 0;  // 1 + number of members with a strictly larger value
  bool tied = false;
  /// Stable-order relation to the first member of its tie group.
  Order stable_vs_group_leader = Order::equivalent;
};

/// Descending by exact value; ties share a rank and keep pool order after
/// being sorted by the stable order.
std::vector<RankedMember> rank_pool(std::span<const ExactSpectrum> pool, const Integer& y, Criterion c);

enum class Majorization { majorizes, majorized, incomparable, equal };
std::string to_string(Majorization m);

/// Majorization of two descending vectors with equal sums (within tol).
Majorization majorization_compare(std::span<const double> a, std::span<const double> b, double tol = 1e-9);

}  // namespace bibdopt
