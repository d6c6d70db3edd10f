#include "bibdopt/optimality.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "bibdopt/errors.hpp"

namespace bibdopt {

std::string to_string(Criterion c) { return c == Criterion::A ? "A" : "D"; }

Criterion parse_criterion(std::string_view text) {
  if (text == "A" || text == "a") return Criterion::A;
  if (text == "D" || text == "d") return Criterion::D;
  throw ValidationError("unknown criterion '" + std::string(text) + "' (expected A or D)");
}

std::string to_string(Order o) {
  switch (o) {
    case Order::less:
      return "less";
    case Order::greater:
      return "greater";
    case Order::equivalent:
      break;
  }
  return "equivalent";
}

std::string to_string(RootBoundKind k) { return k == RootBoundKind::Cauchy ? "cauchy" : "cauchy-positive"; }

std::string to_string(Majorization m) {
  switch (m) {
    case Majorization::majorizes:
      return "majorizes";
    case Majorization::majorized:
      return "majorized";
    case Majorization::incomparable:
      return "incomparable";
    case Majorization::equal:
      break;
  }
  return "equal";
}

ValuePolynomial::ValuePolynomial(std::vector<Integer> coefficients) : c_(std::move(coefficients)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer ValuePolynomial::coefficient(int i) const {
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Integer(0);
}

Integer ValuePolynomial::operator()(const Integer& y) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * y + *it;
  return acc;
}

Rational ValuePolynomial::operator()(const Rational& y) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * y + Rational(*it);
  return acc;
}

ValuePolynomial operator-(const ValuePolynomial& a, const ValuePolynomial& b) {
  std::vector<Integer> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficient(static_cast<int>(i)) - b.coefficient(static_cast<int>(i));
  return ValuePolynomial(std::move(out));
}

ValuePolynomial operator*(const ValuePolynomial& a, const ValuePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return ValuePolynomial(std::move(out));
}

ValuePolynomial d_polynomial(const ExactSpectrum& s) {
  const int v = s.v;
  std::vector<Integer> c(static_cast<std::size_t>(v));
  for (int j = 0; j < v; ++j) c[v - 1 - j] = ipow(v, v - 1 - j) * s[j];
  return ValuePolynomial(std::move(c));
}

ValuePolynomial a_denominator_polynomial(const ExactSpectrum& s) {
  const int v = s.v;
  if (v < 2) return {};
  std::vector<Integer> c(static_cast<std::size_t>(v - 1));
  for (int j = 0; j <= v - 2; ++j) c[v - 2 - j] = ipow(v, v - 2 - j) * (v - 1 - j) * s[j];
  return ValuePolynomial(std::move(c));
}

Integer d_value(const ExactSpectrum& s, const Integer& y) { return d_polynomial(s)(y); }

AValue a_value(const ExactSpectrum& s, const Integer& y) {
  const Integer d = d_value(s, y);
  if (d == 0) return {Rational(0), true};
  const Integer den = a_denominator_polynomial(s)(y);
  Rational out(Integer(s.degree()) * d, den);
  out.canonicalize();
  return {out, false};
}

namespace {

void require_same_v(const ExactSpectrum& a, const ExactSpectrum& b) {
  if (a.v != b.v) throw ValidationError("spectra have different numbers of treatments");
}

}  // namespace

ValuePolynomial d_difference(const ExactSpectrum& s, const ExactSpectrum& s_prime) {
  require_same_v(s, s_prime);
  return d_polynomial(s) - d_polynomial(s_prime);
}

ValuePolynomial p_poly(const ExactSpectrum& s, const ExactSpectrum& s_prime) {
  require_same_v(s, s_prime);
  const int v = s.v;
  if (v < 2) return {};
  const int top = 2 * v - 3;
  auto at = [&](const ExactSpectrum& x, int j) { return j >= 0 && j < v ? x[j] : Integer(0); };
  std::vector<Integer> c(static_cast<std::size_t>(top) + 1);
  for (int i = 0; i <= top; ++i) {
    Integer sum = 0;
    for (int j = 0; j <= std::min(i, v - 1); ++j)
      sum += (v - 1 - j) * (at(s_prime, j) * at(s, i - j) - at(s, j) * at(s_prime, i - j));
    c[top - i] = ipow(v, top - i) * sum;
  }
  return ValuePolynomial(std::move(c));
}

StableOrderResult stable_compare(const ExactSpectrum& s, const ExactSpectrum& s_prime) {
  require_same_v(s, s_prime);
  for (int j = 1; j < s.v; ++j) {
    if (s[j] != s_prime[j])
      return {s[j] > s_prime[j] ? Order::greater : Order::less, j, Integer(s[j] - s_prime[j])};
  }
  return {Order::equivalent, std::nullopt, Integer(0)};
}

std::vector<int> stratify(std::span<const ExactSpectrum> pool) {
  if (pool.empty()) throw ValidationError("cannot stratify an empty pool");
  const int v = pool.front().v;
  for (const auto& s : pool)
    if (s.v != v || (v > 1 && s[1] != pool.front()[1]))
      throw ValidationError("pool mixes designs with different (v, b, k)");
  std::vector<Integer> best(static_cast<std::size_t>(v));
  for (int j = 0; j < v; ++j)
    for (const auto& s : pool) best[j] = std::max(best[j], s[j]);
  std::vector<int> out;
  out.reserve(pool.size());
  for (const auto& s : pool) {
    int i = 0;
    while (i + 1 < v && s[i + 1] == best[i + 1]) ++i;
    out.push_back(i);
  }
  return out;
}

Rational bound_y0(int v, int b, int k, Criterion c) {
  if (v < 3) throw ValidationError("bound_y0 needs v >= 3");
  const Integer base = ipow(Integer(b) * (k - 1), v - 1);
  if (c == Criterion::D) {
    const int m = binom_peak_D(v);
    return Rational(Integer(v * v) * ipow(2, m) * base * binomial(v - 1, m) + 1);
  }
  const int m = binom_peak_A(v);
  const Integer c_m = binomial(v - 1, m);
  Rational out(ipow(2, v - 2) * base * (2 * v - 5) * c_m * c_m * v + 1, v);
  out.canonicalize();
  return out;
}

Rational bound_x0(int v, int delta, Criterion c) {
  if (v < 4) throw ValidationError("bound_x0 needs v >= 4");
  const Integer base = ipow(Integer(2 * delta), v - 1);
  if (c == Criterion::D) {
    Rational out(base * binomial(v - 1, (v - 1) / 2) + 1, v);
    out.canonicalize();
    return out;
  }
  const Integer c_m = binomial(v - 1, (v - 2) / 2);
  Rational out(base * c_m * c_m * (v - 3) * v + 1, v);
  out.canonicalize();
  return out;
}

Rational criterion_value(const ExactSpectrum& s, const Integer& y, Criterion c) {
  if (c == Criterion::D) return Rational(d_value(s, y));
  return a_value(s, y).value;
}

namespace {

struct RootBound {
  Rational value;
  RootBoundKind kind;
};

// Upper bound on the real roots of q (leading coefficient positive): the
// smaller of the Cauchy bound on |z| and Cauchy's rule for positive roots.
RootBound root_bound(const ValuePolynomial& q) {
  const int n = q.degree();
  if (n <= 0) return {Rational(0), RootBoundKind::Cauchy};
  const auto& c = q.coefficients();
  const Integer lead = c[n];

  Integer largest = 0;
  for (int i = 0; i < n; ++i) largest = std::max(largest, Integer(abs(c[i])));
  Rational cauchy(largest, lead);
  cauchy.canonicalize();
  cauchy += 1;

  const long negatives = std::count_if(c.begin(), c.begin() + n, [](const Integer& x) { return x < 0; });
  Integer positive = 0;
  for (int i = 0; i < n; ++i) {
    if (c[i] >= 0) continue;
    Rational ratio(Integer(abs(c[i])) * negatives, lead);
    ratio.canonicalize();
    positive = std::max(positive, ceil_root(ceil(ratio), static_cast<unsigned long>(n - i)));
  }
  if (Rational(positive) < cauchy) return {Rational(positive), RootBoundKind::CauchyPositive};
  return {cauchy, RootBoundKind::Cauchy};
}

bool winner_holds(const ExactSpectrum& w, const ExactSpectrum& l, const Integer& level, Criterion c) {
  return criterion_value(w, level, c) >= criterion_value(l, level, c);
}

}  // namespace

CrossoverCertificate certified_crossover(const ExactSpectrum& winner, const ExactSpectrum& loser, Criterion c,
                                         const CrossoverOptions& options) {
  const auto order = stable_compare(winner, loser);
  CrossoverCertificate cert;
  cert.criterion = c;
  if (order.relation == Order::equivalent) {
    cert.distinguishable = false;
    return cert;
  }
  if (order.relation == Order::less) throw ValidationError("winner is behind the loser in the stable order");
  if (options.level_step == 0) throw ValidationError("level step must be positive");

  cert.comparison = c == Criterion::D ? d_difference(winner, loser) : p_poly(winner, loser);
  if (cert.comparison.is_zero() || cert.comparison.leading() <= 0)
    throw std::logic_error("comparison polynomial does not favour the stable-order winner");

  const auto bound = root_bound(cert.comparison);
  const Integer step(options.level_step);
  Rational in_y(bound.value / Rational(step));
  cert.root_bound = in_y;
  cert.root_bound_kind = bound.kind;
  cert.checked_from = 0;
  cert.checked_to = ceil(in_y);
  if (cert.checked_to > Integer(static_cast<unsigned long>(options.limits.crossover_evaluation_cap)))
    throw ScaleCapError("crossover root bound " + to_string(in_y) + " exceeds the evaluation cap");

  // Above level 0 every shifted eigenvalue is positive, so the sign of the
  // comparison polynomial decides the comparison; level 0 may be degenerate.
  cert.y_star = 0;
  for (Integer y = cert.checked_to; y >= 0; --y) {
    const bool holds = y == 0 ? winner_holds(winner, loser, Integer(0), c) : cert.comparison(Integer(y * step)) >= 0;
    if (!holds) {
      cert.y_star = y + 1;
      break;
    }
  }
  return cert;
}

std::vector<RankedMember> rank_pool(std::span<const ExactSpectrum> pool, const Integer& y, Criterion c) {
  if (pool.empty()) throw ValidationError("cannot rank an empty pool");
  for (const auto& s : pool) require_same_v(s, pool.front());
  const long n = static_cast<long>(pool.size());
  std::vector<Rational> values(pool.size());
#pragma omp parallel for schedule(dynamic, 64) if (!omp_in_parallel() && n >= 256)
  for (long i = 0; i < n; ++i) values[i] = criterion_value(pool[i], y, c);

  std::vector<std::size_t> order(pool.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (values[a] != values[b]) return values[a] > values[b];
    return stable_compare(pool[a], pool[b]).relation == Order::greater;
  });

  std::vector<RankedMember> out;
  out.reserve(pool.size());
  std::size_t group_start = 0;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    if (pos > 0 && values[order[pos]] != values[order[pos - 1]]) group_start = pos;
    RankedMember m;
    m.index = order[pos];
    m.value = values[order[pos]];
    m.rank = group_start + 1;
    m.stable_vs_group_leader = stable_compare(pool[order[pos]], pool[order[group_start]]).relation;
    out.push_back(std::move(m));
  }
  for (std::size_t pos = 0; pos < out.size(); ++pos) {
    const bool same_prev = pos > 0 && out[pos - 1].rank == out[pos].rank;
    const bool same_next = pos + 1 < out.size() && out[pos + 1].rank == out[pos].rank;
    out[pos].tied = same_prev || same_next;
  }
  return out;
}

Majorization majorization_compare(std::span<const double> a, std::span<const double> b, double tol) {
  if (a.size() != b.size()) throw ValidationError("majorization needs vectors of equal length");
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  std::sort(x.begin(), x.end(), std::greater<>());
  std::sort(y.begin(), y.end(), std::greater<>());
  const double sx = std::accumulate(x.begin(), x.end(), 0.0);
  const double sy = std::accumulate(y.begin(), y.end(), 0.0);
  if (std::abs(sx - sy) > tol) throw ValidationError("majorization needs vectors with equal sums");
  bool x_over = true;
  bool y_over = true;
  double px = 0.0;
  double py = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    px += x[i];
    py += y[i];
    if (px < py - tol) x_over = false;
    if (py < px - tol) y_over = false;
  }
  if (x_over && y_over) return Majorization::equal;
  if (x_over) return Majorization::majorizes;
  if (y_over) return Majorization::majorized;
  return Majorization::incomparable;
}

}  // namespace bibdopt
