#include "bibdopt/spectrum.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <functional>

#include "bibdopt/errors.hpp"
#include "bibdopt/kernels.hpp"

namespace bibdopt {

namespace {

void require_laplacian(const IntMatrix& l) {
  if (l.size() < 1) throw ValidationError("empty matrix");
  if (!l.is_symmetric()) throw ValidationError("matrix is not symmetric");
  if (!l.has_zero_row_sums()) throw ValidationError("matrix has a nonzero row sum");
}

}  // namespace

ExactSpectrum sym_polys(const IntMatrix& laplacian, SymPolyMethod method, const Limits& limits) {
  require_laplacian(laplacian);
  const int v = laplacian.size();
  if (method == SymPolyMethod::Automatic)
    method = v <= limits.minor_route_max_vertices ? SymPolyMethod::PrincipalMinors : SymPolyMethod::CharPoly;

  ExactSpectrum out{v, {}};
  out.s.reserve(static_cast<std::size_t>(v));
  if (method == SymPolyMethod::PrincipalMinors) {
    auto e = kernels::parallel::principal_minor_sums(laplacian);
    out.s.assign(e.begin(), e.begin() + v);
  } else {
    const auto c = char_poly(laplacian);
    for (int j = 0; j < v; ++j) out.s.push_back((j % 2 == 0) ? c[v - j] : Integer(-c[v - j]));
  }
  return out;
}

std::vector<Integer> char_poly(const IntMatrix& m) {
  const int n = m.size();
  std::vector<Integer> p{1};  // descending coefficients of the leading r x r block
  for (int r = 0; r < n; ++r) {
    // Toeplitz column (1, -a_rr, -R C, -R M C, ..., -R M^{r-1} C) where
    // M is the leading r x r block, R = row r and C = column r restricted to it.
    std::vector<Integer> t(static_cast<std::size_t>(r) + 2);
    t[0] = 1;
    t[1] = -m(r, r);
    std::vector<Integer> vec(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) vec[i] = m(i, r);
    for (int k = 0; k < r; ++k) {
      Integer dot = 0;
      for (int i = 0; i < r; ++i) dot += m(r, i) * vec[i];
      t[k + 2] = -dot;
      std::vector<Integer> next(static_cast<std::size_t>(r));
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) next[i] += m(i, j) * vec[j];
      vec = std::move(next);
    }
    std::vector<Integer> q(static_cast<std::size_t>(r) + 2);
    for (int i = 0; i < r + 2; ++i)
      for (int j = 0; j <= std::min(i, r); ++j) q[i] += t[i - j] * p[j];
    p = std::move(q);
  }
  std::reverse(p.begin(), p.end());
  return p;
}

ExactSpectrum forest_oracle(const Multigraph& g, const Limits& limits) {
  if (g.vertex_count() > limits.forest_oracle_max_vertices)
    throw ScaleCapError("forest oracle is capped at " + std::to_string(limits.forest_oracle_max_vertices) +
                        " vertices");
  if (g.vertex_count() < 1) throw ValidationError("graph has no vertices");
  // Forests with e edges have v - e trees, so the sum over them is S_e.
  return ExactSpectrum{g.vertex_count(), kernels::parallel::forest_sums(g)};
}

std::vector<Integer> power_sums(const ExactSpectrum& s, int up_to) {
  if (up_to < 0) throw ValidationError("negative power-sum order");
  auto e = [&](int j) -> Integer { return j < static_cast<int>(s.s.size()) ? s[j] : Integer(0); };
  std::vector<Integer> p(static_cast<std::size_t>(up_to) + 1);
  p[0] = s.degree();
  for (int m = 1; m <= up_to; ++m) {
    Integer acc = (m % 2 == 1 ? 1 : -1) * Integer(m) * e(m);
    for (int i = 1; i < m; ++i) acc += (i % 2 == 1 ? 1 : -1) * e(i) * p[m - i];
    p[m] = acc;
  }
  return p;
}

ExactSpectrum sym_from_power_sums(int v, std::span<const Integer> p) {
  if (v < 1 || static_cast<int>(p.size()) < v) throw ValidationError("need power sums p_0..p_{v-1}");
  ExactSpectrum out{v, {Integer(1)}};
  for (int m = 1; m < v; ++m) {
    Integer acc = 0;
    for (int i = 1; i <= m; ++i) acc += (i % 2 == 1 ? 1 : -1) * out.s[m - i] * p[i];
    if (acc % m != 0) throw ValidationError("power sums are not those of an integer spectrum");
    out.s.push_back(acc / m);
  }
  return out;
}

int binom_peak_D(int v) {
  if (v < 3) throw ValidationError("binom_peak_D needs v >= 3");
  return (2 * v - 3) / 3;
}

int binom_peak_A(int v) {
  if (v < 3) throw ValidationError("binom_peak_A needs v >= 3");
  return (v - 2) / 2;
}

std::vector<double> float_eigenvalues(const IntMatrix& m) {
  if (!m.is_symmetric()) throw ValidationError("matrix is not symmetric");
  const int n = m.size();
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = static_cast<double>(m(i, j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver did not converge");
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<double> float_sym_polys(std::span<const double> descending, bool drop_smallest) {
  const std::size_t count = drop_smallest && !descending.empty() ? descending.size() - 1 : descending.size();
  std::vector<double> e(count + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j >= 1; --j) e[j] += descending[i] * e[j - 1];
  return e;
}

nlohmann::json to_json(const ExactSpectrum& s) {
  auto out = nlohmann::json::array();
  for (const auto& x : s.s) out.push_back(x.get_str());
  return out;
}

ExactSpectrum spectrum_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw ValidationError("spectrum must be a non-empty array");
  ExactSpectrum out{static_cast<int>(j.size()), {}};
  for (const auto& x : j) {
    if (!x.is_string()) throw ValidationError("spectrum entries must be decimal strings");
    out.s.push_back(parse_integer(x.get<std::string>()));
  }
  if (out.s.front() != 1) throw ValidationError("S_0 must be 1");
  return out;
}

}  // namespace bibdopt
