#include "bibdopt/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "bibdopt/design.hpp"
#include "bibdopt/spectrum.hpp"

namespace bibdopt::kernels {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

Integer to_integer(std::int64_t x) { return Integer(static_cast<long>(x)); }

Integer to_integer(i128 x) {
  const bool negative = x < 0;
  u128 u = negative ? static_cast<u128>(-(x + 1)) + 1 : static_cast<u128>(x);
  Integer hi(static_cast<unsigned long>(u >> 64));
  Integer out = (hi << 64) + Integer(static_cast<unsigned long>(u & ~std::uint64_t{0}));
  return negative ? Integer(-out) : out;
}

Integer to_integer(u128 x) { return to_integer(static_cast<i128>(x)); }

Integer to_integer(const Integer& x) { return x; }

// Determinant of an n x n row-major block by Bareiss elimination. Every
// intermediate entry is a minor of the input, so T only has to hold products
// of two minors.
template <typename T>
T bareiss(std::vector<T>& a, int n) {
  if (n == 0) return T(1);
  T sign = 1;
  T prev = 1;
  auto at = [&](int i, int j) -> T& { return a[static_cast<std::size_t>(i) * n + j]; };
  for (int k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      int pivot = k + 1;
      while (pivot < n && at(pivot, k) == 0) ++pivot;
      if (pivot == n) return T(0);
      for (int j = k; j < n; ++j) std::swap(at(k, j), at(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

enum class Width { i64, i128, big };

// Hadamard bound on every minor of m, as log2.
Width minor_width(const IntMatrix& m) {
  const int n = m.size();
  double log2_bound = 0.0;
  for (int i = 0; i < n; ++i) {
    double norm2 = 0.0;
    for (int j = 0; j < n; ++j) norm2 += static_cast<double>(m(i, j)) * static_cast<double>(m(i, j));
    log2_bound += 0.5 * std::log2(std::max(1.0, norm2));
  }
  if (log2_bound + 1 < 30 && n <= 24) return Width::i64;
  if (log2_bound + 1 < 60 && n <= 48) return Width::i128;
  return Width::big;
}

template <typename T>
std::vector<Integer> minor_sums_as(const IntMatrix& m, bool parallel) {
  const int n = m.size();
  const long subsets = 1L << n;
  std::vector<T> total(static_cast<std::size_t>(n) + 1, T(0));
  total[0] = T(1);

#pragma omp parallel if (parallel)
  {
    std::vector<T> local(static_cast<std::size_t>(n) + 1, T(0));
    std::vector<T> work;
    std::vector<int> idx;
#pragma omp for schedule(dynamic, 64)
    for (long mask = 1; mask < subsets; ++mask) {
      idx.clear();
      for (unsigned long bits = static_cast<unsigned long>(mask); bits != 0; bits &= bits - 1)
        idx.push_back(std::countr_zero(bits));
      const int size = static_cast<int>(idx.size());
      work.resize(static_cast<std::size_t>(size) * size);
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) work[static_cast<std::size_t>(i) * size + j] = T(m(idx[i], idx[j]));
      local[size] += bareiss(work, size);
    }
#pragma omp critical(bibdopt_minor_merge)
    for (int j = 1; j <= n; ++j) total[j] += local[j];
  }

  std::vector<Integer> out;
  out.reserve(total.size());
  for (const auto& t : total) out.push_back(to_integer(t));
  return out;
}

std::vector<Integer> minor_sums(const IntMatrix& m, bool parallel) {
  switch (minor_width(m)) {
    case Width::i64:
      return minor_sums_as<std::int64_t>(m, parallel);
    case Width::i128:
      return minor_sums_as<i128>(m, parallel);
    case Width::big:
      break;
  }
  return minor_sums_as<Integer>(m, parallel);
}

// Union-find with rollback; the forest enumeration backtracks over edges.
class RollbackDsu {
 public:
  explicit RollbackDsu(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  // Returns the merged component sizes, or {0, 0} when already joined.
  std::pair<int, int> unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return {0, 0};
    if (size_[a] < size_[b]) std::swap(a, b);
    const std::pair<int, int> sizes{size_[a], size_[b]};
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return sizes;
  }
  void undo() {
    const int b = history_.back();
    history_.pop_back();
    const int a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

class ForestWalker {
 public:
  ForestWalker(const Multigraph& g, std::vector<u128>& acc) : edges_(g.edges()), dsu_(g.vertex_count()), acc_(acc) {}

  RollbackDsu& dsu() { return dsu_; }

  // product = prod of component sizes of the forest chosen so far.
  void walk(std::size_t i, int used, std::uint64_t product) {
    if (i == edges_.size()) {
      acc_[used] += product;
      return;
    }
    const auto [sa, sb] = dsu_.unite(edges_[i].u, edges_[i].w);
    if (sa != 0) {
      walk(i + 1, used + 1, product / (static_cast<std::uint64_t>(sa) * sb) * (sa + sb));
      dsu_.undo();
    }
    walk(i + 1, used, product);
  }

 private:
  const std::vector<Edge>& edges_;
  RollbackDsu dsu_;
  std::vector<u128>& acc_;
};

std::vector<Integer> to_integers(const std::vector<u128>& acc) {
  std::vector<Integer> out;
  out.reserve(acc.size());
  for (auto x : acc) out.push_back(to_integer(x));
  return out;
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  std::vector<Integer> a;
  a.reserve(static_cast<std::size_t>(m.size()) * m.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) a.emplace_back(static_cast<long>(m(i, j)));
  return bareiss(a, m.size());
}

namespace serial {

std::vector<Integer> principal_minor_sums(const IntMatrix& m) { return minor_sums(m, false); }

std::vector<Integer> forest_sums(const Multigraph& g) {
  std::vector<u128> acc(static_cast<std::size_t>(std::max(g.vertex_count(), 1)), 0);
  ForestWalker walker(g, acc);
  walker.walk(0, 0, 1);
  return to_integers(acc);
}

std::vector<ExactSpectrum> design_spectra(std::span<const Design> designs) {
  std::vector<ExactSpectrum> out;
  out.reserve(designs.size());
  for (const auto& d : designs) out.push_back(sym_polys(laplacian(d)));
  return out;
}

}  // namespace serial

namespace parallel {

std::vector<Integer> principal_minor_sums(const IntMatrix& m) {
  // Small matrices and calls from inside another parallel region stay serial.
  const bool go = m.size() >= 9 && !omp_in_parallel();
  return minor_sums(m, go);
}

std::vector<Integer> forest_sums(const Multigraph& g) {
  const auto& edges = g.edges();
  const int prefix = static_cast<int>(std::min<std::size_t>(edges.size(), 10));
  const long tasks = 1L << prefix;
  std::vector<u128> total(static_cast<std::size_t>(std::max(g.vertex_count(), 1)), 0);

#pragma omp parallel if (!omp_in_parallel() && prefix >= 6)
  {
    std::vector<u128> local(total.size(), 0);
#pragma omp for schedule(dynamic, 1)
    for (long task = 0; task < tasks; ++task) {
      ForestWalker walker(g, local);
      std::uint64_t product = 1;
      int used = 0;
      bool forest = true;
      for (int i = 0; i < prefix && forest; ++i) {
        if (((task >> i) & 1) == 0) continue;
        const auto [sa, sb] = walker.dsu().unite(edges[i].u, edges[i].w);
        if (sa == 0) {
          forest = false;
        } else {
          product = product / (static_cast<std::uint64_t>(sa) * sb) * (sa + sb);
          ++used;
        }
      }
      if (forest) walker.walk(static_cast<std::size_t>(prefix), used, product);
    }
#pragma omp critical(bibdopt_forest_merge)
    for (std::size_t j = 0; j < total.size(); ++j) total[j] += local[j];
  }
  return to_integers(total);
}

std::vector<ExactSpectrum> design_spectra(std::span<const Design> designs) {
  std::vector<ExactSpectrum> out(designs.size());
  const long n = static_cast<long>(designs.size());
#pragma omp parallel for schedule(dynamic, 16) if (!omp_in_parallel())
  for (long i = 0; i < n; ++i) out[i] = sym_polys(laplacian(designs[i]));
  return out;
}

}  // namespace parallel

}  // namespace bibdopt::kernels
