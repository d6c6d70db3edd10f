#include "doctest.h"

#include <omp.h>

#include <random>

#include "bibdopt/design.hpp"
#include "bibdopt/enumeration.hpp"
#include "bibdopt/kernels.hpp"
#include "bibdopt/spectrum.hpp"
#include "oracles.hpp"

using namespace bibdopt;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, int n, std::int64_t magnitude) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * magnitude + 1)) - magnitude;
  return m;
}

}  // namespace

TEST_CASE("determinant across machine and bignum tiers") {
  std::mt19937_64 rng(17);
  for (std::int64_t magnitude : {3L, 1000L, 1000000L, 4000000000000L}) {
    for (int n = 1; n <= 6; ++n) {
      const auto m = random_matrix(rng, n, magnitude);
      std::vector<int> rows(static_cast<std::size_t>(n));
      std::iota(rows.begin(), rows.end(), 0);
      CHECK(kernels::determinant(m) == oracle::leibniz_det(m, rows));
    }
  }
  IntMatrix singular(3);
  singular(0, 0) = singular(0, 1) = 1;
  singular(1, 0) = singular(1, 1) = 1;
  singular(2, 2) = 5;
  CHECK(kernels::determinant(singular) == 0);
  CHECK(kernels::determinant(IntMatrix(0)) == 1);
}

TEST_CASE("serial and parallel principal minor sums agree") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const int v = 1 + static_cast<int>(rng() % 12);
    const auto l = oracle::random_graph(rng, v).laplacian();
    CHECK(kernels::parallel::principal_minor_sums(l) == kernels::serial::principal_minor_sums(l));
  }
}

TEST_CASE("serial and parallel forest sums agree") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 12; ++trial) {
    const int v = 2 + static_cast<int>(rng() % 8);
    const auto g = oracle::random_graph(rng, v).as_multigraph();
    CHECK(kernels::parallel::forest_sums(g) == kernels::serial::forest_sums(g));
  }
}

TEST_CASE("serial and parallel design spectra agree under several thread counts") {
  Filters f;
  f.connected = true;
  const auto pool = enumerate_binary_designs(5, 5, 2, f);
  const auto designs = pool.designs();
  const auto serial = kernels::serial::design_spectra(designs);
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    CHECK(kernels::parallel::design_spectra(designs) == serial);
  }
  for (std::size_t i = 0; i < designs.size(); ++i)
    CHECK(serial[i] == sym_polys(laplacian(designs[i]), SymPolyMethod::CharPoly));
}
