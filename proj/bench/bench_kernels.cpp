// Serial reference vs OpenMP kernels on fixed inputs.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "bibdopt/design.hpp"
#include "bibdopt/enumeration.hpp"
#include "bibdopt/kernels.hpp"
#include "bibdopt/rgd.hpp"
#include "bibdopt/spectrum.hpp"

using namespace bibdopt;

namespace {

double seconds(const std::function<void()>& work, int repeats) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < repeats; ++i) work();
  const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  return took.count() / repeats;
}

void report(const std::string& name, double serial, double parallel, bool same) {
  std::printf("%-40s serial %9.4fs  parallel %9.4fs  speedup %5.2fx  %s\n", name.c_str(), serial, parallel,
              serial / parallel, same ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::stoi(argv[1]) : 3;
  std::printf("threads: %d\n", omp_get_max_threads());

  const auto l = multipartite(4, 3).laplacian();
  std::vector<Integer> a, b;
  report("principal minor sums, K(3,3,3,3)", seconds([&] { a = kernels::serial::principal_minor_sums(l); }, repeats),
         seconds([&] { b = kernels::parallel::principal_minor_sums(l); }, repeats), a == b);

  Graph g(10);
  for (int i = 0; i < 10; ++i) {
    g.add_edge(i, (i + 1) % 10);
    g.add_edge(i, (i + 3) % 10);
  }
  const auto m = g.as_multigraph();
  report("forest sums, circulant C10(1,3)", seconds([&] { a = kernels::serial::forest_sums(m); }, repeats),
         seconds([&] { b = kernels::parallel::forest_sums(m); }, repeats), a == b);

  Filters f;
  f.connected = true;
  const auto designs = enumerate_binary_designs(6, 6, 2, f).designs();
  std::vector<ExactSpectrum> sa, sb;
  report("design spectra, connected (6,6,2) pool",
         seconds([&] { sa = kernels::serial::design_spectra(designs); }, repeats),
         seconds([&] { sb = kernels::parallel::design_spectra(designs); }, repeats), sa == sb);
  return 0;
}
