// Timing comparison of the serial reference kernels against the OpenMP path.
#include <chrono>
#include <cstdio>

#include "skewplane/suites.hpp"

using namespace skewplane;

namespace {

double time_suite(const PlaneModel& plane, const std::string& suite, Exec exec) {
  SuiteConfig cfg;
  cfg.exec = exec;
  auto t0 = std::chrono::steady_clock::now();
  Report rep = run_suite(plane, suite, cfg);
  auto t1 = std::chrono::steady_clock::now();
  if (!rep.passed()) std::printf("  WARNING: %s did not pass\n", suite.c_str());
  return std::chrono::duration<double>(t1 - t0).count();
}

void bench(long p, int k, const std::string& suite) {
  PlaneModel plane(Ring::finite_field(p, k));
  double serial = time_suite(plane, suite, Exec::serial);
  double parallel = time_suite(plane, suite, Exec::parallel);
  std::printf("%-10s GF(%ld^%d)  serial %8.3fs  openmp %8.3fs  speedup %.2fx\n",
              suite.c_str(), p, k, serial, parallel, serial / parallel);
}

}  // namespace

int main() {
  bench(5, 1, "pappus");
  bench(7, 1, "pappus");
  bench(3, 2, "skewfield");
  bench(7, 1, "desargues");
  bench(3, 2, "axioms");
  return 0;
}
