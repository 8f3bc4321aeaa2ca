// Serial reference vs OpenMP kernels: one character sum, a Walsh-Hadamard
// transform, and a full exhaustive scan.

#include <chrono>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "ssg4/kernels.hpp"
#include "ssg4/survey.hpp"

using namespace ssg4;

namespace {

template <class Fn>
double seconds(Fn&& fn, int reps) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  const std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
  return d.count() / reps;
}

void line(const char* name, double serial, double parallel) {
  std::printf("%-28s serial %10.6f s  parallel %10.6f s  speedup %5.2fx\n", name, serial, parallel, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kernel benchmark"};
  int sum_n = 17;
  int scan_n = 5;
  int workers = 0;
  app.add_option("--sum-n", sum_n, "field degree for the single character sum");
  app.add_option("--scan-n", scan_n, "field degree for the exhaustive scan");
  app.add_option("--workers", workers, "OpenMP threads (0 = default)");
  CLI11_PARSE(app, argc, argv);

  try {
    const Field f = Field::standard(sum_n);
    const CurveParams p{Field::one(), {3}, {5}, {7}, Field::zero()};
    volatile std::int64_t sink = 0;
    line(("char sum n=" + std::to_string(sum_n)).c_str(),
         seconds([&] { sink = kernels::char_sum_serial(f, p); }, 3),
         seconds([&] { sink = kernels::char_sum_parallel(f, p, workers); }, 3));

    std::vector<std::int64_t> values(std::size_t{1} << 20, 1);
    line("walsh-hadamard 2^20", seconds([&] { kernels::walsh_hadamard_serial(values); }, 3),
         seconds([&] { kernels::walsh_hadamard(values); }, 3));

    survey::ScanConfig cfg;
    cfg.n = scan_n;
    cfg.workers = workers;
    cfg.allow_large = true;
    const Field sf = survey::scan_field(cfg);
    line(("exhaustive scan n=" + std::to_string(scan_n)).c_str(),
         seconds([&] { survey::scan_serial(sf, cfg); }, 1), seconds([&] { survey::scan_parallel(sf, cfg); }, 1));
    (void)sink;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
