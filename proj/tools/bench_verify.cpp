// SPDX-License-Identifier: MIT
//
// Benchmark: runs each verification suite serially and sharded across OpenMP
// workers, reports wall times, and checks that both modes produce identical
// reports.  Exits nonzero when a suite fails or the reports differ.
#include "CLI11.hpp"

#include "reederkit/verify.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool same_report(const std::vector<reederkit::ReportRecord>& a,
                 const std::vector<reederkit::ReportRecord>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].command != b[i].command || a[i].inputs != b[i].inputs ||
        a[i].outputs != b[i].outputs || a[i].status != b[i].status ||
        a[i].origin != b[i].origin)
      return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Timing comparison of the serial and sharded verification runs"};
  int jobs = 0;
  app.add_option("--jobs", jobs, "worker count for the sharded run (default: hardware)");
  CLI11_PARSE(app, argc, argv);
  if (jobs <= 0) jobs = std::max(2u, std::thread::hardware_concurrency());

#ifdef _OPENMP
  std::printf("OpenMP enabled (max threads %d); sharded runs use %d worker(s)\n",
              omp_get_max_threads(), jobs);
#else
  std::printf("OpenMP not available; sharded runs fall back to serial execution\n");
#endif

  // Warm the static caches (root systems, weight tables, bundled tables) so
  // both timed modes start from the same state.
  (void)reederkit::verify_suite("all", 1);

  std::printf("%-8s %6s %10s %10s %8s %10s %5s\n", "suite", "cases", "serial(s)",
              "sharded(s)", "speedup", "identical", "ok");
  bool good = true;
  for (const char* suite : {"tables", "poset", "stalk", "matrix", "all"}) {
    auto t0 = std::chrono::steady_clock::now();
    const auto serial = reederkit::verify_cases_serial(suite);
    const double ts = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    const auto sharded = reederkit::verify_suite(suite, jobs);
    const double tp = seconds_since(t0);
    const bool identical = same_report(serial, sharded);
    const bool ok = reederkit::all_ok(serial);
    good = good && identical && ok;
    std::printf("%-8s %6zu %10.3f %10.3f %7.2fx %10s %5s\n", suite, serial.size(), ts, tp,
                tp > 0 ? ts / tp : 0.0, identical ? "yes" : "NO", ok ? "yes" : "NO");
  }
  return good ? 0 : 1;
}
