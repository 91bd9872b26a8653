// Compares the serial reference table builder against the OpenMP kernel on
// a few window sizes and checks they produce identical tables.

#include <chrono>
#include <iostream>
#include <omp.h>

#include "bkl/canonical.hpp"

using namespace bkl;
using clk = std::chrono::steady_clock;

namespace {

double ms_since(clk::time_point t0) {
  return std::chrono::duration_cast<std::chrono::microseconds>(clk::now() - t0).count() /
         1000.0;
}

void run_case(const std::string& pattern, int k, BasisKind kind) {
  auto b = ZeroOneSequence::parse(pattern);
  // warm the psi memo outside the timed region so both kernels see the same
  // cache state
  clear_rmatrix_caches();
  BKLTable warm = build_table_serial(b, k, kind);

  auto t0 = clk::now();
  BKLTable serial = build_table_serial(b, k, kind);
  double serial_ms = ms_since(t0);

  t0 = clk::now();
  BKLTable parallel = build_table_parallel(b, k, kind);
  double parallel_ms = ms_since(t0);

  const bool same = serial.entries == parallel.entries && warm.entries == serial.entries;
  std::cout << "b=" << pattern << " k=" << k << " "
            << (kind == BasisKind::Canonical ? "canonical" : "dual     ")
            << "  entries=" << serial.entries.size() << "  serial " << serial_ms
            << "ms  parallel " << parallel_ms << "ms  speedup "
            << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << "x  "
            << (same ? "match" : "MISMATCH") << "\n";
  if (!same) std::exit(1);
}

}  // namespace

int main() {
  std::cout << "threads: " << omp_get_max_threads() << "\n";
  run_case("0101", 2, BasisKind::Canonical);
  run_case("0101", 2, BasisKind::Dual);
  run_case("011010", 1, BasisKind::Canonical);
  run_case("0101", 3, BasisKind::Canonical);
  return 0;
}
