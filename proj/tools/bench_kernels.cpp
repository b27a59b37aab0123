// Compares the OpenMP kernels against the serial reference implementations
// and reports wall-clock speedups. Results must match bitwise.

#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <cmath>

#include "tightlie/search.hpp"

using namespace tightlie::geom;

namespace {

void bench_sup(const BoundedDomain& d, int restarts, int iters, uint64_t seed) {
  double t0 = omp_get_wtime();
  SupResult serial = sup_search_serial(d, restarts, iters, seed);
  double t1 = omp_get_wtime();
  SupResult parallel = sup_search(d, restarts, iters, seed);
  double t2 = omp_get_wtime();
  bool same = serial.best_beta == parallel.best_beta && serial.evals == parallel.evals &&
              serial.best_restart == parallel.best_restart;
  std::printf("sup_search     %-12s restarts=%-3d serial %7.3fs  omp %7.3fs  speedup %5.2fx  %s\n",
              d.name().c_str(), restarts, t1 - t0, t2 - t1, (t1 - t0) / (t2 - t1),
              same ? "match" : "MISMATCH");
  if (!same) std::exit(1);
}

void bench_scan(const BoundedDomain& d, int samples, uint64_t seed) {
  double t0 = omp_get_wtime();
  ScanResult serial = integrality_scan_serial(d, samples, seed);
  double t1 = omp_get_wtime();
  ScanResult parallel = integrality_scan(d, samples, seed);
  double t2 = omp_get_wtime();
  bool same = serial.rows.size() == parallel.rows.size() && serial.attempted == parallel.attempted;
  for (size_t i = 0; same && i < serial.rows.size(); ++i)
    same = serial.rows[i].beta == parallel.rows[i].beta &&
           serial.rows[i].min_h == parallel.rows[i].min_h;
  std::printf("integrality    %-12s samples=%-5d serial %7.3fs  omp %7.3fs  speedup %5.2fx  %s\n",
              d.name().c_str(), samples, t1 - t0, t2 - t1, (t1 - t0) / (t2 - t1),
              same ? "match" : "MISMATCH");
  if (!same) std::exit(1);
}

}  // namespace

int main() {
  if (const char* threads = std::getenv("TIGHTLIE_THREADS")) {
    int t = std::atoi(threads);
    if (t > 0) omp_set_num_threads(t);
  }
  std::printf("threads: %d\n", omp_get_max_threads());
  bench_sup(BoundedDomain::disk(), 32, 4000, 0);
  bench_sup(BoundedDomain::polydisk(3), 32, 20000, 0);
  bench_sup(BoundedDomain::ball(2, 2), 32, 20000, 0);
  bench_scan(BoundedDomain::ball(2, 2), 2000, 7);
  bench_scan(BoundedDomain::ball(1, 2), 2000, 7);
  bench_scan(BoundedDomain::siegel(2), 1000, 7);
  return 0;
}
