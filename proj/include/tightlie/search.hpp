#pragma once

#include <array>
#include <vector>

#include "tightlie/domain.hpp"

namespace tightlie::geom {

struct SupResult {
  double best_beta = -1e300;
  std::array<CMat, 3> argmax;
  int best_restart = -1;
  long long evals = 0;
};

/// Maximizes the Bergmann cocycle over interior triples parameterized through
/// the bounded tanh chart, with Nelder-Mead restarts on deterministic
/// per-restart streams. The OpenMP kernel and the serial reference produce
/// bit-identical results for the same seed.
SupResult sup_search(const BoundedDomain& d, int restarts, int iters, uint64_t seed,
                     const Tolerances& tol = {});
SupResult sup_search_serial(const BoundedDomain& d, int restarts, int iters, uint64_t seed,
                            const Tolerances& tol = {});

struct ScanRow {
  double beta = 0;
  double min_h = 0;
  double lattice_distance = 0;
};

struct ScanResult {
  std::vector<ScanRow> rows;
  long long attempted = 0;  // samples drawn including rejected non-transverse triples
  double sup_abs = 0;
  size_t argmax_index = 0;
  std::array<CMat, 3> argmax;
};

/// Evaluates beta on random pairwise-transverse Shilov triples and records the
/// distance to the lattice {-r/2, ..., r/2}. Deterministic per-sample streams;
/// OpenMP kernel plus serial reference.
ScanResult integrality_scan(const BoundedDomain& d, int samples, uint64_t seed,
                            const Tolerances& tol = {});
ScanResult integrality_scan_serial(const BoundedDomain& d, int samples, uint64_t seed,
                                   const Tolerances& tol = {});

/// Distance from beta to the nearest lattice point in {-r/2, -r/2+1, ..., r/2}.
double lattice_distance(double beta, int rank);

}  // namespace tightlie::geom
