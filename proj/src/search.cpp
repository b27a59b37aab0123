#include "tightlie/search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tightlie::geom {

namespace {

struct RestartOutcome {
  double beta = -1e300;
  std::array<CMat, 3> triple;
  long long evals = 0;
};

// beta over a chart-encoded triple; non-evaluable configurations are scored
// very low so the minimizer backs away from them
double beta_of(const BoundedDomain& d, const Tolerances& tol, const double* x, long long& evals) {
  int dof = chart_dof(d);
  CMat a = chart_point(d, x), b = chart_point(d, x + dof), c = chart_point(d, x + 2 * dof);
  ++evals;
  try {
    return bergmann_cocycle(d, a, b, c, tol).beta;
  } catch (const std::domain_error&) {
    return -1e300;
  }
}

/// One restart: Nelder-Mead maximization with re-seeded shrinking simplices.
RestartOutcome run_restart(const BoundedDomain& d, int iters, uint64_t stream,
                           const Tolerances& tol) {
  Rng rng(stream);
  const int dof = 3 * chart_dof(d);
  std::vector<double> best(dof);
  for (auto& v : best) v = 1.2 * rng.gaussian();
  RestartOutcome out;
  auto f = [&](const double* x) { return -beta_of(d, tol, x, out.evals); };

  double fbest = f(best.data());
  const int rounds = 6;
  long long budget = std::max(1, iters);
  for (int round = 0; round < rounds; ++round) {
    double radius = round == 0 ? 1.0 : std::pow(0.35, round);
    // simplex around the incumbent
    std::vector<std::vector<double>> pts(dof + 1, best);
    std::vector<double> fv(dof + 1);
    for (int i = 1; i <= dof; ++i) pts[i][i - 1] += radius;
    for (int i = 0; i <= dof; ++i) fv[i] = f(pts[i].data());
    long long used = 0;
    std::vector<size_t> ord(dof + 1);
    while (used < budget / rounds) {
      std::iota(ord.begin(), ord.end(), 0u);
      std::sort(ord.begin(), ord.end(), [&](size_t a, size_t b) { return fv[a] < fv[b]; });
      size_t lo = ord[0], hi = ord[dof], second = ord[dof - 1];
      // centroid without the worst point
      std::vector<double> cen(dof, 0.0);
      for (size_t k = 0; k <= static_cast<size_t>(dof); ++k) {
        if (k == hi) continue;
        for (int j = 0; j < dof; ++j) cen[j] += pts[k][j];
      }
      for (int j = 0; j < dof; ++j) cen[j] /= dof;

      auto blend = [&](double coef) {
        std::vector<double> p(dof);
        for (int j = 0; j < dof; ++j) p[j] = cen[j] + coef * (pts[hi][j] - cen[j]);
        return p;
      };
      std::vector<double> refl = blend(-1.0);
      double frefl = f(refl.data());
      ++used;
      if (frefl < fv[lo]) {
        std::vector<double> expd = blend(-2.0);
        double fexp = f(expd.data());
        ++used;
        if (fexp < frefl) {
          pts[hi] = std::move(expd);
          fv[hi] = fexp;
        } else {
          pts[hi] = std::move(refl);
          fv[hi] = frefl;
        }
      } else if (frefl < fv[second]) {
        pts[hi] = std::move(refl);
        fv[hi] = frefl;
      } else {
        std::vector<double> con = blend(frefl < fv[hi] ? -0.5 : 0.5);
        double fcon = f(con.data());
        ++used;
        if (fcon < std::min(frefl, fv[hi])) {
          pts[hi] = std::move(con);
          fv[hi] = fcon;
        } else {
          for (size_t k = 0; k <= static_cast<size_t>(dof); ++k) {
            if (k == lo) continue;
            for (int j = 0; j < dof; ++j) pts[k][j] = pts[lo][j] + 0.5 * (pts[k][j] - pts[lo][j]);
            fv[k] = f(pts[k].data());
            ++used;
          }
        }
      }
      // convergence of the simplex values
      double spread = fv[ord[dof]] - fv[ord[0]];
      if (spread < 1e-15 && round > 0) break;
    }
    size_t lo = 0;
    for (size_t k = 1; k <= static_cast<size_t>(dof); ++k)
      if (fv[k] < fv[lo]) lo = k;
    if (fv[lo] < fbest) {
      fbest = fv[lo];
      best = pts[lo];
    }
  }
  out.beta = -fbest;
  int dof1 = chart_dof(d);
  out.triple = {chart_point(d, best.data()), chart_point(d, best.data() + dof1),
                chart_point(d, best.data() + 2 * dof1)};
  return out;
}

SupResult reduce_restarts(const std::vector<RestartOutcome>& outs) {
  SupResult res;
  for (size_t i = 0; i < outs.size(); ++i) {
    res.evals += outs[i].evals;
    if (outs[i].beta > res.best_beta) {
      res.best_beta = outs[i].beta;
      res.argmax = outs[i].triple;
      res.best_restart = static_cast<int>(i);
    }
  }
  return res;
}

struct SampleOutcome {
  bool ok = false;
  ScanRow row;
  long long attempts = 0;
  std::array<CMat, 3> triple;
};

SampleOutcome run_sample(const BoundedDomain& d, uint64_t stream, const Tolerances& tol) {
  Rng rng(stream);
  SampleOutcome out;
  for (int attempt = 0; attempt < 64; ++attempt) {
    ++out.attempts;
    CMat a = random_shilov(d, rng), b = random_shilov(d, rng), c = random_shilov(d, rng);
    if (!is_transverse(d, a, b, tol) || !is_transverse(d, b, c, tol) ||
        !is_transverse(d, c, a, tol))
      continue;
    CocycleEval ev = bergmann_cocycle(d, a, b, c, tol);
    out.ok = true;
    out.row.beta = ev.beta;
    out.row.min_h = ev.min_transversality;
    out.row.lattice_distance = lattice_distance(ev.beta, d.rank());
    out.triple = {a, b, c};
    return out;
  }
  return out;
}

}  // namespace

double lattice_distance(double beta, int rank) {
  double best = 1e300;
  for (int k = 0; k <= rank; ++k) {
    double point = -rank / 2.0 + k;
    best = std::min(best, std::abs(beta - point));
  }
  return best;
}

SupResult sup_search(const BoundedDomain& d, int restarts, int iters, uint64_t seed,
                     const Tolerances& tol) {
  std::vector<RestartOutcome> outs(static_cast<size_t>(std::max(restarts, 0)));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < restarts; ++i)
    outs[static_cast<size_t>(i)] = run_restart(d, iters, derive_stream(seed, static_cast<uint64_t>(i)), tol);
  return reduce_restarts(outs);
}

SupResult sup_search_serial(const BoundedDomain& d, int restarts, int iters, uint64_t seed,
                            const Tolerances& tol) {
  std::vector<RestartOutcome> outs(static_cast<size_t>(std::max(restarts, 0)));
  for (int i = 0; i < restarts; ++i)
    outs[static_cast<size_t>(i)] = run_restart(d, iters, derive_stream(seed, static_cast<uint64_t>(i)), tol);
  return reduce_restarts(outs);
}

namespace {

ScanResult reduce_samples(const std::vector<SampleOutcome>& outs) {
  ScanResult res;
  for (size_t i = 0; i < outs.size(); ++i) {
    res.attempted += outs[i].attempts;
    if (!outs[i].ok) continue;
    if (std::abs(outs[i].row.beta) > res.sup_abs) {
      res.sup_abs = std::abs(outs[i].row.beta);
      res.argmax_index = res.rows.size();
      res.argmax = outs[i].triple;
    }
    res.rows.push_back(outs[i].row);
  }
  return res;
}

}  // namespace

ScanResult integrality_scan(const BoundedDomain& d, int samples, uint64_t seed,
                            const Tolerances& tol) {
  std::vector<SampleOutcome> outs(static_cast<size_t>(std::max(samples, 0)));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < samples; ++i)
    outs[static_cast<size_t>(i)] = run_sample(d, derive_stream(seed, 0x5CA00000ULL + static_cast<uint64_t>(i)), tol);
  return reduce_samples(outs);
}

ScanResult integrality_scan_serial(const BoundedDomain& d, int samples, uint64_t seed,
                                   const Tolerances& tol) {
  std::vector<SampleOutcome> outs(static_cast<size_t>(std::max(samples, 0)));
  for (int i = 0; i < samples; ++i)
    outs[static_cast<size_t>(i)] = run_sample(d, derive_stream(seed, 0x5CA00000ULL + static_cast<uint64_t>(i)), tol);
  return reduce_samples(outs);
}

}  // namespace tightlie::geom
