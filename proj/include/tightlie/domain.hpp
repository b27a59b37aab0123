#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace tightlie::geom {

using CMat = Eigen::MatrixXcd;
using Cplx = std::complex<double>;

struct Tolerances {
  double interior = 1e-10;    // positive-definiteness margin for interior points
  double transverse = 1e-8;   // |h| threshold for transversality
  double shilov = 1e-6;       // Shilov membership residual
};

/// Bounded symmetric domain realizations handled by the numeric layer.
struct BoundedDomain {
  enum class Kind { Disk, Polydisk, MatrixBall, SiegelDisk };
  Kind kind = Kind::Disk;
  int r = 1;         // Polydisk: number of coordinates
  int p = 1, q = 1;  // MatrixBall: point shape p x q, p <= q
  int n = 1;         // SiegelDisk: symmetric n x n

  static BoundedDomain disk();
  static BoundedDomain polydisk(int r);
  static BoundedDomain ball(int p, int q);
  static BoundedDomain siegel(int n);
  /// "disk" | "polydisk:R" | "ball:P,Q" | "siegel:N"
  static BoundedDomain parse(const std::string& s);
  std::string name() const;

  int rank() const;
  int rows() const;
  int cols() const;
};

enum class PointClass { Interior, Shilov, OtherBoundary };

struct DomainPoint {
  CMat z;
  PointClass cls = PointClass::Interior;
  double interior_margin = 0;   // min eigenvalue of I - Z Z^*
  double shilov_residual = 0;
};

/// Polarized K-invariant kernel polynomial h_D(z,w).
Cplx h_kernel(const BoundedDomain& d, const CMat& z, const CMat& w);

bool is_transverse(const BoundedDomain& d, const CMat& x, const CMat& y,
                   const Tolerances& tol = {});
double shilov_residual(const BoundedDomain& d, const CMat& z);
bool shilov_contains(const BoundedDomain& d, const CMat& z, const Tolerances& tol = {},
                     double* residual = nullptr);
DomainPoint classify(const BoundedDomain& d, const CMat& z, const Tolerances& tol = {});

/// Continuous determination of arg h(z,w) vanishing on the diagonal, by
/// tracking arg h(t z, t w) along t in [0,1] with adaptive subdivision
/// (consecutive phase jumps < pi/2). Throws std::domain_error naming the
/// failing t when the kernel vanishes on the path.
double arg_h(const BoundedDomain& d, const CMat& z, const CMat& w, const Tolerances& tol = {});

struct CocycleEval {
  double beta = 0;
  std::array<double, 3> arg_parts{};
  double min_transversality = 0;  // min |h| over the three pairs
};

/// beta(x,y,z) = (1/pi) [arg_h(x,y) + arg_h(y,z) + arg_h(z,x)].
/// Enforces the hard bound |beta| <= rank/2 + 1e-6.
CocycleEval bergmann_cocycle(const BoundedDomain& d, const CMat& x, const CMat& y, const CMat& z,
                             const Tolerances& tol = {});

/// Group element of the holomorphic automorphism group in the realization's
/// matrix coordinates: SU(1,1) per coordinate for disk/polydisk, U(p,q) for
/// the matrix ball, Sp(2n,R) (transported through the Cayley element) for the
/// Siegel disk.
struct GroupElement {
  std::vector<Eigen::Matrix2cd> per_coord;  // disk / polydisk
  CMat m;                                   // ball / siegel
};

/// Z -> (AZ + B)(CZ + D)^{-1} in the bounded realization; checks that g
/// preserves the defining form within tolerance.
CMat mobius(const BoundedDomain& d, const GroupElement& g, const CMat& z,
            const Tolerances& tol = {});

/// Geodesic exp(tX).0 for a tangent direction at the origin:
/// disk 1x1, polydisk 1xr, ball pxq, siegel complex symmetric n x n.
CMat geodesic_from_origin(const BoundedDomain& d, const CMat& tangent, double t);
DomainPoint boundary_limit(const BoundedDomain& d, const CMat& tangent, double tmax = 20.0,
                           const Tolerances& tol = {});

/// Orientation cocycle of three circle points: +1 counterclockwise, -1
/// clockwise, 0 when two coincide.
int orientation_cocycle(Cplx x, Cplx y, Cplx z);

// --- deterministic randomness -------------------------------------------

/// Small deterministic generator (splitmix64 + Box-Muller); identical output
/// on every platform for a given seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : s_(seed) {}
  uint64_t next_u64();
  double uniform();  // [0,1)
  double uniform(double a, double b);
  double gaussian();
  Cplx cgaussian();

 private:
  uint64_t s_;
  bool has_spare_ = false;
  double spare_ = 0;
};

/// Stream seed for task `index` derived from a master seed; tasks may run in
/// any order or thread and still produce identical results.
uint64_t derive_stream(uint64_t seed, uint64_t index);

CMat random_interior(const BoundedDomain& d, Rng& rng);
CMat random_shilov(const BoundedDomain& d, Rng& rng);
GroupElement random_group(const BoundedDomain& d, Rng& rng);

// --- bounded chart for the optimizer -------------------------------------

/// Real degrees of freedom of one point.
int chart_dof(const BoundedDomain& d);
/// Maps unconstrained coordinates into the open domain by tanh squashing of
/// the spectral radius; every interior point is reachable.
CMat chart_point(const BoundedDomain& d, const double* x);

}  // namespace tightlie::geom
