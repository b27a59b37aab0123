#include "tightlie/domain.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tightlie::geom {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_shape(const BoundedDomain& d, const CMat& z, const char* who) {
  if (z.rows() != d.rows() || z.cols() != d.cols()) {
    std::ostringstream os;
    os << who << ": point shape " << z.rows() << "x" << z.cols() << " does not match "
       << d.name() << " (" << d.rows() << "x" << d.cols() << ")";
    throw std::invalid_argument(os.str());
  }
}

double spectral_norm(const CMat& m) {
  if (m.rows() == 1 && m.cols() == 1) return std::abs(m(0, 0));
  Eigen::SelfAdjointEigenSolver<CMat> es(m.adjoint() * m);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

}  // namespace

BoundedDomain BoundedDomain::disk() { return BoundedDomain{}; }

BoundedDomain BoundedDomain::polydisk(int r) {
  if (r < 1) throw std::invalid_argument("polydisk: r must be positive");
  BoundedDomain d;
  d.kind = Kind::Polydisk;
  d.r = r;
  return d;
}

BoundedDomain BoundedDomain::ball(int p, int q) {
  if (p < 1 || q < p) throw std::invalid_argument("ball: need 1 <= p <= q");
  BoundedDomain d;
  d.kind = Kind::MatrixBall;
  d.p = p;
  d.q = q;
  return d;
}

BoundedDomain BoundedDomain::siegel(int n) {
  if (n < 1) throw std::invalid_argument("siegel: n must be positive");
  BoundedDomain d;
  d.kind = Kind::SiegelDisk;
  d.n = n;
  return d;
}

BoundedDomain BoundedDomain::parse(const std::string& s) {
  if (s == "disk") return disk();
  auto colon = s.find(':');
  std::string head = s.substr(0, colon);
  std::string args = colon == std::string::npos ? "" : s.substr(colon + 1);
  try {
    if (head == "polydisk") return polydisk(std::stoi(args));
    if (head == "siegel") return siegel(std::stoi(args));
    if (head == "ball") {
      auto comma = args.find(',');
      if (comma != std::string::npos)
        return ball(std::stoi(args.substr(0, comma)), std::stoi(args.substr(comma + 1)));
    }
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("unknown domain descriptor: '" + s +
                              "' (expected disk | polydisk:R | ball:P,Q | siegel:N)");
}

std::string BoundedDomain::name() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Disk: os << "disk"; break;
    case Kind::Polydisk: os << "polydisk:" << r; break;
    case Kind::MatrixBall: os << "ball:" << p << "," << q; break;
    case Kind::SiegelDisk: os << "siegel:" << n; break;
  }
  return os.str();
}

int BoundedDomain::rank() const {
  switch (kind) {
    case Kind::Disk: return 1;
    case Kind::Polydisk: return r;
    case Kind::MatrixBall: return p;
    case Kind::SiegelDisk: return n;
  }
  return 1;
}

int BoundedDomain::rows() const {
  return kind == Kind::MatrixBall ? p : (kind == Kind::SiegelDisk ? n : 1);
}

int BoundedDomain::cols() const {
  switch (kind) {
    case Kind::Disk: return 1;
    case Kind::Polydisk: return r;
    case Kind::MatrixBall: return q;
    case Kind::SiegelDisk: return n;
  }
  return 1;
}

Cplx h_kernel(const BoundedDomain& d, const CMat& z, const CMat& w) {
  check_shape(d, z, "h_kernel");
  check_shape(d, w, "h_kernel");
  switch (d.kind) {
    case BoundedDomain::Kind::Disk:
      return Cplx(1, 0) - z(0, 0) * std::conj(w(0, 0));
    case BoundedDomain::Kind::Polydisk: {
      Cplx prod(1, 0);
      for (int i = 0; i < d.r; ++i) prod *= Cplx(1, 0) - z(0, i) * std::conj(w(0, i));
      return prod;
    }
    case BoundedDomain::Kind::MatrixBall:
      return (CMat::Identity(d.p, d.p) - z * w.adjoint()).determinant();
    case BoundedDomain::Kind::SiegelDisk:
      return (CMat::Identity(d.n, d.n) - z * w.conjugate()).determinant();
  }
  return {};
}

bool is_transverse(const BoundedDomain& d, const CMat& x, const CMat& y, const Tolerances& tol) {
  return std::abs(h_kernel(d, x, y)) > tol.transverse;
}

double shilov_residual(const BoundedDomain& d, const CMat& z) {
  switch (d.kind) {
    case BoundedDomain::Kind::Disk:
      return std::abs(1.0 - std::abs(z(0, 0)));
    case BoundedDomain::Kind::Polydisk: {
      double res = 0;
      for (int i = 0; i < d.r; ++i) res = std::max(res, std::abs(1.0 - std::abs(z(0, i))));
      return res;
    }
    case BoundedDomain::Kind::MatrixBall:
      return (z * z.adjoint() - CMat::Identity(d.p, d.p)).cwiseAbs().maxCoeff();
    case BoundedDomain::Kind::SiegelDisk: {
      double sym = (z - z.transpose()).cwiseAbs().maxCoeff();
      double uni = (z * z.conjugate() - CMat::Identity(d.n, d.n)).cwiseAbs().maxCoeff();
      return std::max(sym, uni);
    }
  }
  return 0;
}

bool shilov_contains(const BoundedDomain& d, const CMat& z, const Tolerances& tol,
                     double* residual) {
  check_shape(d, z, "shilov_contains");
  double res = shilov_residual(d, z);
  if (residual) *residual = res;
  return res < tol.shilov;
}

DomainPoint classify(const BoundedDomain& d, const CMat& z, const Tolerances& tol) {
  check_shape(d, z, "classify");
  DomainPoint out;
  out.z = z;
  double margin = 0;
  switch (d.kind) {
    case BoundedDomain::Kind::Disk:
      margin = 1.0 - std::norm(z(0, 0));
      break;
    case BoundedDomain::Kind::Polydisk: {
      margin = 1e300;
      for (int i = 0; i < d.r; ++i) margin = std::min(margin, 1.0 - std::norm(z(0, i)));
      break;
    }
    case BoundedDomain::Kind::MatrixBall:
    case BoundedDomain::Kind::SiegelDisk: {
      CMat g = CMat::Identity(z.rows(), z.rows()) - z * z.adjoint();
      Eigen::SelfAdjointEigenSolver<CMat> es(g);
      margin = es.eigenvalues().minCoeff();
      if (d.kind == BoundedDomain::Kind::SiegelDisk) {
        double asym = (z - z.transpose()).cwiseAbs().maxCoeff();
        if (asym > tol.shilov) margin = -1;  // off the symmetric slice entirely
      }
      break;
    }
  }
  out.interior_margin = margin;
  out.shilov_residual = shilov_residual(d, z);
  if (margin > tol.interior)
    out.cls = PointClass::Interior;
  else if (out.shilov_residual < tol.shilov)
    out.cls = PointClass::Shilov;
  else
    out.cls = PointClass::OtherBoundary;
  return out;
}

double arg_h(const BoundedDomain& d, const CMat& z, const CMat& w, const Tolerances& tol) {
  check_shape(d, z, "arg_h");
  check_shape(d, w, "arg_h");
  Cplx end = h_kernel(d, z, w);
  if (std::abs(end) <= tol.transverse) {
    std::ostringstream os;
    os << "arg_h: kernel vanishes at t=1 (|h| = " << std::abs(end) << " <= " << tol.transverse
       << "): non-transverse pair";
    throw std::domain_error(os.str());
  }
  double t = 0, acc = 0, dt = 0.125;
  Cplx prev(1, 0);  // h(0,0) = 1
  const double kMinStep = 1e-12;
  while (t < 1.0) {
    double tn = std::min(1.0, t + dt);
    Cplx cur = h_kernel(d, tn * z, tn * w);
    if (std::abs(cur) < 1e-280) {
      std::ostringstream os;
      os << "arg_h: kernel vanishes on the radial path at t=" << tn;
      throw std::domain_error(os.str());
    }
    double delta = std::arg(cur / prev);
    if (std::abs(delta) >= kPi / 2) {
      dt /= 2;
      if (dt < kMinStep) {
        std::ostringstream os;
        os << "arg_h: phase jump could not be resolved near t=" << tn
           << " (kernel vanishing on path)";
        throw std::domain_error(os.str());
      }
      continue;
    }
    acc += delta;
    prev = cur;
    t = tn;
    if (std::abs(delta) < 0.2 && dt < 0.125) dt *= 2;
  }
  return acc;
}

CocycleEval bergmann_cocycle(const BoundedDomain& d, const CMat& x, const CMat& y, const CMat& z,
                             const Tolerances& tol) {
  CocycleEval e;
  const CMat* pts[3] = {&x, &y, &z};
  double minh = 1e300;
  for (int i = 0; i < 3; ++i) {
    const CMat &a = *pts[i], &b = *pts[(i + 1) % 3];
    double ah = std::abs(h_kernel(d, a, b));
    minh = std::min(minh, ah);
    if (ah <= tol.transverse) {
      std::ostringstream os;
      os << "bergmann_cocycle: pair (" << i << "," << (i + 1) % 3
         << ") is not transverse (|h| = " << ah << ")";
      throw std::domain_error(os.str());
    }
  }
  for (int i = 0; i < 3; ++i) e.arg_parts[i] = arg_h(d, *pts[i], *pts[(i + 1) % 3], tol);
  e.min_transversality = minh;
  e.beta = (e.arg_parts[0] + e.arg_parts[1] + e.arg_parts[2]) / kPi;
  double bound = d.rank() / 2.0 + 1e-6;
  if (std::abs(e.beta) > bound) {
    std::ostringstream os;
    os << "bergmann_cocycle: |beta| = " << std::abs(e.beta)
       << " exceeds the hard bound rank/2 = " << d.rank() / 2.0;
    throw std::logic_error(os.str());
  }
  return e;
}

namespace {

Cplx mobius_scalar(const Eigen::Matrix2cd& g, Cplx z) {
  return (g(0, 0) * z + g(0, 1)) / (g(1, 0) * z + g(1, 1));
}

void check_su11(const Eigen::Matrix2cd& g) {
  double res = std::abs(g(1, 0) - std::conj(g(0, 1))) + std::abs(g(1, 1) - std::conj(g(0, 0))) +
               std::abs(std::norm(g(0, 0)) - std::norm(g(0, 1)) - 1.0);
  if (res > 1e-8)
    throw std::invalid_argument("mobius: element is not in SU(1,1) (residual " +
                                std::to_string(res) + ")");
}

}  // namespace

CMat mobius(const BoundedDomain& d, const GroupElement& g, const CMat& z, const Tolerances&) {
  check_shape(d, z, "mobius");
  switch (d.kind) {
    case BoundedDomain::Kind::Disk: {
      if (g.per_coord.size() != 1) throw std::invalid_argument("mobius: disk expects one block");
      check_su11(g.per_coord[0]);
      CMat out(1, 1);
      out(0, 0) = mobius_scalar(g.per_coord[0], z(0, 0));
      return out;
    }
    case BoundedDomain::Kind::Polydisk: {
      if (g.per_coord.size() != static_cast<size_t>(d.r))
        throw std::invalid_argument("mobius: polydisk expects one block per coordinate");
      CMat out(1, d.r);
      for (int i = 0; i < d.r; ++i) {
        check_su11(g.per_coord[i]);
        out(0, i) = mobius_scalar(g.per_coord[i], z(0, i));
      }
      return out;
    }
    case BoundedDomain::Kind::MatrixBall: {
      const int m = d.p + d.q;
      if (g.m.rows() != m || g.m.cols() != m)
        throw std::invalid_argument("mobius: ball element must be (p+q)x(p+q)");
      CMat h = CMat::Zero(m, m);
      h.topLeftCorner(d.p, d.p).setIdentity();
      h.bottomRightCorner(d.q, d.q) = -CMat::Identity(d.q, d.q);
      double scale = std::max(1.0, g.m.cwiseAbs().maxCoeff());
      double res = (g.m.adjoint() * h * g.m - h).cwiseAbs().maxCoeff() / (scale * scale);
      if (res > 1e-8)
        throw std::invalid_argument(
            "mobius: element does not preserve the (p,q) form (residual " + std::to_string(res) +
            ")");
      CMat a = g.m.topLeftCorner(d.p, d.p), b = g.m.topRightCorner(d.p, d.q);
      CMat c = g.m.bottomLeftCorner(d.q, d.p), dd = g.m.bottomRightCorner(d.q, d.q);
      CMat den = c * z + dd;
      Eigen::FullPivLU<CMat> lu(den);
      if (!lu.isInvertible()) throw std::invalid_argument("mobius: CZ + D is singular");
      return (a * z + b) * lu.inverse();
    }
    case BoundedDomain::Kind::SiegelDisk: {
      const int m = 2 * d.n;
      if (g.m.rows() != m || g.m.cols() != m)
        throw std::invalid_argument("mobius: siegel element must be 2n x 2n (Sp(2n,R))");
      if (g.m.imag().cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("mobius: siegel element must be real (Sp(2n,R))");
      CMat om = CMat::Zero(m, m);
      om.topRightCorner(d.n, d.n).setIdentity();
      om.bottomLeftCorner(d.n, d.n) = -CMat::Identity(d.n, d.n);
      double scale = std::max(1.0, g.m.cwiseAbs().maxCoeff());
      double res = (g.m.transpose() * om * g.m - om).cwiseAbs().maxCoeff() / (scale * scale);
      if (res > 1e-8)
        throw std::invalid_argument(
            "mobius: element does not preserve the symplectic form (residual " +
            std::to_string(res) + ")");
      // transport through the Cayley element: T W = (W - iI)(W + iI)^{-1}
      const Cplx i1(0, 1);
      CMat idn = CMat::Identity(d.n, d.n);
      CMat t(m, m), ti(m, m);
      t << idn, -i1 * idn, idn, i1 * idn;
      ti << 0.5 * idn, 0.5 * idn, 0.5 * i1 * idn, -0.5 * i1 * idn;
      CMat gd = t * g.m * ti;
      CMat a = gd.topLeftCorner(d.n, d.n), b = gd.topRightCorner(d.n, d.n);
      CMat c = gd.bottomLeftCorner(d.n, d.n), dd = gd.bottomRightCorner(d.n, d.n);
      CMat den = c * z + dd;
      Eigen::FullPivLU<CMat> lu(den);
      if (!lu.isInvertible()) throw std::invalid_argument("mobius: CZ + D is singular");
      return (a * z + b) * lu.inverse();
    }
  }
  return z;
}

CMat geodesic_from_origin(const BoundedDomain& d, const CMat& tangent, double t) {
  check_shape(d, tangent, "geodesic_from_origin");
  switch (d.kind) {
    case BoundedDomain::Kind::Disk:
    case BoundedDomain::Kind::Polydisk: {
      CMat out(1, d.cols());
      for (int i = 0; i < d.cols(); ++i) {
        Cplx v = tangent(0, i);
        double a = std::abs(v);
        out(0, i) = a < 1e-300 ? Cplx(0, 0) : Cplx(std::tanh(t * a) / a) * v;
      }
      return out;
    }
    case BoundedDomain::Kind::MatrixBall: {
      Eigen::JacobiSVD<CMat> svd(tangent, Eigen::ComputeFullU | Eigen::ComputeFullV);
      CMat sig = CMat::Zero(d.p, d.q);
      for (int i = 0; i < std::min(d.p, d.q); ++i)
        sig(i, i) = std::tanh(t * svd.singularValues()(i));
      return svd.matrixU() * sig * svd.matrixV().adjoint();
    }
    case BoundedDomain::Kind::SiegelDisk: {
      if ((tangent - tangent.transpose()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("geodesic_from_origin: siegel tangent must be symmetric");
      // p-element [[A,B],[B,-A]] of sp(2n,R) for the tangent W = A + iB
      const int m = 2 * d.n;
      Eigen::MatrixXd x = Eigen::MatrixXd::Zero(m, m);
      x.topLeftCorner(d.n, d.n) = tangent.real();
      x.topRightCorner(d.n, d.n) = tangent.imag();
      x.bottomLeftCorner(d.n, d.n) = tangent.imag();
      x.bottomRightCorner(d.n, d.n) = -tangent.real();
      // walk in bounded steps, exp(tX).0 = exp(dX).(exp((t-d)X).0), so the
      // group matrices stay well conditioned even at large t
      double smax = spectral_norm(tangent.cast<Cplx>());
      double step = smax > 1e-12 ? std::min(std::abs(t), 3.0 / smax) : std::abs(t);
      double sign = t < 0 ? -1.0 : 1.0;
      double remaining = std::abs(t);
      CMat z = CMat::Zero(d.n, d.n);
      while (remaining > 0) {
        double dt = std::min(step, remaining);
        Eigen::MatrixXd e = (sign * dt * x).exp();
        GroupElement g;
        g.m = e.cast<Cplx>();
        z = mobius(d, g, z);
        remaining -= dt;
      }
      return z;
    }
  }
  return tangent;
}

DomainPoint boundary_limit(const BoundedDomain& d, const CMat& tangent, double tmax,
                           const Tolerances& tol) {
  return classify(d, geodesic_from_origin(d, tangent, tmax), tol);
}

int orientation_cocycle(Cplx x, Cplx y, Cplx z) {
  const double eps = 1e-12;
  if (std::abs(x - y) < eps || std::abs(y - z) < eps || std::abs(z - x) < eps) return 0;
  double v = std::imag(std::conj(y - x) * (z - x));
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

// --- randomness -----------------------------------------------------------

uint64_t Rng::next_u64() {
  s_ += 0x9E3779B97F4A7C15ULL;
  uint64_t z = s_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double a, double b) { return a + (b - a) * uniform(); }

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform(), u2 = uniform();
  while (u1 <= 1e-300) u1 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 2.0 * kPi * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

Cplx Rng::cgaussian() { return Cplx(gaussian(), gaussian()); }

uint64_t derive_stream(uint64_t seed, uint64_t index) {
  Rng mix(seed ^ (0xD1B54A32D192ED03ULL * (index + 1)));
  return mix.next_u64();
}

CMat random_interior(const BoundedDomain& d, Rng& rng) {
  std::vector<double> x(static_cast<size_t>(chart_dof(d)));
  for (auto& v : x) v = 0.9 * rng.gaussian();
  return chart_point(d, x.data());
}

CMat random_shilov(const BoundedDomain& d, Rng& rng) {
  switch (d.kind) {
    case BoundedDomain::Kind::Disk:
    case BoundedDomain::Kind::Polydisk: {
      CMat out(1, d.cols());
      for (int i = 0; i < d.cols(); ++i) {
        double a = rng.uniform(0, 2 * kPi);
        out(0, i) = Cplx(std::cos(a), std::sin(a));
      }
      return out;
    }
    case BoundedDomain::Kind::MatrixBall: {
      // QR-orthonormalization of a Gaussian q x p matrix; Z = Q^T has Z Z* = I
      CMat m(d.q, d.p);
      for (int i = 0; i < d.q; ++i)
        for (int j = 0; j < d.p; ++j) m(i, j) = rng.cgaussian();
      Eigen::HouseholderQR<CMat> qr(m);
      CMat qthin = qr.householderQ() * CMat::Identity(d.q, d.p);
      return qthin.transpose();
    }
    case BoundedDomain::Kind::SiegelDisk: {
      // symmetrized unitary U U^T
      CMat m(d.n, d.n);
      for (int i = 0; i < d.n; ++i)
        for (int j = 0; j < d.n; ++j) m(i, j) = rng.cgaussian();
      Eigen::HouseholderQR<CMat> qr(m);
      CMat u = qr.householderQ() * CMat::Identity(d.n, d.n);
      return u * u.transpose();
    }
  }
  return {};
}

GroupElement random_group(const BoundedDomain& d, Rng& rng) {
  GroupElement g;
  switch (d.kind) {
    case BoundedDomain::Kind::Disk:
    case BoundedDomain::Kind::Polydisk: {
      int count = d.kind == BoundedDomain::Kind::Disk ? 1 : d.r;
      for (int i = 0; i < count; ++i) {
        double s = 0.8 * rng.gaussian();
        double al = rng.uniform(0, 2 * kPi), be = rng.uniform(0, 2 * kPi);
        Cplx a = std::polar(std::cosh(s), al), b = std::polar(std::sinh(s), be);
        Eigen::Matrix2cd m;
        m << a, b, std::conj(b), std::conj(a);
        g.per_coord.push_back(m);
      }
      return g;
    }
    case BoundedDomain::Kind::MatrixBall: {
      const int m = d.p + d.q;
      CMat x = CMat::Zero(m, m);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < i; ++j) {
          Cplx v = 0.5 * rng.cgaussian();
          bool cross = (i < d.p) != (j < d.p);
          // u(p,q): anti-Hermitian diagonal blocks, Hermitian-coupled cross block
          x(i, j) = v;
          x(j, i) = cross ? std::conj(v) : -std::conj(v);
        }
      for (int i = 0; i < m; ++i) x(i, i) = Cplx(0, 0.5 * rng.gaussian());
      g.m = x.exp();
      return g;
    }
    case BoundedDomain::Kind::SiegelDisk: {
      const int m = 2 * d.n;
      Eigen::MatrixXd a(d.n, d.n), b(d.n, d.n), c(d.n, d.n);
      for (int i = 0; i < d.n; ++i)
        for (int j = 0; j < d.n; ++j) a(i, j) = 0.4 * rng.gaussian();
      for (int i = 0; i < d.n; ++i)
        for (int j = 0; j <= i; ++j) {
          b(i, j) = b(j, i) = 0.4 * rng.gaussian();
          c(i, j) = c(j, i) = 0.4 * rng.gaussian();
        }
      Eigen::MatrixXd x = Eigen::MatrixXd::Zero(m, m);
      x.topLeftCorner(d.n, d.n) = a;
      x.topRightCorner(d.n, d.n) = b;
      x.bottomLeftCorner(d.n, d.n) = c;
      x.bottomRightCorner(d.n, d.n) = -a.transpose();
      g.m = x.exp().cast<Cplx>();
      return g;
    }
  }
  return g;
}

int chart_dof(const BoundedDomain& d) {
  switch (d.kind) {
    case BoundedDomain::Kind::Disk: return 2;
    case BoundedDomain::Kind::Polydisk: return 2 * d.r;
    case BoundedDomain::Kind::MatrixBall: return 2 * d.p * d.q;
    case BoundedDomain::Kind::SiegelDisk: return d.n * (d.n + 1);
  }
  return 0;
}

CMat chart_point(const BoundedDomain& d, const double* x) {
  switch (d.kind) {
    case BoundedDomain::Kind::Disk:
    case BoundedDomain::Kind::Polydisk: {
      CMat out(1, d.cols());
      for (int i = 0; i < d.cols(); ++i) {
        Cplx w(x[2 * i], x[2 * i + 1]);
        double a = std::abs(w);
        out(0, i) = a < 1e-300 ? w : Cplx(std::tanh(a) / a) * w;
      }
      return out;
    }
    case BoundedDomain::Kind::MatrixBall: {
      CMat m(d.p, d.q);
      int k = 0;
      for (int i = 0; i < d.p; ++i)
        for (int j = 0; j < d.q; ++j) {
          m(i, j) = Cplx(x[k], x[k + 1]);
          k += 2;
        }
      double s = spectral_norm(m);
      return s < 1e-300 ? m : CMat(std::tanh(s) / s * m);
    }
    case BoundedDomain::Kind::SiegelDisk: {
      CMat m(d.n, d.n);
      int k = 0;
      for (int i = 0; i < d.n; ++i)
        for (int j = i; j < d.n; ++j) {
          m(i, j) = Cplx(x[k], x[k + 1]);
          m(j, i) = m(i, j);
          k += 2;
        }
      double s = spectral_norm(m);
      return s < 1e-300 ? m : CMat(std::tanh(s) / s * m);
    }
  }
  return {};
}

}  // namespace tightlie::geom
