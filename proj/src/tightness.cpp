#include "tightlie/tightness.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace tightlie {

namespace {

void require_sl2_domain(const LieHom& f, const char* who) {
  if (!f.domain.same_presentation(sl2()))
    throw std::invalid_argument(std::string(who) + ": domain must be sl(2,R), got " +
                                f.domain.name());
}

Mat z_d() { return sl2().Z(); }

}  // namespace

HomWitness check_homomorphism(const LieHom& f) {
  const auto& basis = f.domain.basis();
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) {
      Mat lhs = f.apply(bracket(basis[i], basis[j]));
      Mat rhs = bracket(f.images[i], f.images[j]);
      if (!(lhs == rhs)) return HomWitness{false, i, j, lhs - rhs};
    }
  return HomWitness{};
}

bool check_cartan(const LieHom& f) {
  for (size_t i = 0; i < f.images.size(); ++i) {
    if (f.domain.basis_in_k(i)) {
      if (!f.codomain.in_k(f.images[i])) return false;
    } else {
      if (!f.codomain.in_p(f.images[i])) return false;
    }
  }
  return true;
}

Rational disk_coefficient_raw(const LieHom& f) {
  require_sl2_domain(f, "disk_coefficient");
  return f.codomain.lambda_z(f.apply(z_d()));
}

Rational disk_coefficient(const LieHom& f) {
  Rational raw = disk_coefficient_raw(f);
  LieHom d = diagonal_disk(f.codomain);
  Rational denom = f.codomain.lambda_z(d.apply(z_d()));
  if (denom == 0) throw std::logic_error("disk_coefficient: degenerate diagonal disk");
  return raw / denom;
}

bool is_H1(const LieHom& f, H1Mode mode) {
  Mat z1img = f.apply(f.domain.Z());
  if (mode == H1Mode::StrictAd) {
    for (const auto& c : f.codomain.basis())
      if (!(bracket(z1img, c) == bracket(f.codomain.Z(), c))) return false;
    return true;
  }
  for (size_t i = 0; i < f.images.size(); ++i) {
    Mat lhs = f.apply(bracket(f.domain.Z(), f.domain.basis()[i]));
    Mat rhs = bracket(f.codomain.Z(), f.images[i]);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

bool is_H2(const LieHom& f) { return f.apply(f.domain.Z()) == f.codomain.Z(); }

std::vector<Rational> pullback_coefficients(const LieHom& f) {
  std::vector<Rational> out;
  const Rational rc(f.codomain.rank());
  for (size_t i = 0; i < f.domain.num_factors(); ++i) {
    LieHom disk = diagonal_disk(Algebra::simple(f.domain.factors()[i]));
    LieHom through = compose(compose(disk, factor_inclusion(f.domain, i)), f);
    Rational dc = disk_coefficient(through);
    out.push_back(rc / Rational(f.domain.factors()[i].rank) * dc);
  }
  return out;
}

bool is_tight(const LieHom& f) {
  Rational sum(0);
  auto lambdas = pullback_coefficients(f);
  for (size_t i = 0; i < lambdas.size(); ++i)
    sum += abs(lambdas[i]) * Rational(f.domain.factors()[i].rank);
  return sum == Rational(f.codomain.rank());
}

bool is_positive(const LieHom& f) {
  for (const auto& l : pullback_coefficients(f))
    if (l < 0) return false;
  return true;
}

HullResult hermitian_hull(const LieHom& f) {
  require_sl2_domain(f, "hermitian_hull");
  HullResult out;
  out.kind = f.codomain.tube() ? "hermitian_hull" : "generated_subalgebra";
  out.tight = is_tight(f);

  const size_t amb = f.codomain.ambient();
  const size_t full = f.codomain.dim();  // the closure cannot exceed the algebra
  RationalSpan span(2 * amb * amb);
  std::vector<Mat> gens;
  auto push = [&](const Mat& m) {
    if (span.insert(m)) gens.push_back(m);
  };
  for (const auto& img : f.images) push(img);
  push(f.codomain.Z());
  // grow by brackets until stable; bounded by the ambient algebra dimension
  for (size_t i = 0; i < gens.size() && span.rank() < full; ++i)
    for (size_t j = 0; j < i && span.rank() < full; ++j) push(bracket(gens[i], gens[j]));
  out.basis = gens;
  out.dim = span.rank();
  return out;
}

std::vector<int> isotypic_decomposition(const LieHom& f) {
  require_sl2_domain(f, "isotypic_decomposition");
  const Mat& rh = f.images[1];  // image of H = diag(1,-1)
  const size_t amb = f.codomain.ambient();
  const long kmax = static_cast<long>(amb);
  std::map<long, size_t> mult;
  size_t total = 0;
  for (long k = -kmax; k <= kmax; ++k) {
    Mat shifted = rh;
    for (size_t i = 0; i < amb; ++i) shifted.at(i, i) -= ExactScalar(Rational(k));
    size_t mk = amb - shifted.rank();
    if (mk) {
      mult[k] = mk;
      total += mk;
    }
  }
  if (total != amb)
    throw std::invalid_argument(
        "isotypic_decomposition: non-integral weights (image of H is not diagonalizable over Z); "
        "not a valid sl2 module map");
  for (const auto& [k, mk] : mult)
    if (mult.count(-k) == 0 || mult.at(-k) != mk)
      throw std::invalid_argument("isotypic_decomposition: asymmetric weight multiset");
  std::vector<int> ns;
  for (long k = kmax; k >= 0; --k) {
    size_t mk = mult.count(k) ? mult.at(k) : 0;
    size_t mk2 = mult.count(k + 2) ? mult.at(k + 2) : 0;
    if (mk < mk2) throw std::invalid_argument("isotypic_decomposition: negative multiplicity");
    size_t copies = mk - mk2;
    if (!copies) continue;
    if ((k + 1) % 2 != 0) {
      std::ostringstream os;
      os << "isotypic_decomposition: odd-dimensional component of dimension " << (k + 1)
         << " (not a symplectic pairing)";
      throw std::invalid_argument(os.str());
    }
    for (size_t c = 0; c < copies; ++c) ns.push_back(static_cast<int>((k + 1) / 2));
  }
  return ns;
}

TightnessReport analyze(const LieHom& f, bool with_hull) {
  HomWitness w = check_homomorphism(f);
  if (!w.ok) {
    std::ostringstream os;
    os << "analyze: '" << f.label << "' is not a Lie algebra homomorphism; bracket fails on basis "
       << "pair (" << w.i << "," << w.j << ")";
    throw std::invalid_argument(os.str());
  }
  if (!check_cartan(f))
    throw std::invalid_argument("analyze: '" + f.label + "' does not respect the Cartan decompositions");

  TightnessReport rep;
  rep.label = f.label;
  rep.target_rank = f.codomain.rank();
  rep.norm_numerator = 0;
  const Rational rc(rep.target_rank);
  for (size_t i = 0; i < f.domain.num_factors(); ++i) {
    FactorCoefficient fc;
    fc.index = i;
    fc.rank = f.domain.factors()[i].rank;
    LieHom disk = diagonal_disk(Algebra::simple(f.domain.factors()[i]));
    LieHom through = compose(compose(disk, factor_inclusion(f.domain, i)), f);
    fc.dc_raw = disk_coefficient_raw(through);
    fc.tp_z = trace_pairing(f.codomain.Z(), through.apply(z_d()));
    LieHom dcod = diagonal_disk(f.codomain);
    Rational denom = f.codomain.lambda_z(dcod.apply(z_d()));
    fc.dc = fc.dc_raw / denom;
    fc.lambda = rc / Rational(fc.rank) * fc.dc;
    rep.norm_numerator += abs(fc.lambda) * Rational(fc.rank);
    rep.factors.push_back(std::move(fc));
  }
  rep.tight = (rep.norm_numerator == rc);
  rep.positive = true;
  for (const auto& fc : rep.factors)
    if (fc.lambda < 0) rep.positive = false;
  rep.h1 = is_H1(f);
  rep.h2 = is_H2(f);
  if (with_hull && f.domain.same_presentation(sl2())) {
    HullResult hull = hermitian_hull(f);
    rep.hull_dim = hull.dim;
    rep.hull_kind = hull.kind;
  }
  return rep;
}

}  // namespace tightlie
