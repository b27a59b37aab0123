#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tightlie/hom.hpp"

namespace tightlie {

/// Result of the exhaustive basis-pair bracket check. When ok is false,
/// (i, j) is the offending pair and residual = rho([Bi,Bj]) - [rho Bi, rho Bj].
struct HomWitness {
  bool ok = true;
  size_t i = 0, j = 0;
  Mat residual;
};

HomWitness check_homomorphism(const LieHom& f);

/// rho(k1) in k2 and rho(p1) in p2, by exact membership.
bool check_cartan(const LieHom& f);

/// lambda_{Z2}(rho(Z_D)) for a map from sl(2,R), un-normalized.
Rational disk_coefficient_raw(const LieHom& f);

/// Normalized disk coefficient lambda_Z(rho(Z_D)) / lambda_Z(d(Z_D)) with d
/// the diagonal disk of the codomain; +-1 exactly on tight disks, +1 on
/// tight positive ones.
Rational disk_coefficient(const LieHom& f);

enum class H1Mode {
  Intertwine,  // rho([Z1,X]) = [Z2, rho(X)] for all domain basis X
  StrictAd,    // ad(rho(Z1)) = ad(Z2) on the codomain (= H2 for semisimple targets)
};
bool is_H1(const LieHom& f, H1Mode mode = H1Mode::Intertwine);
bool is_H2(const LieHom& f);

/// Pullback coefficients per irreducible domain factor:
/// lambda_i = (rank(codomain) / rank_i) * disk_coefficient(rho ∘ incl_i ∘ d_i).
std::vector<Rational> pullback_coefficients(const LieHom& f);

bool is_tight(const LieHom& f);
bool is_positive(const LieHom& f);

struct FactorCoefficient {
  size_t index = 0;
  Rational dc;      // normalized disk coefficient of the factor disk
  Rational dc_raw;  // raw lambda_{Z2} value of the same composite
  Rational tp_z;    // trace_pairing(Z2, rho(incl(d(Z_D)))), exact
  int rank = 0;     // factor rank
  Rational lambda;  // pullback coefficient
};

struct TightnessReport {
  std::string label;
  std::vector<FactorCoefficient> factors;
  int target_rank = 0;
  Rational norm_numerator;  // sum |lambda_i| * rank_i
  bool tight = false;
  bool positive = false;
  bool h1 = false;
  bool h2 = false;
  std::optional<size_t> hull_dim;  // maps from sl(2,R) only
  std::string hull_kind;           // "hermitian_hull" | "generated_subalgebra" | ""
};

/// Full report; throws std::invalid_argument (with the witness pair in the
/// message) when f is not a Cartan-respecting homomorphism.
TightnessReport analyze(const LieHom& f, bool with_hull = true);

struct HullResult {
  std::vector<Mat> basis;
  size_t dim = 0;
  std::string kind;  // as in TightnessReport
  bool tight = false;
};

/// Bracket closure of span(rho(sl2) ∪ {Z2}). Domain must be sl(2,R).
HullResult hermitian_hull(const LieHom& f);

/// Multiset {n_i}: the image decomposes into irreducibles of dimension 2*n_i.
/// Errors on non-integral or asymmetric weights and on odd-dimensional
/// components (signals an input that is not a symplectic sl2 module).
std::vector<int> isotypic_decomposition(const LieHom& f);

}  // namespace tightlie
