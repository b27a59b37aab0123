#pragma once

#include <string>
#include <vector>

#include "tightlie/algebra.hpp"

namespace tightlie {

/// Real-linear map between Hermitian Lie algebras, given by the images of the
/// domain basis elements. Construction validates shape and exact membership
/// of every image in the codomain; whether the map is a Lie algebra
/// homomorphism is a separate check (tightness module).
struct LieHom {
  Algebra domain;
  Algebra codomain;
  std::vector<Mat> images;
  std::string label;

  /// Applies the linear extension to any element of the domain span.
  /// Throws when x lies outside the domain.
  Mat apply(const Mat& x) const;
};

/// sl(2,R) presented as sp(2,R); basis K1=[[0,1],[-1,0]], H=diag(1,-1), S=[[0,1],[1,0]].
const Algebra& sl2();

LieHom from_images(Algebra domain, Algebra codomain, std::vector<Mat> images,
                   std::string label = "user");
LieHom identity_hom(const Algebra& g);

/// Diagonal disk of g: sl(2,R) -> g through the diagonal of a maximal
/// polydisk. For symplectic factors the image of Z_D is exactly Z.
LieHom diagonal_disk(const Algebra& g);

/// The 2n-dimensional irreducible representation sl(2,R) -> sp(2n,R), kept in
/// its native polynomial-basis skew form.
LieHom irreducible_sl2_to_sp(int n);

/// su(1,2) -> su(2,4) on the symmetric square with the induced Hermitian form.
LieHom sym2_su12_to_su24();

/// The two embeddings of sl(2,R) into sl(4,R) read against both symplectic
/// forms of Example-8.13 type, plus the conjugating matrix s.
struct Sp4Embeddings {
  LieHom iA_in_spA, iB_in_spA, iA_in_spB, iB_in_spB;
  Mat s;       // conjugates (i_A, J) to (i_B, J~)
  Mat form_a;  // J
  Mat form_b;  // J~
};
Sp4Embeddings sp4_embeddings();

/// Block-corner inclusion su(p1,q1) -> su(p2,q2), standard forms.
LieHom corner_su(int p1, int q1, int p2, int q2);

/// Pipeline composition: result(x) = then(first(x)).
LieHom compose(const LieHom& first, const LieHom& then);

/// Diagonal direct sum of homs sharing one domain, into the block-diagonal
/// symplectic algebra of the summed forms.
LieHom direct_sum_hom(const std::vector<LieHom>& parts);

/// f composed with Ad(g) on the domain (g must normalize the domain).
LieHom precompose_ad(const LieHom& f, const Mat& g);
/// Ad(g) composed with f on the codomain (g must preserve the codomain form).
LieHom postcompose_ad(const LieHom& f, const Mat& g);

/// Inclusion of the i-th summand of a direct-sum algebra.
LieHom factor_inclusion(const Algebra& sum, size_t factor);

/// Numeric frame to the standard presentation: F with F^T Omega F = +-Omega_std
/// and F^{-1} (2Z) F = J_std, as doubles. Symplectic single factors only;
/// used to hand exact maps to the floating-point Siegel-disk realization.
std::vector<std::vector<double>> standard_symplectic_frame(const SimpleAlgebra& a);

}  // namespace tightlie
