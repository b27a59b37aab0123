#pragma once

#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "tightlie/linalg.hpp"
#include "tightlie/matrix.hpp"

namespace tightlie {

enum class Family { SpR, SUpq };
enum class CartanPart { K, P, Mixed };

/// One irreducible classical factor, sp(2n,R) or su(p,q), presented as a
/// matrix algebra over exact scalars: defining form, Cartan-adapted real
/// basis (k block first), central complex-structure element Z, and the
/// images of the sl(2,R) basis under a diagonal disk of this factor.
struct SimpleAlgebra {
  Family family = Family::SpR;
  int n = 0;         // SpR: ambient = 2n
  int p = 0, q = 0;  // SUpq: ambient = p+q
  size_t ambient = 0;
  Mat form;
  std::vector<Mat> basis;
  size_t k_dim = 0;  // basis[0..k_dim) spans k, the rest spans p
  Mat Z;
  int rank = 0;
  std::array<Mat, 3> disk_images;  // of K1=[[0,1],[-1,0]], H=diag(1,-1), S=[[0,1],[1,0]]
  std::string name;
  Mat frame;                     // SpR: adapted pair basis; SUpq: congruence matrix
  std::vector<Rational> frame_c;  // SpR: pair values Omega(v,Jv); SUpq: diagonalized form

  size_t dim() const { return basis.size(); }
  bool tube() const { return family == Family::SpR || p == q; }
  bool contains(const Mat& x) const;
};

/// Change of basis to the standard symplectic presentation, as doubles:
/// F^T Omega F = +-Omega_std and F^{-1}(2Z)F = J_std. Symplectic factors only.
std::vector<std::vector<double>> standard_symplectic_frame(const SimpleAlgebra& a);

/// sp(2n,R) for the standard block form [[0,I],[-I,0]], or for an arbitrary
/// nondegenerate skew form. Z is the standard (1/2)[[0,-I],[I,0]] in the
/// first case and is solved from a Darboux normalization otherwise.
SimpleAlgebra make_sp(int n);
SimpleAlgebra make_sp(int n, const Mat& form);

/// sp of an arbitrary skew form with an explicitly prescribed central
/// element Z = J/2 (J a form-compatible complex structure). The Cartan split
/// is derived from Z. Used by catalog constructions that carry their own J.
SimpleAlgebra make_sp_with_z(int n, const Mat& form, const Mat& Z);

/// su(p,q) for diag(I_p,-I_q) or an arbitrary Hermitian form of that signature.
SimpleAlgebra make_su(int p, int q);
SimpleAlgebra make_su(int p, int q, const Mat& form);

/// A Hermitian Lie algebra: block-diagonal direct sum of one or more simple
/// factors. Single-factor instances model the irreducible case; every
/// operation treats both uniformly. Immutable after construction; all
/// operations are const and safe for concurrent use.
class Algebra {
 public:
  Algebra() = default;
  static Algebra simple(SimpleAlgebra a);
  static Algebra direct_sum(const std::vector<Algebra>& parts);

  const std::vector<SimpleAlgebra>& factors() const { return d_->factors; }
  size_t num_factors() const { return d_->factors.size(); }
  size_t ambient() const { return d_->ambient; }
  size_t dim() const { return d_->basis.size(); }
  int rank() const { return d_->rank; }
  bool tube() const;
  const Mat& Z() const { return d_->Z; }
  const std::vector<Mat>& basis() const { return d_->basis; }
  size_t factor_of_basis(size_t idx) const { return d_->basis_factor[idx]; }
  bool basis_in_k(size_t idx) const { return d_->basis_is_k[idx]; }
  const std::string& name() const { return d_->name; }
  size_t factor_offset(size_t f) const { return d_->offsets[f]; }

  /// Exact membership: block structure plus the defining form relation(s).
  bool contains(const Mat& x) const;
  bool in_k(const Mat& x) const;  // contains(x) and [Z,x] = 0
  bool in_p(const Mat& x) const;  // contains(x) and ad(Z)^2 x = -x
  CartanPart cartan_component(const Mat& x) const;

  /// Orthogonal projection coefficient onto R*Z under the trace pairing.
  /// Throws with a diagnostic naming the violating component when x is not
  /// in k.
  Rational lambda_z(const Mat& x) const;

  /// Exact basis of the center of k (solved, not assumed).
  std::vector<Mat> center_of_k() const;

  /// Places a factor-sized matrix in its diagonal block.
  Mat embed(size_t factor, const Mat& x) const;

  /// Coefficients of x over basis(), or nullopt when x is outside the span.
  std::optional<std::vector<Rational>> coordinates(const Mat& x) const;

  /// Same ambient dimension, factor split and defining forms.
  bool same_presentation(const Algebra& o) const;

  bool valid() const { return d_ != nullptr; }

 private:
  struct Data {
    std::vector<SimpleAlgebra> factors;
    std::vector<size_t> offsets;
    size_t ambient = 0;
    Mat Z;
    std::vector<Mat> basis;
    std::vector<size_t> basis_factor;
    std::vector<bool> basis_is_k;
    int rank = 0;
    std::string name;
    mutable std::once_flag span_once;
    mutable std::unique_ptr<RationalSpan> span;
  };
  const RationalSpan& span() const;
  std::shared_ptr<Data> d_;
};

/// Exact rank of an algebra descriptor.
inline int rank(const Algebra& g) { return g.rank(); }

}  // namespace tightlie
