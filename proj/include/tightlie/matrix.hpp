#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tightlie/scalar.hpp"

namespace tightlie {

/// Square matrix over ExactScalar. Everything is exact; operations that
/// require invertibility throw std::invalid_argument on singular input.
class Mat {
 public:
  Mat() = default;
  explicit Mat(size_t dim) : dim_(dim), e_(dim * dim) {}

  static Mat identity(size_t dim);

  size_t dim() const { return dim_; }
  bool empty() const { return dim_ == 0; }

  ExactScalar& at(size_t i, size_t j) { return e_[i * dim_ + j]; }
  const ExactScalar& at(size_t i, size_t j) const { return e_[i * dim_ + j]; }

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator*(const ExactScalar& c, Mat a);
  Mat operator-() const;

  Mat transpose() const;
  Mat conj() const;
  Mat conj_transpose() const;

  ExactScalar trace() const;
  bool is_zero() const;
  friend bool operator==(const Mat& a, const Mat& b) { return a.dim_ == b.dim_ && a.e_ == b.e_; }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  /// Gauss-Jordan inverse over Q(i).
  Mat inverse() const;

  /// Rank over Q(i) by exact elimination.
  size_t rank() const;

  /// For real symmetric matrices: +1 positive definite, -1 negative definite,
  /// 0 otherwise (decided exactly through the leading principal minors).
  int definiteness() const;

  std::string str() const;  // human-readable, for diagnostics

 private:
  size_t dim_ = 0;
  std::vector<ExactScalar> e_;
};

/// Commutator XY - YX. Throws on dimension mismatch.
Mat bracket(const Mat& x, const Mat& y);

/// Re tr(XY). Proportional to the Killing form on each simple family; the
/// proportionality constant cancels in every lambda-ratio this library reports.
Rational trace_pairing(const Mat& x, const Mat& y);

}  // namespace tightlie
