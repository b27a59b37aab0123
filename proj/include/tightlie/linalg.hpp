#pragma once

#include <optional>
#include <vector>

#include "tightlie/matrix.hpp"

namespace tightlie {

using RatVec = std::vector<Rational>;

/// Flattens a complex matrix into 2*dim^2 real rational coordinates.
RatVec flatten(const Mat& m);

/// Growing subspace of Q^ambient kept in reduced row echelon form, with the
/// expression of every row over the inserted generators tracked so that exact
/// coordinates can be recovered.
class RationalSpan {
 public:
  explicit RationalSpan(size_t ambient) : ambient_(ambient) {}

  /// Inserts a generator; returns true when the rank grew.
  bool insert(const RatVec& v);
  bool insert(const Mat& m) { return insert(flatten(m)); }

  bool contains(const RatVec& v) const;
  bool contains(const Mat& m) const { return contains(flatten(m)); }

  /// Coefficients over the inserted generators, or nullopt when v is outside
  /// the span. (Coefficients are zero on generators that did not grow the
  /// span, so they are unique over the independent ones.)
  std::optional<RatVec> coordinates(const RatVec& v) const;
  std::optional<RatVec> coordinates(const Mat& m) const { return coordinates(flatten(m)); }

  size_t rank() const { return rows_.size(); }
  size_t ambient() const { return ambient_; }
  size_t generators() const { return n_gen_; }

 private:
  struct Row {
    RatVec v;
    size_t pivot;
    RatVec combo;  // over inserted generators, length n_gen_ at insertion time
  };
  // reduce v in place by the stored rows; accumulate row coefficients if asked
  void reduce(RatVec& v, RatVec* coeffs) const;

  size_t ambient_;
  size_t n_gen_ = 0;
  std::vector<Row> rows_;
};

/// Writes r = x^2 + y^2 with x,y rational, if possible. Returns false when r
/// is not a sum of two rational squares (equivalently num(r)*den(r) has a
/// prime = 3 mod 4 with odd exponent).
bool two_squares(const Rational& r, Rational& x, Rational& y);

}  // namespace tightlie
