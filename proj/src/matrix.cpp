#include "tightlie/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace tightlie {

Mat Mat::identity(size_t dim) {
  Mat m(dim);
  for (size_t i = 0; i < dim; ++i) m.at(i, i) = ExactScalar(1);
  return m;
}

Mat& Mat::operator+=(const Mat& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("Mat+: dimension mismatch");
  for (size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("Mat-: dimension mismatch");
  for (size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("Mat*: dimension mismatch");
  const size_t n = a.dim_;
  Mat r(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      const ExactScalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < n; ++j) {
        const ExactScalar& bkj = b.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

Mat operator*(const ExactScalar& c, Mat a) {
  for (size_t i = 0; i < a.dim_; ++i)
    for (size_t j = 0; j < a.dim_; ++j) a.at(i, j) *= c;
  return a;
}

Mat Mat::operator-() const {
  Mat r(dim_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
  return r;
}

Mat Mat::transpose() const {
  Mat r(dim_);
  for (size_t i = 0; i < dim_; ++i)
    for (size_t j = 0; j < dim_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Mat Mat::conj() const {
  Mat r(dim_);
  for (size_t i = 0; i < dim_; ++i)
    for (size_t j = 0; j < dim_; ++j) r.at(i, j) = at(i, j).conj();
  return r;
}

Mat Mat::conj_transpose() const {
  Mat r(dim_);
  for (size_t i = 0; i < dim_; ++i)
    for (size_t j = 0; j < dim_; ++j) r.at(j, i) = at(i, j).conj();
  return r;
}

ExactScalar Mat::trace() const {
  ExactScalar t;
  for (size_t i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

bool Mat::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

Mat Mat::inverse() const {
  const size_t n = dim_;
  Mat a(*this), inv = Mat::identity(n);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a.at(piv, col).is_zero()) ++piv;
    if (piv == n) throw std::invalid_argument("Mat::inverse: singular matrix");
    if (piv != col)
      for (size_t j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    ExactScalar d = a.at(col, col);
    for (size_t j = 0; j < n; ++j) {
      a.at(col, j) /= d;
      inv.at(col, j) /= d;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == col || a.at(i, col).is_zero()) continue;
      ExactScalar f = a.at(i, col);
      for (size_t j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

size_t Mat::rank() const {
  Mat a(*this);
  const size_t n = dim_;
  size_t r = 0;
  for (size_t col = 0; col < n && r < n; ++col) {
    size_t piv = r;
    while (piv < n && a.at(piv, col).is_zero()) ++piv;
    if (piv == n) continue;
    if (piv != r)
      for (size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(r, j));
    ExactScalar d = a.at(r, col);
    for (size_t i = r + 1; i < n; ++i) {
      if (a.at(i, col).is_zero()) continue;
      ExactScalar f = a.at(i, col) / d;
      for (size_t j = col; j < n; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    ++r;
  }
  return r;
}

int Mat::definiteness() const {
  const size_t n = dim_;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (!at(i, j).is_real()) return 0;
      if (at(i, j).re != at(j, i).re) return 0;
    }
  // leading principal minors via fraction-free-ish elimination on a copy
  std::vector<Rational> minors;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = at(i, j).re;
  Rational det(1);
  for (size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) return 0;  // definite matrices have nonzero leading minors
    det *= a[k][k];
    minors.push_back(det);
    for (size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rational f = a[i][k] / a[k][k];
      for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  bool pos = true, neg = true;
  for (size_t k = 0; k < n; ++k) {
    if (minors[k] <= 0) pos = false;
    bool wantneg = (k % 2 == 0);
    if (wantneg ? minors[k] >= 0 : minors[k] <= 0) neg = false;
  }
  if (pos) return 1;
  if (neg) return -1;
  return 0;
}

std::string Mat::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < dim_; ++i) {
    os << (i == 0 ? "[" : " ") << "[";
    for (size_t j = 0; j < dim_; ++j) os << (j ? ", " : "") << at(i, j).str();
    os << "]" << (i + 1 == dim_ ? "]" : "\n");
  }
  return os.str();
}

Mat bracket(const Mat& x, const Mat& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("bracket: dimension mismatch");
  return x * y - y * x;
}

Rational trace_pairing(const Mat& x, const Mat& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("trace_pairing: dimension mismatch");
  // Re tr(XY) without forming the full product
  Rational t(0);
  const size_t n = x.dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      const ExactScalar& a = x.at(i, k);
      const ExactScalar& b = y.at(k, i);
      if (!a.is_zero() && !b.is_zero()) t += a.re * b.re - a.im * b.im;
    }
  return t;
}

}  // namespace tightlie
