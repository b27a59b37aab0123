#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace tightlie {

/// Exact rational scalar. All Lie-algebra computations in this library are
/// carried out over these; there is no rounding anywhere in the exact layer.
using Rational = mpq_class;

/// Canonical "p/q" form (q > 0, gcd = 1; plain "p" when q = 1).
std::string rat_str(const Rational& r);

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
Rational rat_parse(const std::string& s);

double rat_double(const Rational& r);

/// Complex number with exact rational real and imaginary parts.
struct ExactScalar {
  Rational re, im;

  ExactScalar() : re(0), im(0) {}
  ExactScalar(int v) : re(v), im(0) {}
  ExactScalar(long v) : re(v), im(0) {}
  ExactScalar(const Rational& r) : re(r), im(0) {}
  ExactScalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static ExactScalar i() { return ExactScalar(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  ExactScalar conj() const { return ExactScalar(re, -im); }
  Rational norm2() const { return re * re + im * im; }

  ExactScalar operator-() const { return ExactScalar(-re, -im); }
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

  /// Text form: "p/q" when real, otherwise "p/q+r/s i" (or "-" for negative
  /// imaginary part). This is the serialization contract used everywhere.
  std::string str() const;

  /// Inverse of str(). Accepts optional spaces around the sign and the "i".
  static ExactScalar parse(const std::string& s);
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& s);

}  // namespace tightlie
