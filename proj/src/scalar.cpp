#include "tightlie/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace tightlie {

std::string rat_str(const Rational& r) { return r.get_str(); }

Rational rat_parse(const std::string& in) {
  std::string s = in;
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in: '" + s + "'");
  r.canonicalize();
  return r;
}

double rat_double(const Rational& r) { return r.get_d(); }

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  re += o.re;
  im += o.im;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  Rational n = o.norm2();
  if (n == 0) throw std::invalid_argument("division by zero ExactScalar");
  // (a+bi)/(c+di) = (a+bi)(c-di)/(c^2+d^2)
  Rational r = (re * o.re + im * o.im) / n;
  Rational i = (im * o.re - re * o.im) / n;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::string ExactScalar::str() const {
  if (im == 0) return rat_str(re);
  std::string out = rat_str(re);
  if (im > 0) out += "+";
  out += rat_str(im);
  out += " i";
  return out;
}

ExactScalar ExactScalar::parse(const std::string& input) {
  std::string s;
  s.reserve(input.size());
  for (char c : input)
    if (c != ' ' && c != '\t') s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty scalar literal");
  bool imaginary = false;
  if (s.back() == 'i') {
    imaginary = true;
    s.pop_back();
    if (s.empty()) return ExactScalar::i();
  }
  if (!imaginary) return ExactScalar(rat_parse(s));
  // find the sign splitting real and imaginary parts; skip a leading sign
  for (size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/' && s[k - 1] != '+' && s[k - 1] != '-') {
      Rational re = rat_parse(s.substr(0, k));
      std::string imtxt = s.substr(k);
      if (imtxt == "+") return ExactScalar(re, Rational(1));
      if (imtxt == "-") return ExactScalar(re, Rational(-1));
      return ExactScalar(re, rat_parse(imtxt));
    }
  }
  // pure imaginary like "2/3i" or "-i"
  if (s == "-") return ExactScalar(Rational(0), Rational(-1));
  if (s == "+") return ExactScalar(Rational(0), Rational(1));
  return ExactScalar(Rational(0), rat_parse(s));
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& s) { return os << s.str(); }

}  // namespace tightlie
