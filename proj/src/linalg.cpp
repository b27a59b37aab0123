#include "tightlie/linalg.hpp"

#include <map>
#include <stdexcept>

namespace tightlie {

RatVec flatten(const Mat& m) {
  RatVec v;
  v.reserve(2 * m.dim() * m.dim());
  for (size_t i = 0; i < m.dim(); ++i)
    for (size_t j = 0; j < m.dim(); ++j) {
      v.push_back(m.at(i, j).re);
      v.push_back(m.at(i, j).im);
    }
  return v;
}

void RationalSpan::reduce(RatVec& v, RatVec* coeffs) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Row& row = rows_[r];
    Rational f = v[row.pivot];
    if (f == 0) continue;
    for (size_t k = 0; k < ambient_; ++k)
      if (row.v[k] != 0) v[k] -= f * row.v[k];
    if (coeffs) (*coeffs)[r] = f;
  }
}

bool RationalSpan::insert(const RatVec& vin) {
  if (vin.size() != ambient_) throw std::invalid_argument("RationalSpan: wrong vector length");
  size_t my_index = n_gen_++;
  RatVec v = vin;
  RatVec coeffs(rows_.size(), Rational(0));
  reduce(v, &coeffs);
  size_t pivot = ambient_;
  for (size_t k = 0; k < ambient_; ++k)
    if (v[k] != 0) {
      pivot = k;
      break;
    }
  if (pivot == ambient_) return false;  // dependent

  // combo of the reduced row over generators: e_my - sum coeffs_r * combo_r
  RatVec combo(n_gen_, Rational(0));
  combo[my_index] = 1;
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (coeffs[r] == 0) continue;
    const RatVec& rc = rows_[r].combo;
    for (size_t g = 0; g < rc.size(); ++g) combo[g] -= coeffs[r] * rc[g];
  }
  Rational d = v[pivot];
  for (auto& x : v) x /= d;
  for (auto& x : combo) x /= d;

  // back-eliminate the new pivot from existing rows
  for (auto& row : rows_) {
    Rational f = row.v[pivot];
    if (f == 0) continue;
    for (size_t k = 0; k < ambient_; ++k)
      if (v[k] != 0) row.v[k] -= f * v[k];
    row.combo.resize(n_gen_, Rational(0));
    for (size_t g = 0; g < combo.size(); ++g) row.combo[g] -= f * combo[g];
  }
  rows_.push_back(Row{std::move(v), pivot, std::move(combo)});
  return true;
}

bool RationalSpan::contains(const RatVec& vin) const {
  if (vin.size() != ambient_) throw std::invalid_argument("RationalSpan: wrong vector length");
  RatVec v = vin;
  reduce(v, nullptr);
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

std::optional<RatVec> RationalSpan::coordinates(const RatVec& vin) const {
  if (vin.size() != ambient_) throw std::invalid_argument("RationalSpan: wrong vector length");
  RatVec v = vin;
  RatVec coeffs(rows_.size(), Rational(0));
  reduce(v, &coeffs);
  for (const auto& x : v)
    if (x != 0) return std::nullopt;
  RatVec out(n_gen_, Rational(0));
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (coeffs[r] == 0) continue;
    const RatVec& rc = rows_[r].combo;
    for (size_t g = 0; g < rc.size(); ++g) out[g] += coeffs[r] * rc[g];
  }
  return out;
}

namespace {

struct Gaussian {
  mpz_class a, b;  // a + b i
};

Gaussian gmul(const Gaussian& x, const Gaussian& y) {
  return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
}

mpz_class gnorm(const Gaussian& x) { return x.a * x.a + x.b * x.b; }

// rounded quotient for Gaussian division
mpz_class round_div(const mpz_class& n, const mpz_class& d) {
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (2 * r >= d) q += 1;
  return q;
}

Gaussian ggcd(Gaussian x, Gaussian y) {
  while (gnorm(y) != 0) {
    mpz_class n = gnorm(y);
    // q = round(x / y) = round(x * conj(y) / |y|^2)
    Gaussian num = gmul(x, {y.a, -y.b});
    Gaussian q{round_div(num.a, n), round_div(num.b, n)};
    Gaussian r{x.a - (q.a * y.a - q.b * y.b), x.b - (q.a * y.b + q.b * y.a)};
    x = y;
    y = r;
  }
  return x;
}

// p = 1 mod 4 prime: returns g with a^2 + b^2 = p
Gaussian split_prime(const mpz_class& p) {
  mpz_class e = (p - 1) / 2, e4 = (p - 1) / 4;
  for (mpz_class a = 2;; ++a) {
    mpz_class t;
    mpz_powm(t.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    if (t == p - 1) {
      mpz_class z;
      mpz_powm(z.get_mpz_t(), a.get_mpz_t(), e4.get_mpz_t(), p.get_mpz_t());
      return ggcd(Gaussian{p, 0}, Gaussian{z, 1});
    }
  }
}

}  // namespace

bool two_squares(const Rational& r, Rational& x, Rational& y) {
  if (r < 0) return false;
  if (r == 0) {
    x = 0;
    y = 0;
    return true;
  }
  mpz_class num = r.get_num(), den = r.get_den();
  mpz_class n = num * den;  // r = n / den^2

  std::map<mpz_class, unsigned> fac;
  mpz_class m = n;
  for (mpz_class p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    while (m % p == 0) {
      ++fac[p];
      m /= p;
    }
    if (p > 2000000) break;  // forms in practice have tiny entries
  }
  if (m > 1) {
    if (!mpz_probab_prime_p(m.get_mpz_t(), 30)) return false;  // unfactored composite: give up
    ++fac[m];
  }

  Gaussian g{1, 0};
  for (const auto& [p, e] : fac) {
    if (p == 2) {
      for (unsigned k = 0; k < e; ++k) g = gmul(g, {1, 1});
    } else if (p % 4 == 1) {
      Gaussian pi = split_prime(p);
      for (unsigned k = 0; k < e; ++k) g = gmul(g, pi);
    } else {
      if (e % 2) return false;
      mpz_class pk;
      mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e / 2);
      g = gmul(g, {pk, 0});
    }
  }
  x = Rational(abs(g.a), den);
  x.canonicalize();
  y = Rational(abs(g.b), den);
  y.canonicalize();
  return true;
}

}  // namespace tightlie
