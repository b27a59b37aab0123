#include "tightlie/algebra.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tightlie {

namespace {

using CVec = std::vector<ExactScalar>;

CVec mat_vec(const Mat& m, const CVec& v) {
  CVec r(m.dim());
  for (size_t i = 0; i < m.dim(); ++i)
    for (size_t j = 0; j < m.dim(); ++j)
      if (!m.at(i, j).is_zero() && !v[j].is_zero()) r[i] += m.at(i, j) * v[j];
  return r;
}

/// bilinear u^T form v
ExactScalar bil(const Mat& form, const CVec& u, const CVec& v) {
  CVec fv = mat_vec(form, v);
  ExactScalar s;
  for (size_t i = 0; i < u.size(); ++i)
    if (!u[i].is_zero() && !fv[i].is_zero()) s += u[i] * fv[i];
  return s;
}

/// sesquilinear conj(u)^T form v
ExactScalar sesq(const Mat& form, const CVec& u, const CVec& v) {
  CVec fv = mat_vec(form, v);
  ExactScalar s;
  for (size_t i = 0; i < u.size(); ++i)
    if (!u[i].is_zero() && !fv[i].is_zero()) s += u[i].conj() * fv[i];
  return s;
}

CVec unit_vec(size_t dim, size_t k) {
  CVec v(dim);
  v[k] = ExactScalar(1);
  return v;
}

Mat columns_to_mat(const std::vector<CVec>& cols) {
  Mat m(cols.size());
  for (size_t j = 0; j < cols.size(); ++j)
    for (size_t i = 0; i < cols.size(); ++i) m.at(i, j) = cols[j][i];
  return m;
}

Mat std_sp_form(int n) {
  Mat f(2 * n);
  for (int k = 0; k < n; ++k) {
    f.at(k, n + k) = ExactScalar(1);
    f.at(n + k, k) = ExactScalar(-1);
  }
  return f;
}

Mat std_sp_z(int n) {
  Mat z(2 * n);
  Rational half(1, 2);
  for (int k = 0; k < n; ++k) {
    z.at(k, n + k) = ExactScalar(Rational(-1) * half);
    z.at(n + k, k) = ExactScalar(half);
  }
  return z;
}

/// Symplectic Gram-Schmidt pairs (v_k, J v_k) with Omega(v_i, J v_j) = c_i d_ij
/// and all other pairings zero; exact over Q.
void adapted_pairs(const Mat& form, const Mat& j, std::vector<CVec>& vs, std::vector<CVec>& jvs,
                   std::vector<ExactScalar>& cs) {
  const size_t dim = form.dim();
  const size_t n = dim / 2;
  vs.clear();
  jvs.clear();
  cs.clear();
  for (size_t cand = 0; cand < dim && vs.size() < n; ++cand) {
    CVec u = unit_vec(dim, cand);
    for (size_t k = 0; k < vs.size(); ++k) {
      ExactScalar alpha = bil(form, u, jvs[k]) / cs[k];
      ExactScalar beta = -(bil(form, u, vs[k]) / cs[k]);
      for (size_t i = 0; i < dim; ++i) u[i] -= alpha * vs[k][i] + beta * jvs[k][i];
    }
    bool zero = true;
    for (const auto& x : u)
      if (!x.is_zero()) {
        zero = false;
        break;
      }
    if (zero) continue;
    CVec ju = mat_vec(j, u);
    ExactScalar c = bil(form, u, ju);
    if (c.is_zero()) throw std::logic_error("adapted_pairs: degenerate pairing (J not compatible)");
    vs.push_back(std::move(u));
    jvs.push_back(std::move(ju));
    cs.push_back(std::move(c));
  }
  if (vs.size() != n) throw std::logic_error("adapted_pairs: could not complete a basis");
}

Mat e_matrix(size_t dim, size_t i, size_t j, const ExactScalar& v) {
  Mat m(dim);
  m.at(i, j) = v;
  return m;
}

/// Hermitian congruence diagonalization R^* H R = diag(d), d real rational.
void congruence_diagonalize(const Mat& h, Mat& r_out, std::vector<Rational>& d_out) {
  const size_t m = h.dim();
  std::vector<CVec> w;
  for (size_t k = 0; k < m; ++k) w.push_back(unit_vec(m, k));
  d_out.clear();
  for (size_t k = 0; k < m; ++k) {
    ExactScalar dk = sesq(h, w[k], w[k]);
    if (dk.is_zero()) {
      bool found = false;
      for (size_t j = k + 1; j < m && !found; ++j)
        if (!sesq(h, w[j], w[j]).is_zero()) {
          std::swap(w[k], w[j]);
          found = true;
        }
      for (size_t j = k + 1; j < m && !found; ++j) {
        ExactScalar c = sesq(h, w[k], w[j]);
        if (c.is_zero()) continue;
        ExactScalar t = (c.re != 0) ? ExactScalar(1) : ExactScalar::i();
        for (size_t i = 0; i < m; ++i) w[k][i] += t * w[j][i];
        found = true;
      }
      if (!found) throw std::invalid_argument("form is singular");
      dk = sesq(h, w[k], w[k]);
    }
    if (dk.im != 0) throw std::logic_error("congruence: non-real diagonal (form not Hermitian?)");
    for (size_t j = k + 1; j < m; ++j) {
      ExactScalar t = sesq(h, w[k], w[j]) / dk;
      if (t.is_zero()) continue;
      for (size_t i = 0; i < m; ++i) w[j][i] -= t * w[k][i];
    }
    d_out.push_back(dk.re);
  }
  r_out = columns_to_mat(w);
}

void validate_common(const SimpleAlgebra& a) {
  if (!a.contains(a.Z)) throw std::logic_error(a.name + ": Z violates the defining relation");
  // the recorded diagonal disk must be an sl2 homomorphism landing k->k, p->p
  const Mat &k1 = a.disk_images[0], &hh = a.disk_images[1], &ss = a.disk_images[2];
  if (!(bracket(k1, hh) + ExactScalar(2) * ss).is_zero() ||
      !(bracket(k1, ss) - ExactScalar(2) * hh).is_zero() ||
      !(bracket(hh, ss) - ExactScalar(2) * k1).is_zero())
    throw std::logic_error(a.name + ": diagonal disk is not a homomorphism");
  if (!bracket(a.Z, k1).is_zero())
    throw std::logic_error(a.name + ": diagonal disk K1-image is not in k");
  for (const Mat* pm : {&hh, &ss})
    if (!(bracket(a.Z, bracket(a.Z, *pm)) + *pm).is_zero())
      throw std::logic_error(a.name + ": diagonal disk p-image is not in p");
  // defining relation for each basis element, Z central on k, ad(Z)^2 = -1 on p
  for (size_t i = 0; i < a.basis.size(); ++i) {
    if (!a.contains(a.basis[i]))
      throw std::logic_error(a.name + ": basis element " + std::to_string(i) +
                             " violates the defining relation");
    if (i < a.k_dim) {
      if (!bracket(a.Z, a.basis[i]).is_zero())
        throw std::logic_error(a.name + ": k-basis element " + std::to_string(i) +
                               " does not commute with Z");
    } else {
      Mat ad2 = bracket(a.Z, bracket(a.Z, a.basis[i]));
      if (!(ad2 + a.basis[i]).is_zero())
        throw std::logic_error(a.name + ": ad(Z)^2 != -id on p-basis element " +
                               std::to_string(i));
    }
  }
}

SimpleAlgebra build_sp(int n, const Mat& form, const Mat& z) {
  const size_t dim = 2 * static_cast<size_t>(n);
  SimpleAlgebra a;
  a.family = Family::SpR;
  a.n = n;
  a.ambient = dim;
  a.form = form;
  a.Z = z;
  a.rank = n;
  {
    std::ostringstream os;
    os << "sp(" << dim << ",R)";
    a.name = os.str();
  }

  Mat j = ExactScalar(2) * z;
  if (!(j * j + Mat::identity(dim)).is_zero())
    throw std::invalid_argument(a.name + ": Z is not half a complex structure (4Z^2 != -I)");
  if (!(j.transpose() * form + form * j).is_zero())
    throw std::invalid_argument(a.name + ": 2Z does not preserve the form");
  if ((form * j).definiteness() == 0)
    throw std::invalid_argument(a.name + ": Omega*2Z is not definite (incompatible Z)");

  std::vector<CVec> vs, jvs;
  std::vector<ExactScalar> cs;
  adapted_pairs(form, j, vs, jvs, cs);
  std::vector<CVec> cols = vs;
  cols.insert(cols.end(), jvs.begin(), jvs.end());
  Mat s0 = columns_to_mat(cols);
  Mat s0i = s0.inverse();
  a.frame = s0;
  for (const auto& c : cs) a.frame_c.push_back(c.re);

  auto transported = [&](const Mat& upper_left, const Mat& upper_right, const Mat& lower_left,
                         const Mat& lower_right) {
    Mat b(dim);
    const size_t half = dim / 2;
    for (size_t i = 0; i < half; ++i)
      for (size_t jj = 0; jj < half; ++jj) {
        b.at(i, jj) = upper_left.at(i, jj);
        b.at(i, half + jj) = upper_right.at(i, jj);
        b.at(half + i, jj) = lower_left.at(i, jj);
        b.at(half + i, half + jj) = lower_right.at(i, jj);
      }
    return s0 * b * s0i;
  };

  const size_t half = dim / 2;
  Mat zero(half);
  auto inv_c = [&](size_t r) { return ExactScalar(1) / cs[r]; };

  // k block: [[A,B],[-B,A]] with C*A skew, C*B symmetric
  for (size_t r = 0; r < half; ++r)
    for (size_t s = r + 1; s < half; ++s) {
      Mat A = e_matrix(half, r, s, inv_c(r)) - e_matrix(half, s, r, inv_c(s));
      a.basis.push_back(transported(A, zero, zero, A));
    }
  for (size_t r = 0; r < half; ++r)
    for (size_t s = r; s < half; ++s) {
      Mat B = e_matrix(half, r, s, inv_c(r));
      if (s != r) B += e_matrix(half, s, r, inv_c(s));
      a.basis.push_back(transported(zero, B, -B, zero));
    }
  a.k_dim = a.basis.size();
  // p block: [[A,0],[0,-A]] and [[0,B],[B,0]] with C*A, C*B symmetric
  for (size_t r = 0; r < half; ++r)
    for (size_t s = r; s < half; ++s) {
      Mat A = e_matrix(half, r, s, inv_c(r));
      if (s != r) A += e_matrix(half, s, r, inv_c(s));
      a.basis.push_back(transported(A, zero, zero, -A));
    }
  for (size_t r = 0; r < half; ++r)
    for (size_t s = r; s < half; ++s) {
      Mat B = e_matrix(half, r, s, inv_c(r));
      if (s != r) B += e_matrix(half, s, r, inv_c(s));
      a.basis.push_back(transported(zero, B, B, zero));
    }

  // diagonal disk: X acts as itself on every pair (v_k, J v_k)
  auto disk = [&](const ExactScalar& aa, const ExactScalar& bb, const ExactScalar& cc,
                  const ExactScalar& dd) {
    Mat ul(half), ur(half), ll(half), lr(half);
    for (size_t k = 0; k < half; ++k) {
      ul.at(k, k) = aa;
      ur.at(k, k) = bb;
      ll.at(k, k) = cc;
      lr.at(k, k) = dd;
    }
    return transported(ul, ur, ll, lr);
  };
  a.disk_images[0] = disk(0, 1, -1, 0);  // K1 = [[0,1],[-1,0]]
  a.disk_images[1] = disk(1, 0, 0, -1);  // H
  a.disk_images[2] = disk(0, 1, 1, 0);   // S = E+F

  if (a.basis.size() != static_cast<size_t>(n) * (2 * n + 1))
    throw std::logic_error(a.name + ": wrong dimension");
  validate_common(a);
  return a;
}

int sign_of(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

SimpleAlgebra build_su(int p, int q, const Mat& form) {
  const size_t m = static_cast<size_t>(p) + static_cast<size_t>(q);
  SimpleAlgebra a;
  a.family = Family::SUpq;
  a.p = p;
  a.q = q;
  a.ambient = m;
  a.form = form;
  a.rank = std::min(p, q);
  {
    std::ostringstream os;
    os << "su(" << p << "," << q << ")";
    a.name = os.str();
  }
  if (form.dim() != m) throw std::invalid_argument(a.name + ": form has wrong dimension");
  if (!(form.conj_transpose() == form))
    throw std::invalid_argument(a.name + ": form is not Hermitian");

  Mat r;
  std::vector<Rational> d;
  congruence_diagonalize(form, r, d);
  int np = 0, nq = 0;
  for (const auto& x : d) (sign_of(x) > 0 ? np : nq)++;
  if (np != p || nq != q) {
    std::ostringstream os;
    os << a.name << ": form has signature (" << np << "," << nq << "), expected (" << p << ","
       << q << ")";
    throw std::invalid_argument(os.str());
  }
  Mat ri = r.inverse();
  a.frame = r;
  a.frame_c = d;
  auto transported = [&](const Mat& x) { return r * x * ri; };

  // Z in the diagonal presentation: i*q/(p+q) on positive slots, -i*p/(p+q) on negative
  Rational alpha(q, p + q), beta(p, p + q);
  alpha.canonicalize();
  beta.canonicalize();
  Mat zd(m);
  for (size_t k = 0; k < m; ++k)
    zd.at(k, k) = ExactScalar(Rational(0), sign_of(d[k]) > 0 ? alpha : -beta);
  a.Z = transported(zd);

  // k: traceless diagonal chain + same-sign off-diagonal pairs; p: cross-sign pairs
  for (size_t rr = 0; rr + 1 < m; ++rr) {
    Mat x(m);
    x.at(rr, rr) = ExactScalar::i();
    x.at(rr + 1, rr + 1) = -ExactScalar::i();
    a.basis.push_back(transported(x));
  }
  auto pair_gens = [&](size_t rr, size_t ss) {
    ExactScalar ratio(d[rr] / d[ss]);
    Mat x1 = e_matrix(m, rr, ss, ExactScalar(1)) - e_matrix(m, ss, rr, ratio);
    Mat x2 = e_matrix(m, rr, ss, ExactScalar::i()) + e_matrix(m, ss, rr, ExactScalar::i() * ratio);
    return std::make_pair(transported(x1), transported(x2));
  };
  for (size_t rr = 0; rr < m; ++rr)
    for (size_t ss = rr + 1; ss < m; ++ss)
      if (sign_of(d[rr]) == sign_of(d[ss])) {
        auto [x1, x2] = pair_gens(rr, ss);
        a.basis.push_back(x1);
        a.basis.push_back(x2);
      }
  a.k_dim = a.basis.size();
  for (size_t rr = 0; rr < m; ++rr)
    for (size_t ss = rr + 1; ss < m; ++ss)
      if (sign_of(d[rr]) != sign_of(d[ss])) {
        auto [x1, x2] = pair_gens(rr, ss);
        a.basis.push_back(x1);
        a.basis.push_back(x2);
      }
  if (a.basis.size() != m * m - 1) throw std::logic_error(a.name + ": wrong dimension");

  // diagonal disk: pair each positive slot with a negative slot such that
  // a rational w with |w|^2 = d_pos/|d_neg| exists, then act per pair.
  std::vector<size_t> pos, neg;
  for (size_t k = 0; k < m; ++k) (sign_of(d[k]) > 0 ? pos : neg).push_back(k);
  const std::vector<size_t>& small = (pos.size() <= neg.size()) ? pos : neg;
  const std::vector<size_t>& large = (pos.size() <= neg.size()) ? neg : pos;
  std::vector<size_t> match(small.size());
  std::vector<bool> used(large.size(), false);
  std::vector<Rational> wx(small.size()), wy(small.size());
  auto feasible = [&](size_t si, size_t li, Rational& x, Rational& y) {
    size_t rp = (pos.size() <= neg.size()) ? small[si] : large[li];
    size_t rn = (pos.size() <= neg.size()) ? large[li] : small[si];
    Rational ratio = d[rp] / (-d[rn]);  // = a/b > 0
    return two_squares(ratio, x, y);
  };
  auto backtrack = [&](auto&& self, size_t si) -> bool {
    if (si == small.size()) return true;
    for (size_t li = 0; li < large.size(); ++li) {
      if (used[li]) continue;
      Rational x, y;
      if (!feasible(si, li, x, y)) continue;
      used[li] = true;
      match[si] = li;
      wx[si] = x;
      wy[si] = y;
      if (self(self, si + 1)) return true;
      used[li] = false;
    }
    return false;
  };
  if (!backtrack(backtrack, 0))
    throw std::invalid_argument(a.name +
                                ": no rational diagonal disk exists for this form presentation "
                                "(positive/negative slot ratios are not sums of two squares)");

  Mat img_k1(m), img_h(m), img_s(m);
  for (size_t si = 0; si < small.size(); ++si) {
    size_t rp = (pos.size() <= neg.size()) ? small[si] : large[match[si]];
    size_t rn = (pos.size() <= neg.size()) ? large[match[si]] : small[si];
    Rational aval = d[rp], bval = -d[rn];
    ExactScalar w(wx[si], wy[si]);
    ExactScalar boa(bval / aval);
    // K1 -> -i(E_pp - E_nn); H -> M(w); S -> M(-i w)
    img_k1.at(rp, rp) += -ExactScalar::i();
    img_k1.at(rn, rn) += ExactScalar::i();
    img_h.at(rp, rn) += boa * w.conj();
    img_h.at(rn, rp) += w;
    ExactScalar miw = -(ExactScalar::i() * w);
    img_s.at(rp, rn) += boa * miw.conj();
    img_s.at(rn, rp) += miw;
  }
  a.disk_images[0] = transported(img_k1);
  a.disk_images[1] = transported(img_h);
  a.disk_images[2] = transported(img_s);

  validate_common(a);
  return a;
}

}  // namespace

bool SimpleAlgebra::contains(const Mat& x) const {
  if (x.dim() != ambient) return false;
  if (family == Family::SpR) {
    for (size_t i = 0; i < ambient; ++i)
      for (size_t j = 0; j < ambient; ++j)
        if (!x.at(i, j).is_real()) return false;
    return (x.transpose() * form + form * x).is_zero();
  }
  if (!x.trace().is_zero()) return false;
  return (x.conj_transpose() * form + form * x).is_zero();
}

SimpleAlgebra make_sp(int n) {
  if (n < 1) throw std::invalid_argument("make_sp: n must be positive");
  return build_sp(n, std_sp_form(n), std_sp_z(n));
}

SimpleAlgebra make_sp(int n, const Mat& form) {
  if (n < 1) throw std::invalid_argument("make_sp: n must be positive");
  const size_t dim = 2 * static_cast<size_t>(n);
  if (form.dim() != dim) throw std::invalid_argument("make_sp: form has wrong dimension");
  if (!(form.transpose() == -form)) throw std::invalid_argument("make_sp: form is not skew");
  Mat fi;
  try {
    fi = form.inverse();
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("make_sp: form is singular");
  }
  if (form == std_sp_form(n)) return build_sp(n, form, std_sp_z(n));
  // Darboux-normalize (symplectic Gram-Schmidt, om(u_i, v_j) = delta_ij),
  // then transport the standard complex structure
  std::vector<CVec> cols;
  {
    std::vector<CVec> pool;
    for (size_t k = 0; k < dim; ++k) pool.push_back(unit_vec(dim, k));
    std::vector<CVec> uu, vv;
    while (uu.size() < static_cast<size_t>(n)) {
      // take the first pool vector not in the span handled so far
      // project x to the symplectic complement of the pairs found so far:
      // x' = x - om(x,v_k) u_k - om(u_k,x) v_k
      auto project = [&](CVec& x) {
        for (size_t k = 0; k < uu.size(); ++k) {
          ExactScalar cu = bil(form, x, vv[k]);
          ExactScalar cv = bil(form, uu[k], x);
          for (size_t i = 0; i < dim; ++i) x[i] -= cu * uu[k][i] + cv * vv[k][i];
        }
      };
      CVec u;
      bool got = false;
      while (!pool.empty() && !got) {
        u = pool.front();
        pool.erase(pool.begin());
        project(u);
        for (const auto& x : u)
          if (!x.is_zero()) {
            got = true;
            break;
          }
      }
      if (!got) throw std::logic_error("make_sp: Darboux basis construction failed");
      // find partner with om(u, w) != 0
      CVec w;
      bool gotw = false;
      for (size_t cand = 0; cand < pool.size(); ++cand) {
        w = pool[cand];
        project(w);
        ExactScalar c = bil(form, u, w);
        if (!c.is_zero()) {
          pool.erase(pool.begin() + static_cast<long>(cand));
          for (auto& x : w) x /= c;  // om(u, w) = 1
          // remove the u-component so om(w, w) stays 0 (it is, w scalar)
          gotw = true;
          break;
        }
      }
      if (!gotw) throw std::invalid_argument("make_sp: form is degenerate");
      // re-orthogonalize w against u? om(w,u) = -1 wanted; om(u,u)=0 fine.
      uu.push_back(u);
      vv.push_back(w);
    }
    cols = uu;
    cols.insert(cols.end(), vv.begin(), vv.end());
  }
  Mat s = columns_to_mat(cols);
  Mat z = s * std_sp_z(n) * s.inverse();
  return build_sp(n, form, z);
}

SimpleAlgebra make_sp_with_z(int n, const Mat& form, const Mat& z) {
  if (n < 1) throw std::invalid_argument("make_sp_with_z: n must be positive");
  if (!(form.transpose() == -form)) throw std::invalid_argument("make_sp_with_z: form not skew");
  return build_sp(n, form, z);
}

SimpleAlgebra make_su(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("make_su: p,q must be positive");
  const size_t m = static_cast<size_t>(p) + static_cast<size_t>(q);
  Mat h(m);
  for (size_t k = 0; k < m; ++k) h.at(k, k) = ExactScalar(k < static_cast<size_t>(p) ? 1 : -1);
  return build_su(p, q, h);
}

SimpleAlgebra make_su(int p, int q, const Mat& form) {
  if (p < 1 || q < 1) throw std::invalid_argument("make_su: p,q must be positive");
  return build_su(p, q, form);
}

// ---------------------------------------------------------------------------
// Algebra (direct sums)

Algebra Algebra::simple(SimpleAlgebra a) {
  auto d = std::make_shared<Data>();
  d->ambient = a.ambient;
  d->offsets = {0};
  d->Z = a.Z;
  d->rank = a.rank;
  d->name = a.name;
  for (size_t i = 0; i < a.basis.size(); ++i) {
    d->basis.push_back(a.basis[i]);
    d->basis_factor.push_back(0);
    d->basis_is_k.push_back(i < a.k_dim);
  }
  d->factors.push_back(std::move(a));
  Algebra g;
  g.d_ = std::move(d);
  return g;
}

Algebra Algebra::direct_sum(const std::vector<Algebra>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum: no summands");
  if (parts.size() == 1) return parts[0];
  auto d = std::make_shared<Data>();
  size_t off = 0;
  int rk = 0;
  std::string nm;
  for (const auto& part : parts)
    for (const auto& f : part.factors()) {
      d->factors.push_back(f);
      d->offsets.push_back(off);
      off += f.ambient;
      rk += f.rank;
      if (!nm.empty()) nm += "+";
      nm += f.name;
    }
  d->ambient = off;
  d->rank = rk;
  d->name = nm;
  Mat z(off);
  for (size_t fi = 0; fi < d->factors.size(); ++fi) {
    const auto& f = d->factors[fi];
    for (size_t i = 0; i < f.ambient; ++i)
      for (size_t j = 0; j < f.ambient; ++j)
        z.at(d->offsets[fi] + i, d->offsets[fi] + j) = f.Z.at(i, j);
  }
  d->Z = std::move(z);
  for (size_t fi = 0; fi < d->factors.size(); ++fi) {
    const auto& f = d->factors[fi];
    for (size_t i = 0; i < f.basis.size(); ++i) {
      Mat b(off);
      for (size_t r = 0; r < f.ambient; ++r)
        for (size_t c = 0; c < f.ambient; ++c)
          b.at(d->offsets[fi] + r, d->offsets[fi] + c) = f.basis[i].at(r, c);
      d->basis.push_back(std::move(b));
      d->basis_factor.push_back(fi);
      d->basis_is_k.push_back(i < f.k_dim);
    }
  }
  Algebra g;
  g.d_ = std::move(d);
  return g;
}

bool Algebra::tube() const {
  for (const auto& f : d_->factors)
    if (!f.tube()) return false;
  return true;
}

bool Algebra::contains(const Mat& x) const {
  if (x.dim() != d_->ambient) return false;
  // cross blocks must vanish
  for (size_t fi = 0; fi < d_->factors.size(); ++fi)
    for (size_t fj = 0; fj < d_->factors.size(); ++fj) {
      if (fi == fj) continue;
      for (size_t r = 0; r < d_->factors[fi].ambient; ++r)
        for (size_t c = 0; c < d_->factors[fj].ambient; ++c)
          if (!x.at(d_->offsets[fi] + r, d_->offsets[fj] + c).is_zero()) return false;
    }
  for (size_t fi = 0; fi < d_->factors.size(); ++fi) {
    const auto& f = d_->factors[fi];
    Mat blk(f.ambient);
    for (size_t r = 0; r < f.ambient; ++r)
      for (size_t c = 0; c < f.ambient; ++c) blk.at(r, c) = x.at(d_->offsets[fi] + r, d_->offsets[fi] + c);
    if (!f.contains(blk)) return false;
  }
  return true;
}

bool Algebra::in_k(const Mat& x) const { return contains(x) && bracket(d_->Z, x).is_zero(); }

bool Algebra::in_p(const Mat& x) const {
  if (!contains(x)) return false;
  return (bracket(d_->Z, bracket(d_->Z, x)) + x).is_zero();
}

CartanPart Algebra::cartan_component(const Mat& x) const {
  if (!contains(x)) throw std::invalid_argument("cartan_component: not an element of " + name());
  if (bracket(d_->Z, x).is_zero()) return CartanPart::K;
  if ((bracket(d_->Z, bracket(d_->Z, x)) + x).is_zero()) return CartanPart::P;
  return CartanPart::Mixed;
}

Rational Algebra::lambda_z(const Mat& x) const {
  if (!contains(x))
    throw std::invalid_argument("lambda_z: matrix is not an element of " + name() +
                                " (defining relation fails)");
  Mat zx = bracket(d_->Z, x);
  if (!zx.is_zero()) {
    // p-component of x is -ad(Z)^2 x; name the first nonzero entry
    Mat pcomp = -bracket(d_->Z, zx);
    for (size_t i = 0; i < pcomp.dim(); ++i)
      for (size_t j = 0; j < pcomp.dim(); ++j)
        if (!pcomp.at(i, j).is_zero()) {
          std::ostringstream os;
          os << "lambda_z: matrix is not in k: nonzero p-component, first at entry (" << i << ","
             << j << ") = " << pcomp.at(i, j).str();
          throw std::invalid_argument(os.str());
        }
    throw std::invalid_argument("lambda_z: matrix is not in k ([Z,X] != 0)");
  }
  return trace_pairing(x, d_->Z) / trace_pairing(d_->Z, d_->Z);
}

std::vector<Mat> Algebra::center_of_k() const {
  std::vector<Mat> out;
  for (size_t fi = 0; fi < d_->factors.size(); ++fi) {
    const auto& f = d_->factors[fi];
    // solve [X, K_j] = 0 for X in span of the factor's k basis; process
    // equations until the nullspace stabilizes and verifies
    const size_t nk = f.k_dim;
    std::vector<RatVec> rref;       // equation rows over the nk unknowns
    std::vector<size_t> pivots;
    auto add_equation = [&](const RatVec& row) {
      RatVec v = row;
      for (size_t r = 0; r < rref.size(); ++r) {
        if (v[pivots[r]] == 0) continue;
        Rational fmul = v[pivots[r]];
        for (size_t k = 0; k < nk; ++k) v[k] -= fmul * rref[r][k];
      }
      size_t piv = nk;
      for (size_t k = 0; k < nk; ++k)
        if (v[k] != 0) {
          piv = k;
          break;
        }
      if (piv == nk) return;
      Rational dd = v[piv];
      for (auto& x : v) x /= dd;
      for (size_t r = 0; r < rref.size(); ++r) {
        Rational fmul = rref[r][piv];
        if (fmul == 0) continue;
        for (size_t k = 0; k < nk; ++k) rref[r][k] -= fmul * v[k];
      }
      rref.push_back(v);
      pivots.push_back(piv);
    };
    auto nullspace_basis = [&]() {
      std::vector<RatVec> ns;
      std::vector<bool> is_pivot(nk, false);
      for (size_t p0 : pivots) is_pivot[p0] = true;
      for (size_t free = 0; free < nk; ++free) {
        if (is_pivot[free]) continue;
        RatVec v(nk, Rational(0));
        v[free] = 1;
        for (size_t r = 0; r < rref.size(); ++r) v[pivots[r]] = -rref[r][free];
        ns.push_back(v);
      }
      return ns;
    };
    auto combine = [&](const RatVec& c) {
      Mat x(f.ambient);
      for (size_t i = 0; i < nk; ++i) {
        if (c[i] == 0) continue;
        x += ExactScalar(c[i]) * f.basis[i];
      }
      return x;
    };
    bool done = false;
    for (size_t j = 0; j < nk && !done; ++j) {
      Mat kj = f.basis[j];
      // equations: coordinates of [X, K_j] = Sum_i c_i [K_i, K_j] = 0
      std::vector<Mat> br(nk);
      for (size_t i = 0; i < nk; ++i) br[i] = bracket(f.basis[i], kj);
      for (size_t coord = 0; coord < 2 * f.ambient * f.ambient; ++coord) {
        RatVec row(nk, Rational(0));
        bool nontrivial = false;
        for (size_t i = 0; i < nk; ++i) {
          size_t rr = coord / (2 * f.ambient), rest = coord % (2 * f.ambient);
          const ExactScalar& e = br[i].at(rr, rest / 2);
          const Rational& val = (rest % 2 == 0) ? e.re : e.im;
          if (val != 0) {
            row[i] = val;
            nontrivial = true;
          }
        }
        if (nontrivial) add_equation(row);
      }
      // verify current candidates against the whole k basis
      auto ns = nullspace_basis();
      done = true;
      for (const auto& c : ns) {
        Mat x = combine(c);
        for (size_t jj = 0; jj < nk && done; ++jj)
          if (!bracket(x, f.basis[jj]).is_zero()) done = false;
        if (!done) break;
      }
    }
    for (const auto& c : nullspace_basis()) out.push_back(embed(fi, combine(c)));
  }
  return out;
}

Mat Algebra::embed(size_t factor, const Mat& x) const {
  const auto& f = d_->factors.at(factor);
  if (x.dim() != f.ambient) throw std::invalid_argument("embed: wrong block size");
  Mat r(d_->ambient);
  for (size_t i = 0; i < f.ambient; ++i)
    for (size_t j = 0; j < f.ambient; ++j) r.at(d_->offsets[factor] + i, d_->offsets[factor] + j) = x.at(i, j);
  return r;
}

const RationalSpan& Algebra::span() const {
  std::call_once(d_->span_once, [this] {
    auto sp = std::make_unique<RationalSpan>(2 * d_->ambient * d_->ambient);
    for (const auto& b : d_->basis)
      if (!sp->insert(b)) throw std::logic_error("Algebra: basis is dependent");
    d_->span = std::move(sp);
  });
  return *d_->span;
}

std::optional<std::vector<Rational>> Algebra::coordinates(const Mat& x) const {
  if (x.dim() != d_->ambient) return std::nullopt;
  return span().coordinates(x);
}

std::vector<std::vector<double>> standard_symplectic_frame(const SimpleAlgebra& a) {
  if (a.family != Family::SpR)
    throw std::invalid_argument("standard_symplectic_frame: symplectic factors only");
  const size_t dim = a.ambient, half = dim / 2;
  std::vector<std::vector<double>> f(dim, std::vector<double>(dim, 0.0));
  for (size_t jcol = 0; jcol < dim; ++jcol) {
    double scale = 1.0 / std::sqrt(std::abs(rat_double(a.frame_c[jcol % half])));
    for (size_t i = 0; i < dim; ++i) f[i][jcol] = rat_double(a.frame.at(i, jcol).re) * scale;
  }
  return f;
}

bool Algebra::same_presentation(const Algebra& o) const {
  if (d_ == o.d_) return true;
  if (num_factors() != o.num_factors() || ambient() != o.ambient()) return false;
  for (size_t i = 0; i < num_factors(); ++i) {
    const auto& a = d_->factors[i];
    const auto& b = o.d_->factors[i];
    if (a.family != b.family || a.ambient != b.ambient || !(a.form == b.form)) return false;
  }
  return true;
}

}  // namespace tightlie
