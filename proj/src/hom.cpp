#include "tightlie/hom.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace tightlie {

namespace {

Mat apply_linear(const Algebra& domain, const std::vector<Mat>& images, const Mat& x) {
  auto coords = domain.coordinates(x);
  if (!coords)
    throw std::invalid_argument("LieHom::apply: element is outside the domain " + domain.name());
  Mat out(images.empty() ? 0 : images.front().dim());
  for (size_t i = 0; i < images.size(); ++i) {
    if ((*coords)[i] == 0) continue;
    out += ExactScalar((*coords)[i]) * images[i];
  }
  return out;
}

Rational binom(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

}  // namespace

Mat LieHom::apply(const Mat& x) const { return apply_linear(domain, images, x); }

const Algebra& sl2() {
  static const Algebra g = Algebra::simple(make_sp(1));
  return g;
}

LieHom from_images(Algebra domain, Algebra codomain, std::vector<Mat> images, std::string label) {
  if (images.size() != domain.dim()) {
    std::ostringstream os;
    os << "from_images: expected " << domain.dim() << " images for " << domain.name() << ", got "
       << images.size();
    throw std::invalid_argument(os.str());
  }
  for (size_t i = 0; i < images.size(); ++i) {
    if (images[i].dim() != codomain.ambient())
      throw std::invalid_argument("from_images: image " + std::to_string(i) +
                                  " has wrong ambient dimension for " + codomain.name());
    if (!codomain.contains(images[i]))
      throw std::invalid_argument("from_images: image " + std::to_string(i) +
                                  " is not an element of " + codomain.name());
  }
  return LieHom{std::move(domain), std::move(codomain), std::move(images), std::move(label)};
}

LieHom identity_hom(const Algebra& g) { return from_images(g, g, g.basis(), "id:" + g.name()); }

LieHom diagonal_disk(const Algebra& g) {
  std::vector<Mat> images(3, Mat(g.ambient()));
  for (size_t f = 0; f < g.num_factors(); ++f)
    for (size_t j = 0; j < 3; ++j) images[j] += g.embed(f, g.factors()[f].disk_images[j]);
  return from_images(sl2(), g, std::move(images), "diag:" + g.name());
}

LieHom irreducible_sl2_to_sp(int n) {
  if (n < 1) throw std::invalid_argument("irreducible_sl2_to_sp: n must be positive");
  const int m = 2 * n - 1;
  const size_t dim = 2 * static_cast<size_t>(n);

  // action on P_k = x^{m-k} y^k as the symmetric power of the standard rep:
  // rho([[a,b],[c,-a]]) P_k = a(m-2k) P_k + c(m-k) P_{k+1} + b k P_{k-1}
  auto rho = [&](long a, long b, long c) {
    Mat r(dim);
    for (long k = 0; k < static_cast<long>(dim); ++k) {
      if (a != 0) r.at(k, k) += ExactScalar(Rational(a * (m - 2 * k)));
      if (c != 0 && k + 1 < static_cast<long>(dim))
        r.at(k + 1, k) += ExactScalar(Rational(c * (m - k)));
      if (b != 0 && k - 1 >= 0) r.at(k - 1, k) += ExactScalar(Rational(b * k));
    }
    return r;
  };

  Mat omega(dim);
  for (long k = 0; k < static_cast<long>(dim); ++k) {
    Rational v = Rational(k % 2 == 0 ? 1 : -1) / binom(m, k);
    omega.at(k, m - k) = ExactScalar(v);
  }
  Mat jmat(dim);
  for (long k = 0; k < static_cast<long>(dim); ++k)
    jmat.at(m - k, k) = ExactScalar(k % 2 == 0 ? 1 : -1);
  // orientation: the defining representation is positive for this choice
  Rational sign(n % 2 == 1 ? 1 : -1);
  Mat z = ExactScalar(sign / 2) * jmat;

  Algebra codomain = Algebra::simple(make_sp_with_z(n, omega, z));
  std::vector<Mat> images = {rho(0, 1, -1), rho(1, 0, 0), rho(0, 1, 1)};  // K1, H, S
  std::ostringstream os;
  os << "irrep:sp(" << dim << ")";
  return from_images(sl2(), codomain, std::move(images), os.str());
}

namespace {

constexpr std::array<std::pair<int, int>, 6> kSym2Pairs = {
    {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}};

int sym2_index(int i, int j) {
  if (i > j) std::swap(i, j);
  for (size_t k = 0; k < kSym2Pairs.size(); ++k)
    if (kSym2Pairs[k].first == i && kSym2Pairs[k].second == j) return static_cast<int>(k);
  throw std::logic_error("sym2_index");
}

Mat sym2_rep(const Mat& x) {
  Mat r(6);
  for (size_t col = 0; col < 6; ++col) {
    auto [i, j] = kSym2Pairs[col];
    for (int k = 0; k < 3; ++k) {
      if (!x.at(k, i).is_zero()) r.at(sym2_index(k, j), col) += x.at(k, i);
      if (!x.at(k, j).is_zero()) r.at(sym2_index(i, k), col) += x.at(k, j);
    }
  }
  return r;
}

}  // namespace

LieHom sym2_su12_to_su24() {
  Algebra domain = Algebra::simple(make_su(1, 2));
  // induced Hermitian form h~(vw, v'w') = h(v,v')h(w,w') + h(v,w')h(w,v'),
  // negated so the signature reads (2,4)
  const std::array<int, 3> h = {1, -1, -1};
  Mat ht(6);
  for (size_t aidx = 0; aidx < 6; ++aidx)
    for (size_t bidx = 0; bidx < 6; ++bidx) {
      auto [i, j] = kSym2Pairs[aidx];
      auto [k, l] = kSym2Pairs[bidx];
      int v = (i == k ? h[i] : 0) * (j == l ? h[j] : 0) + (i == l ? h[i] : 0) * (j == k ? h[j] : 0);
      if (v != 0) ht.at(aidx, bidx) = ExactScalar(-v);
    }
  Algebra codomain = Algebra::simple(make_su(2, 4, ht));
  std::vector<Mat> images;
  images.reserve(domain.dim());
  for (const auto& b : domain.basis()) images.push_back(sym2_rep(b));
  return from_images(std::move(domain), std::move(codomain), std::move(images), "sym2:su12-su24");
}

Sp4Embeddings sp4_embeddings() {
  Mat lambda(2);
  lambda.at(0, 1) = ExactScalar(1);
  lambda.at(1, 0) = ExactScalar(1);
  Mat id2 = Mat::identity(2);

  auto block4 = [&](const Mat& ul, const Mat& ur, const Mat& ll, const Mat& lr) {
    Mat r(4);
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 2; ++j) {
        r.at(i, j) = ul.at(i, j);
        r.at(i, 2 + j) = ur.at(i, j);
        r.at(2 + i, j) = ll.at(i, j);
        r.at(2 + i, 2 + j) = lr.at(i, j);
      }
    return r;
  };
  Mat zero2(2);
  Mat form_b = block4(zero2, lambda, -lambda, zero2);
  Mat s = block4(id2, zero2, zero2, lambda);

  SimpleAlgebra spa = make_sp(2);
  Mat zb = s * spa.Z * s.inverse();
  SimpleAlgebra spb = make_sp_with_z(2, form_b, zb);
  Algebra ga = Algebra::simple(spa), gb = Algebra::simple(spb);

  auto emb = [&](const Mat& off, const std::string& tag, const Algebra& cod) {
    // images of K1, H, S under [[a Id, b Off],[c Off, d Id]]
    std::vector<Mat> images = {
        block4(zero2, off, -off, zero2),
        block4(id2, zero2, zero2, -id2),
        block4(zero2, off, off, zero2),
    };
    return from_images(sl2(), cod, std::move(images), tag);
  };
  Sp4Embeddings out{
      emb(id2, "iA:A", ga),
      emb(lambda, "iB:A", ga),
      emb(id2, "iA:B", gb),
      emb(lambda, "iB:B", gb),
      s,
      spa.form,
      form_b,
  };
  return out;
}

LieHom corner_su(int p1, int q1, int p2, int q2) {
  if (p1 < 1 || q1 < 1 || p1 > p2 || q1 > q2)
    throw std::invalid_argument("corner_su: need 1 <= p1 <= p2 and 1 <= q1 <= q2");
  Algebra domain = Algebra::simple(make_su(p1, q1));
  Algebra codomain = Algebra::simple(make_su(p2, q2));
  auto place = [&](int a) { return a < p1 ? a : p2 + (a - p1); };
  std::vector<Mat> images;
  images.reserve(domain.dim());
  for (const auto& b : domain.basis()) {
    Mat img(codomain.ambient());
    for (int i = 0; i < p1 + q1; ++i)
      for (int j = 0; j < p1 + q1; ++j)
        img.at(place(i), place(j)) = b.at(i, j);
    images.push_back(std::move(img));
  }
  std::ostringstream os;
  os << "corner:" << p1 << "," << q1 << "," << p2 << "," << q2;
  return from_images(std::move(domain), std::move(codomain), std::move(images), os.str());
}

LieHom compose(const LieHom& first, const LieHom& then) {
  if (!first.codomain.same_presentation(then.domain))
    throw std::invalid_argument("compose: codomain of '" + first.label +
                                "' does not match domain of '" + then.label + "'");
  std::vector<Mat> images;
  images.reserve(first.images.size());
  for (const auto& img : first.images) images.push_back(then.apply(img));
  return from_images(first.domain, then.codomain, std::move(images),
                     "compose:" + first.label + "," + then.label);
}

LieHom direct_sum_hom(const std::vector<LieHom>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum_hom: no parts");
  for (const auto& p : parts) {
    if (!p.domain.same_presentation(parts.front().domain))
      throw std::invalid_argument("direct_sum_hom: parts must share one domain");
    if (p.codomain.num_factors() != 1 || p.codomain.factors()[0].family != Family::SpR)
      throw std::invalid_argument(
          "direct_sum_hom: only simple symplectic codomains can be block-summed");
  }
  size_t dim = 0;
  int nsum = 0;
  for (const auto& p : parts) {
    dim += p.codomain.ambient();
    nsum += p.codomain.factors()[0].n;
  }
  Mat form(dim), z(dim);
  size_t off = 0;
  for (const auto& p : parts) {
    const auto& f = p.codomain.factors()[0];
    // sp(Omega) = sp(-Omega): flip the block form sign where needed so that
    // Omega * 2Z is positive definite on every block (the summed k must be
    // compact); each summand keeps its own orientation of Z
    int sgn = (f.form * (ExactScalar(2) * f.Z)).definiteness();
    for (size_t i = 0; i < f.ambient; ++i)
      for (size_t j = 0; j < f.ambient; ++j) {
        form.at(off + i, off + j) = ExactScalar(Rational(sgn)) * f.form.at(i, j);
        z.at(off + i, off + j) = f.Z.at(i, j);
      }
    off += f.ambient;
  }
  Algebra codomain = Algebra::simple(make_sp_with_z(nsum, form, z));
  std::vector<Mat> images;
  std::string label = "dsum:";
  for (size_t i = 0; i < parts.front().images.size(); ++i) {
    Mat img(dim);
    off = 0;
    for (const auto& p : parts) {
      for (size_t r = 0; r < p.codomain.ambient(); ++r)
        for (size_t c = 0; c < p.codomain.ambient(); ++c)
          img.at(off + r, off + c) = p.images[i].at(r, c);
      off += p.codomain.ambient();
    }
    images.push_back(std::move(img));
  }
  for (size_t i = 0; i < parts.size(); ++i) label += (i ? "+" : "") + parts[i].label;
  return from_images(parts.front().domain, std::move(codomain), std::move(images), label);
}

LieHom precompose_ad(const LieHom& f, const Mat& g) {
  Mat gi = g.inverse();
  std::vector<Mat> images;
  images.reserve(f.images.size());
  for (const auto& b : f.domain.basis()) images.push_back(f.apply(g * b * gi));
  return from_images(f.domain, f.codomain, std::move(images), f.label + ";Ad");
}

LieHom postcompose_ad(const LieHom& f, const Mat& g) {
  Mat gi = g.inverse();
  std::vector<Mat> images;
  images.reserve(f.images.size());
  for (const auto& img : f.images) images.push_back(g * img * gi);
  return from_images(f.domain, f.codomain, std::move(images), "Ad;" + f.label);
}

LieHom factor_inclusion(const Algebra& sum, size_t factor) {
  Algebra dom = Algebra::simple(sum.factors().at(factor));
  std::vector<Mat> images;
  images.reserve(dom.dim());
  for (const auto& b : dom.basis()) images.push_back(sum.embed(factor, b));
  return from_images(std::move(dom), sum, std::move(images),
                     "incl:" + std::to_string(factor));
}

}  // namespace tightlie
