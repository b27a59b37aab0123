#include "doctest.h"
#include "tightlie/hom.hpp"
#include "tightlie/tightness.hpp"

using namespace tightlie;

TEST_CASE("irrep: n=1 is the identity presentation of sl2") {
  LieHom f = irreducible_sl2_to_sp(1);
  CHECK(f.codomain.ambient() == 2);
  // standard form: <P_0,P_1> = 1
  CHECK(f.codomain.factors()[0].form == sl2().factors()[0].form);
  for (size_t i = 0; i < 3; ++i) CHECK(f.images[i] == sl2().basis()[i]);
}

TEST_CASE("irrep: homomorphism, form preservation, n/2 trace for n=1..8") {
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    LieHom f = irreducible_sl2_to_sp(n);
    CHECK(f.codomain.dim() == static_cast<size_t>(n) * (2 * n + 1));
    CHECK(check_homomorphism(f).ok);
    CHECK(check_cartan(f));
    // images preserve the polynomial-basis skew form exactly (membership is
    // enforced at construction; re-check the relation explicitly)
    const Mat& om = f.codomain.factors()[0].form;
    for (const auto& img : f.images) CHECK((img.transpose() * om + om * img).is_zero());
    Rational tp = trace_pairing(f.codomain.Z(), f.apply(sl2().Z()));
    CHECK(abs(tp) == Rational(n) / 2);
  }
}

TEST_CASE("sym2: lands in su(2,4), is a homomorphism, oracle trace values") {
  LieHom f = sym2_su12_to_su24();
  CHECK(f.domain.name() == "su(1,2)");
  CHECK(f.codomain.name() == "su(2,4)");
  CHECK(check_homomorphism(f).ok);
  CHECK(check_cartan(f));
  // |tp(Z2, rho(Z_su11))| / |tp(Z2,Z2)|: exact value 3/8. Under the
  // tp(Z2, Z_su22) = -1 normalization the numerator is 1/2: for diagonal Y
  // the trace equals minus the sum of the Sym^2-weights of Y on the two
  // positive slots, and the corner Z_su11 has weights 0 and 1/2 there.
  LieHom d1 = diagonal_disk(f.domain);
  Mat img = f.apply(d1.apply(sl2().Z()));
  Rational num = trace_pairing(f.codomain.Z(), img);
  Rational den = trace_pairing(f.codomain.Z(), f.codomain.Z());
  CHECK(den == rat_parse("-4/3"));
  CHECK(abs(num) == rat_parse("1/2"));
  CHECK(abs(num / den) == rat_parse("3/8"));
  // normalization pin: the corner su(2,2) disk has tp = -1 against Z
  LieHom d24 = diagonal_disk(f.codomain);
  CHECK(trace_pairing(f.codomain.Z(), d24.apply(sl2().Z())) == Rational(-1));
}

TEST_CASE("sp4 embeddings: validity and s-conjugation carries A to B") {
  Sp4Embeddings e = sp4_embeddings();
  for (const LieHom* f : {&e.iA_in_spA, &e.iB_in_spA, &e.iA_in_spB, &e.iB_in_spB}) {
    CHECK(check_homomorphism(*f).ok);
    CHECK(check_cartan(*f));
  }
  // s^T J s = J~ and s i_A s^{-1} = i_B, exactly
  Mat si = e.s.inverse();
  CHECK(e.s.transpose() * e.form_a * e.s == e.form_b);
  for (size_t i = 0; i < 3; ++i) CHECK(e.s * e.iA_in_spA.images[i] * si == e.iB_in_spA.images[i]);
  // both images lie in the intersection of the two symplectic algebras
  for (size_t i = 0; i < 3; ++i) {
    CHECK(e.iA_in_spA.codomain.contains(e.iA_in_spB.images[i]));
    CHECK(e.iA_in_spB.codomain.contains(e.iA_in_spA.images[i]));
  }
}

TEST_CASE("corner su(1,1) into su(1,2)") {
  LieHom f = corner_su(1, 1, 1, 2);
  CHECK(check_homomorphism(f).ok);
  CHECK(check_cartan(f));
  CHECK_THROWS_AS(corner_su(2, 1, 1, 2), std::invalid_argument);
}

TEST_CASE("compose: identity laws and associativity on catalog maps") {
  LieHom f = diagonal_disk(Algebra::simple(make_su(1, 2)));
  LieHom idd = identity_hom(f.domain);
  LieHom idc = identity_hom(f.codomain);
  LieHom lhs = compose(idd, f), rhs = compose(f, idc);
  for (size_t i = 0; i < f.images.size(); ++i) {
    CHECK(lhs.images[i] == f.images[i]);
    CHECK(rhs.images[i] == f.images[i]);
  }
  // associativity: (d ; corner) ; sym2 == d ; (corner ; sym2)
  LieHom d11 = diagonal_disk(Algebra::simple(make_su(1, 1)));
  LieHom c = corner_su(1, 1, 1, 2);
  LieHom s2 = sym2_su12_to_su24();
  LieHom a1 = compose(compose(d11, c), s2);
  LieHom a2 = compose(d11, compose(c, s2));
  for (size_t i = 0; i < a1.images.size(); ++i) CHECK(a1.images[i] == a2.images[i]);
  // mismatched composition is rejected
  CHECK_THROWS_AS(compose(s2, c), std::invalid_argument);
}

TEST_CASE("direct_sum_hom: blockwise construction is valid") {
  LieHom f = direct_sum_hom({irreducible_sl2_to_sp(2), irreducible_sl2_to_sp(1)});
  CHECK(f.codomain.ambient() == 6);
  CHECK(f.codomain.rank() == 3);
  CHECK(check_homomorphism(f).ok);
  CHECK(check_cartan(f));
}

TEST_CASE("direct_sum_hom rejects non-symplectic codomains") {
  CHECK_THROWS_AS(direct_sum_hom({diagonal_disk(sl2()), corner_su(1, 1, 1, 2)}),
                  std::invalid_argument);
}

TEST_CASE("from_images validation") {
  Algebra g = sl2();
  CHECK_THROWS_WITH_AS(from_images(g, g, {Mat(2)}, "bad"), doctest::Contains("expected 3"),
                       std::invalid_argument);
  std::vector<Mat> imgs = g.basis();
  imgs[0] = Mat::identity(2);  // not in sl2
  CHECK_THROWS_WITH_AS(from_images(g, g, imgs, "bad"), doctest::Contains("not an element"),
                       std::invalid_argument);
}

TEST_CASE("polydisk inclusion (sl2)^r -> sp(2r)") {
  const size_t r = 3;
  Algebra dom = Algebra::direct_sum({sl2(), sl2(), sl2()});
  Algebra cod = Algebra::simple(make_sp(static_cast<int>(r)));
  std::vector<Mat> images;
  for (size_t idx = 0; idx < dom.dim(); ++idx) {
    size_t fi = dom.factor_of_basis(idx);
    const Mat& b = dom.factors()[fi].basis[idx % 3];
    Mat img(2 * r);
    // block coordinates (0,1) of factor fi map to ambient (fi, r+fi)
    size_t map[2] = {fi, r + fi};
    for (size_t a = 0; a < 2; ++a)
      for (size_t c = 0; c < 2; ++c) img.at(map[a], map[c]) = b.at(a, c);
    images.push_back(img);
  }
  LieHom incl = from_images(dom, cod, images, "polydisk");
  CHECK(check_homomorphism(incl).ok);
  CHECK(check_cartan(incl));
  // diagonal through the polydisk equals the diagonal disk of sp(2r)
  LieHom ddom = diagonal_disk(dom);
  LieHom through = compose(ddom, incl);
  LieHom direct = diagonal_disk(cod);
  for (size_t i = 0; i < 3; ++i) CHECK(through.images[i] == direct.images[i]);
}
