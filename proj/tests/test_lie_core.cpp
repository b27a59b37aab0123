#include "doctest.h"
#include "tightlie/algebra.hpp"
#include "tightlie/hom.hpp"

#include <random>

using namespace tightlie;

namespace {

Mat std_z_sp(int n) {
  Mat z(2 * n);
  for (int k = 0; k < n; ++k) {
    z.at(k, n + k) = ExactScalar(rat_parse("-1/2"));
    z.at(n + k, k) = ExactScalar(rat_parse("1/2"));
  }
  return z;
}

ExactScalar rnd_rat(std::mt19937_64& eng) {
  Rational r(static_cast<long>(eng() % 9) - 4, 1 + static_cast<long>(eng() % 3));
  r.canonicalize();
  return ExactScalar(r);
}

}  // namespace

TEST_CASE("make_sp basics: dimensions, rank, Z") {
  auto a1 = make_sp(1);
  CHECK(a1.dim() == 3);
  CHECK(a1.rank == 1);
  auto a2 = make_sp(2);
  CHECK(a2.dim() == 10);
  CHECK(a2.rank == 2);
  // Z = (1/2) [[0,-I],[I,0]] exactly under the orientation convention
  CHECK(a2.Z == std_z_sp(2));
  CHECK(Algebra::simple(a2).lambda_z(a2.Z) == 1);
}

TEST_CASE("make_sp rejects bad forms") {
  Mat notskew = Mat::identity(4);
  CHECK_THROWS_AS(make_sp(2, notskew), std::invalid_argument);
  Mat singular(4);
  singular.at(0, 1) = ExactScalar(1);
  singular.at(1, 0) = ExactScalar(-1);
  CHECK_THROWS_AS(make_sp(2, singular), std::invalid_argument);
}

TEST_CASE("make_su basics") {
  auto a = make_su(1, 1);
  CHECK(a.dim() == 3);
  CHECK(a.rank == 1);
  auto b = make_su(1, 2);
  CHECK(b.dim() == 8);
  CHECK(b.rank == 1);
  // Z = i*diag(2/3, -1/3, -1/3)
  Mat expect(3);
  expect.at(0, 0) = ExactScalar(Rational(0), rat_parse("2/3"));
  expect.at(1, 1) = ExactScalar(Rational(0), rat_parse("-1/3"));
  expect.at(2, 2) = ExactScalar(Rational(0), rat_parse("-1/3"));
  CHECK(b.Z == expect);
  auto c = make_su(2, 4);
  CHECK(c.dim() == 35);
  CHECK(c.rank == 2);
}

TEST_CASE("make_su rejects wrong signature") {
  Mat h = Mat::identity(3);  // signature (3,0)
  CHECK_THROWS_AS(make_su(1, 2, h), std::invalid_argument);
}

TEST_CASE("Cartan structure: bracket closure, center, k-definiteness") {
  for (const Algebra& g : {Algebra::simple(make_sp(2)), Algebra::simple(make_su(1, 2))}) {
    // bracket closure: [basis_i, basis_j] stays inside the algebra span
    for (size_t i = 0; i < g.dim(); ++i)
      for (size_t j = 0; j < i; ++j) {
        Mat br = bracket(g.basis()[i], g.basis()[j]);
        CHECK(g.coordinates(br).has_value());
      }
    // center of k is the line through Z
    auto c = g.center_of_k();
    REQUIRE(c.size() == 1);
    CHECK(g.in_k(c[0]));
    CHECK(bracket(c[0], g.Z()).is_zero());
    // trace pairing negative definite on k (random combinations)
    std::mt19937_64 eng(3);
    for (int rep = 0; rep < 50; ++rep) {
      Mat x(g.ambient());
      bool nonzero = false;
      for (size_t i = 0; i < g.dim(); ++i) {
        if (!g.basis_in_k(i)) continue;
        ExactScalar coef = rnd_rat(eng);
        if (!coef.is_zero()) nonzero = true;
        x += coef * g.basis()[i];
      }
      if (!nonzero) continue;
      CHECK(trace_pairing(x, x) < 0);
    }
  }
}

TEST_CASE("contains and cartan_component") {
  Algebra g = Algebra::simple(make_sp(2));
  CHECK(g.contains(g.Z()));
  CHECK_FALSE(g.contains(Mat::identity(4)));
  CHECK(g.cartan_component(g.Z()) == CartanPart::K);
  CHECK(g.cartan_component(g.basis()[g.dim() - 1]) == CartanPart::P);
  Mat mixed = g.Z() + g.basis()[g.dim() - 1];
  CHECK(g.cartan_component(mixed) == CartanPart::Mixed);

  Algebra su12 = Algebra::simple(make_su(1, 2));
  Mat x(3);  // i*diag(1,1,-2) is traceless and satisfies the form relation
  x.at(0, 0) = ExactScalar::i();
  x.at(1, 1) = ExactScalar::i();
  x.at(2, 2) = ExactScalar(Rational(0), Rational(-2));
  CHECK(su12.contains(x));
}

TEST_CASE("lambda_z: projection values and error paths") {
  Algebra sp1 = sl2();
  CHECK(trace_pairing(sp1.Z(), sp1.Z()) == rat_parse("-1/2"));
  CHECK(sp1.lambda_z(sp1.Z()) == 1);

  Algebra su12 = Algebra::simple(make_su(1, 2));
  CHECK(trace_pairing(su12.Z(), su12.Z()) == rat_parse("-2/3"));
  // semisimple part of k is orthogonal to Z
  for (size_t i = 0; i < su12.dim(); ++i) {
    if (!su12.basis_in_k(i)) continue;
    Mat x = su12.basis()[i];
    Rational lam = su12.lambda_z(x);
    Mat residual = x - ExactScalar(lam) * su12.Z();
    CHECK(trace_pairing(residual, su12.Z()) == 0);
  }
  // linearity
  std::mt19937_64 eng(5);
  Mat k1 = su12.basis()[0], k2 = su12.basis()[1];
  CHECK(su12.lambda_z(k1 + k2) == su12.lambda_z(k1) + su12.lambda_z(k2));
  CHECK(su12.lambda_z(ExactScalar(rat_parse("3/7")) * k1) == rat_parse("3/7") * su12.lambda_z(k1));
  // errors
  CHECK_THROWS_WITH_AS(su12.lambda_z(Mat::identity(3)), doctest::Contains("defining relation"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(su12.lambda_z(su12.basis()[su12.dim() - 1]),
                       doctest::Contains("p-component"), std::invalid_argument);
}

TEST_CASE("diagonal disk of su(1,2) projects Z_D to 3/4") {
  Algebra su12 = Algebra::simple(make_su(1, 2));
  LieHom d = diagonal_disk(su12);
  CHECK(su12.lambda_z(d.apply(sl2().Z())) == rat_parse("3/4"));
  Algebra su22 = Algebra::simple(make_su(2, 2));
  CHECK(su22.lambda_z(diagonal_disk(su22).apply(sl2().Z())) == 1);
  Algebra su24 = Algebra::simple(make_su(2, 4));
  CHECK(su24.lambda_z(diagonal_disk(su24).apply(sl2().Z())) == rat_parse("3/4"));
}

TEST_CASE("nonstandard sp forms work end to end") {
  // a random-ish rational skew form
  Mat f(4);
  auto set = [&](size_t i, size_t j, const char* v) {
    f.at(i, j) = ExactScalar(rat_parse(v));
    f.at(j, i) = ExactScalar(-rat_parse(v));
  };
  set(0, 1, "2");
  set(0, 3, "1/2");
  set(1, 2, "-1");
  set(2, 3, "3");
  auto a = make_sp(2, f);
  CHECK(a.dim() == 10);
  Algebra g = Algebra::simple(a);
  CHECK(g.lambda_z(diagonal_disk(g).apply(sl2().Z())) == 1);
  // transported basis closes under brackets
  for (size_t i = 0; i < g.dim(); ++i)
    for (size_t j = 0; j < i; ++j) CHECK(g.coordinates(bracket(g.basis()[i], g.basis()[j])).has_value());
}

TEST_CASE("direct sums aggregate rank, Z, and membership") {
  Algebra s = Algebra::direct_sum({sl2(), sl2(), sl2()});
  CHECK(s.rank() == 3);
  CHECK(s.dim() == 9);
  CHECK(s.ambient() == 6);
  CHECK(s.num_factors() == 3);
  CHECK(s.contains(s.Z()));
  // cross-block matrices are rejected
  Mat cross(6);
  cross.at(0, 3) = ExactScalar(1);
  CHECK_FALSE(s.contains(cross));
  LieHom d = diagonal_disk(s);
  CHECK(s.lambda_z(d.apply(sl2().Z())) == 1);
}
