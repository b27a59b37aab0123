#include "doctest.h"
#include "tightlie/linalg.hpp"
#include "tightlie/matrix.hpp"
#include "tightlie/scalar.hpp"

#include <random>

using namespace tightlie;

TEST_CASE("rational arithmetic is exact and canonical") {
  Rational a = rat_parse("1/3"), b = rat_parse("1/6");
  CHECK(rat_str(a + b) == "1/2");
  CHECK(rat_str(rat_parse("2/6")) == "1/3");
  CHECK(rat_str(rat_parse("-4/8")) == "-1/2");
  CHECK(rat_str(Rational(7)) == "7");
  CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("x"), std::invalid_argument);
}

TEST_CASE("scalar str/parse round-trip") {
  ExactScalar s(rat_parse("2/3"), rat_parse("-1/5"));
  CHECK(s.str() == "2/3-1/5 i");
  CHECK(ExactScalar::parse(s.str()) == s);
  CHECK(ExactScalar::parse("2/3").str() == "2/3");
  CHECK(ExactScalar::parse("0+1/2 i") == ExactScalar(Rational(0), rat_parse("1/2")));
  CHECK(ExactScalar::parse("-i") == ExactScalar(Rational(0), Rational(-1)));
  ExactScalar q = ExactScalar(rat_parse("1"), rat_parse("1"));
  CHECK((q / q) == ExactScalar(1));
  CHECK((q * q.conj()).str() == "2");
  CHECK_THROWS(q / ExactScalar(0));
}

TEST_CASE("matrix inverse, rank, definiteness") {
  Mat m(2);
  m.at(0, 0) = ExactScalar(1);
  m.at(0, 1) = ExactScalar(rat_parse("1/2"));
  m.at(1, 0) = ExactScalar::i();
  m.at(1, 1) = ExactScalar(3);
  Mat mi = m.inverse();
  CHECK(m * mi == Mat::identity(2));
  CHECK(m.rank() == 2);

  Mat sing(2);
  sing.at(0, 0) = ExactScalar(1);
  sing.at(1, 0) = ExactScalar(2);
  CHECK(sing.rank() == 1);
  CHECK_THROWS_AS(sing.inverse(), std::invalid_argument);

  Mat pd = Mat::identity(3);
  pd.at(0, 1) = ExactScalar(rat_parse("1/3"));
  pd.at(1, 0) = ExactScalar(rat_parse("1/3"));
  CHECK(pd.definiteness() == 1);
  Mat nd = -pd;
  CHECK(nd.definiteness() == -1);
  Mat indef(2);
  indef.at(0, 0) = ExactScalar(1);
  indef.at(1, 1) = ExactScalar(-1);
  CHECK(indef.definiteness() == 0);
}

TEST_CASE("trace pairing symmetry on random rational matrices") {
  std::mt19937_64 eng(11);
  auto rnd = [&]() {
    Rational re(static_cast<long>(eng() % 13) - 6, 1 + static_cast<long>(eng() % 4));
    Rational im(static_cast<long>(eng() % 13) - 6, 1 + static_cast<long>(eng() % 4));
    re.canonicalize();
    im.canonicalize();
    return ExactScalar(re, im);
  };
  for (int rep = 0; rep < 20; ++rep) {
    Mat x(3), y(3);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) {
        x.at(i, j) = rnd();
        y.at(i, j) = rnd();
      }
    CHECK(trace_pairing(x, y) == trace_pairing(y, x));
  }
}

TEST_CASE("bracket basics and Jacobi on random rational triples") {
  std::mt19937_64 eng(7);
  auto rnd = [&]() {
    Rational re(static_cast<long>(eng() % 9) - 4, 1 + static_cast<long>(eng() % 3));
    Rational im(static_cast<long>(eng() % 9) - 4, 1 + static_cast<long>(eng() % 3));
    re.canonicalize();
    im.canonicalize();
    return ExactScalar(re, im);
  };
  Mat e(2), f(2), h(2);
  e.at(0, 1) = ExactScalar(1);
  f.at(1, 0) = ExactScalar(1);
  h.at(0, 0) = ExactScalar(1);
  h.at(1, 1) = ExactScalar(-1);
  CHECK(bracket(e, e).is_zero());
  CHECK(bracket(e, f) == h);

  for (int rep = 0; rep < 100; ++rep) {
    Mat x(3), y(3), z(3);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) {
        x.at(i, j) = rnd();
        y.at(i, j) = rnd();
        z.at(i, j) = rnd();
      }
    Mat jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("rational span: rank, containment, coordinates") {
  RationalSpan sp(4);
  CHECK(sp.insert(RatVec{1, 0, 1, 0}));
  CHECK(sp.insert(RatVec{0, 1, 0, 1}));
  CHECK_FALSE(sp.insert(RatVec{1, 1, 1, 1}));
  CHECK(sp.rank() == 2);
  CHECK(sp.contains(RatVec{rat_parse("1/2"), rat_parse("-1/3"), rat_parse("1/2"), rat_parse("-1/3")}));
  CHECK_FALSE(sp.contains(RatVec{1, 0, 0, 0}));
  auto c = sp.coordinates(RatVec{2, 3, 2, 3});
  REQUIRE(c.has_value());
  // v = 2*g0 + 3*g1 + 0*g2
  CHECK((*c)[0] == 2);
  CHECK((*c)[1] == 3);
  CHECK((*c)[2] == 0);
}

TEST_CASE("two squares solver") {
  Rational x, y;
  CHECK(two_squares(rat_parse("1/2"), x, y));
  CHECK(x * x + y * y == rat_parse("1/2"));
  CHECK(two_squares(Rational(25), x, y));
  CHECK(x * x + y * y == 25);
  CHECK(two_squares(rat_parse("13/49"), x, y));
  CHECK(x * x + y * y == rat_parse("13/49"));
  CHECK_FALSE(two_squares(Rational(3), x, y));
  CHECK_FALSE(two_squares(rat_parse("1/3"), x, y));
  CHECK(two_squares(Rational(0), x, y));
}

TEST_CASE("dimension mismatches are rejected") {
  CHECK_THROWS_AS(bracket(Mat(2), Mat(3)), std::invalid_argument);
  CHECK_THROWS_AS(trace_pairing(Mat(2), Mat(3)), std::invalid_argument);
  CHECK_THROWS_AS(Mat(2) + Mat(3), std::invalid_argument);
}
