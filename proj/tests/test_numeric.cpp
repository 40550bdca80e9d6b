#include <doctest.h>

#include "matcat/numeric.hpp"
#include "matcat/ratmat.hpp"

using namespace matcat;

TEST_CASE("rational powers are exact for negative exponents") {
  CHECK(pow_rat(Rat(2), 0) == Rat(1));
  CHECK(pow_rat(Rat(2), 10) == Rat(1024));
  CHECK(pow_rat(Rat(2), -3) == Rat(1, 8));
  CHECK(pow_rat(Rat(3, 2), 2) == Rat(9, 4));
  CHECK(pow_rat(Rat(-2), 3) == Rat(-8));
  // exponents arising from degree products stay exact far beyond 64 bits
  CHECK(pow_rat(Rat(2), 100) * pow_rat(Rat(2), -100) == Rat(1));
}

TEST_CASE("integer square root") {
  CHECK(isqrt(Nat(0)) == 0);
  CHECK(isqrt(Nat(65)) == 8);
  CHECK(isqrt(Nat(64)) == 8);
  Nat big("123456789123456789123456789");
  Nat r = isqrt(big);
  CHECK(r * r <= big);
  CHECK((r + 1) * (r + 1) > big);
}

TEST_CASE("matrix arithmetic") {
  Matrix a(2, 2), b(2, 2);
  a.at(0, 0) = 1;
  a.at(0, 1) = Rat(1, 2);
  a.at(1, 1) = 3;
  b.at(0, 0) = 2;
  b.at(1, 0) = 1;
  const Matrix s = a + b;
  CHECK(s.at(0, 0) == 3);
  const Matrix p = a * b;
  CHECK(p.at(0, 0) == Rat(5, 2));
  CHECK(p.at(1, 0) == 3);
  CHECK((Matrix::identity(2) * a) == a);
  CHECK(a.transpose().at(1, 0) == Rat(1, 2));
}

TEST_CASE("exact inverse by elimination") {
  Matrix a(2, 2);
  a.at(0, 0) = 1;
  a.at(0, 1) = 2;
  a.at(1, 0) = 3;
  a.at(1, 1) = 4;
  const auto inv = a.inverse();
  REQUIRE(inv.has_value());
  CHECK((a * *inv) == Matrix::identity(2));
  CHECK((*inv * a) == Matrix::identity(2));

  Matrix sing(2, 2);
  sing.at(0, 0) = 1;
  sing.at(1, 0) = 2;
  CHECK_FALSE(sing.inverse().has_value());
}
