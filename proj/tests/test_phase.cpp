#include <doctest.h>

#include "gbbraid/errors.hpp"
#include "gbbraid/phase.hpp"

using namespace gbbraid;

TEST_CASE("phase construction reduces mod 1") {
  CHECK(Phase::of(0, 1) == Phase::zero());
  CHECK(Phase::of(3, 6) == Phase::half());
  CHECK(Phase::of(7, 4) == Phase::of(3, 4));
  CHECK(Phase::of(-1, 4) == Phase::of(3, 4));
  CHECK(Phase::of(-5, 4) == Phase::of(3, 4));
  CHECK(Phase::of(4, 4) == Phase::zero());
  CHECK(Phase::of(12, 8).num == 1);
  CHECK(Phase::of(12, 8).den == 2);
  CHECK_THROWS_AS(Phase::of(1, 0), ValidationError);
  CHECK_THROWS_AS(Phase::of(1, -2), ValidationError);
}

TEST_CASE("phase arithmetic is exponent arithmetic mod 1") {
  Phase q = Phase::of(1, 3);
  CHECK(q + q == Phase::of(2, 3));
  CHECK(q + q + q == Phase::zero());
  CHECK(q - q == Phase::zero());
  CHECK(-q == Phase::of(2, 3));
  CHECK(-Phase::zero() == Phase::zero());
  CHECK(Phase::of(1, 2) + Phase::of(1, 3) == Phase::of(5, 6));
  CHECK(Phase::of(5, 6) + Phase::of(1, 2) == Phase::of(1, 3));

  Phase acc = Phase::zero();
  for (int i = 0; i < 12; ++i) acc += Phase::of(1, 12);
  CHECK(acc == Phase::zero());

  CHECK(Phase::of(1, 5).times(0) == Phase::zero());
  CHECK(Phase::of(1, 5).times(3) == Phase::of(3, 5));
  CHECK(Phase::of(1, 5).times(5) == Phase::zero());
  CHECK(Phase::of(1, 5).times(-1) == Phase::of(4, 5));
  CHECK(Phase::of(2, 7).times(1000000007) == Phase::of(2, 7).times(1000000007 % 7));
}

TEST_CASE("phase equality is exact on reduced form") {
  CHECK(Phase::of(2, 4) == Phase::of(1, 2));
  CHECK(Phase::of(1, 3) != Phase::of(1, 4));
  CHECK(Phase::zero().is_zero());
  CHECK(!Phase::of(1, 7).is_zero());
}

TEST_CASE("phase string round trip") {
  CHECK(Phase::zero().str() == "0/1");
  CHECK(Phase::half().str() == "1/2");
  CHECK(Phase::of(3, 4).str() == "3/4");
  CHECK(Phase::parse("3/4") == Phase::of(3, 4));
  CHECK(Phase::parse("0/1") == Phase::zero());
  CHECK(Phase::parse("7/4") == Phase::of(3, 4));
  CHECK(Phase::parse("-1/4") == Phase::of(3, 4));
  CHECK(Phase::parse("2") == Phase::zero());
  CHECK(Phase::parse("-3") == Phase::zero());
  for (int num = 0; num < 24; ++num) {
    Phase q = Phase::of(num, 24);
    CHECK(Phase::parse(q.str()) == q);
  }
}

TEST_CASE("phase parse rejects junk") {
  CHECK_THROWS_AS(Phase::parse(""), ValidationError);
  CHECK_THROWS_AS(Phase::parse("1/"), ValidationError);
  CHECK_THROWS_AS(Phase::parse("/2"), ValidationError);
  CHECK_THROWS_AS(Phase::parse("a/b"), ValidationError);
  CHECK_THROWS_AS(Phase::parse("1/0"), ValidationError);
  CHECK_THROWS_AS(Phase::parse("1/-2"), ValidationError);
  CHECK_THROWS_AS(Phase::parse("1.5"), ValidationError);
  CHECK_THROWS_AS(Phase::parse("1/2/3"), ValidationError);
}

TEST_CASE("phase denominator overflow guard") {
  Phase a = Phase::of(1, 1'999'999'999);
  CHECK_THROWS_AS(a + Phase::of(1, 1'999'999'998), ValidationError);
  CHECK_THROWS_AS(Phase::parse("1/2000000001"), ValidationError);
}
