#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lbsim/extprob.hpp"
#include "lbsim/rng.hpp"

using lbsim::CapacityError;
using lbsim::Error;
using lbsim::ExtProb;

TEST_CASE("construction and normalization") {
  CHECK(ExtProb::zero().is_zero());
  CHECK(ExtProb::one().to_double() == 1.0);
  CHECK(ExtProb::one().mantissa() == 0.5);
  CHECK(ExtProb::one().exponent() == 1);

  ExtProb p = ExtProb::from_double(0.375);
  CHECK(p.mantissa() == 0.75);
  CHECK(p.exponent() == -1);
  CHECK(p.to_double() == 0.375);

  CHECK(ExtProb::from_double(0.0).is_zero());
  CHECK_THROWS_AS(ExtProb::from_double(-0.25), Error);
  CHECK_THROWS_AS(ExtProb::from_double(std::nan("")), Error);

  CHECK(ExtProb::pow2(-40).to_double() == std::ldexp(1.0, -40));
  CHECK(ExtProb::pow2(0) == ExtProb::one());

  CHECK(ExtProb::from_parts(0.75, -1).to_double() == 0.375);
  CHECK_THROWS_AS(ExtProb::from_parts(1.5, 0), Error);
  CHECK_THROWS_AS(ExtProb::from_parts(0.25, 0), Error);
}

TEST_CASE("ordering is total and matches real order") {
  ExtProb z = ExtProb::zero();
  ExtProb tiny = ExtProb::pow2(-5000);
  ExtProb half = ExtProb::from_double(0.5);
  ExtProb one = ExtProb::one();
  CHECK(z < tiny);
  CHECK(tiny < half);
  CHECK(half < one);
  CHECK(!(one < one));
  CHECK(one == ExtProb::from_double(1.0));

  lbsim::CounterRng rng(99, 0);
  for (int i = 0; i < 2000; ++i) {
    double a = rng.next_unit();
    double b = rng.next_unit();
    ExtProb pa = ExtProb::from_double(a);
    ExtProb pb = ExtProb::from_double(b);
    CHECK((a < b) == (pa < pb));
    CHECK((a == b) == (pa == pb));
  }
}

TEST_CASE("arithmetic matches double where doubles can represent it") {
  lbsim::CounterRng rng(7, 1);
  for (int i = 0; i < 2000; ++i) {
    double a = rng.next_unit();
    double b = rng.next_unit();
    ExtProb pa = ExtProb::from_double(a);
    ExtProb pb = ExtProb::from_double(b);
    CHECK(doctest::Approx((pa * pb).to_double()).epsilon(1e-15) == a * b);
    CHECK(doctest::Approx((pa + pb).to_double()).epsilon(1e-15) == a + b);
    if (a >= b) CHECK(doctest::Approx((pa - pb).to_double()).epsilon(1e-12) == a - b);
    CHECK(doctest::Approx(pa.squared().to_double()).epsilon(1e-15) == a * a);
  }
  CHECK_THROWS_AS(ExtProb::from_double(0.25) - ExtProb::from_double(0.5), Error);
  CHECK((ExtProb::from_double(0.5) - ExtProb::from_double(0.5)).is_zero());
}

TEST_CASE("multiplication keeps exact powers of two exact") {
  ExtProb p = ExtProb::pow2(-7);
  ExtProb q = p;
  for (int i = 0; i < 200; ++i) q = q * p;  // 2^-1407
  CHECK(q.mantissa() == 0.5);
  CHECK(q.exponent() == -1406);
}

TEST_CASE("addition across huge exponent gaps keeps the larger term") {
  ExtProb big = ExtProb::pow2(-10);
  ExtProb small = ExtProb::pow2(-500);
  CHECK(big + small == big);
  CHECK(small + big == big);
  CHECK(big - small == big);
}

TEST_CASE("squaring chain tracks the log-domain value") {
  // d = 15/16 squared 10 times is (15/16)^1024.
  ExtProb d = ExtProb::from_double(15.0 / 16.0);
  for (int i = 0; i < 10; ++i) d = d.squared();
  CHECK(doctest::Approx(d.to_double()).epsilon(1e-15) == 1.98878132561392804e-29);

  // 1/4 squared 8 times is exactly 2^-512.
  ExtProb q = ExtProb::from_double(0.25);
  for (int i = 0; i < 8; ++i) q = q.squared();
  CHECK(q.mantissa() == 0.5);
  CHECK(q.exponent() == -511);
}

TEST_CASE("deep squaring saturates to zero instead of wrapping") {
  ExtProb d = ExtProb::from_double(0.5);
  for (int i = 0; i < 80; ++i) d = d.squared();  // exponent would be -2^80
  CHECK(d.is_zero());
}

TEST_CASE("scaled_pow2 honors the exponent range inclusively") {
  ExtProb p = ExtProb::from_double(0.75);  // frexp exponent 0
  const std::int64_t limit = std::int64_t(1) << 62;
  CHECK(p.scaled_pow2(limit).exponent() == limit);
  CHECK(p.scaled_pow2(-limit).exponent() == -limit);
  CHECK_THROWS_AS(p.scaled_pow2(limit + 1), CapacityError);
  CHECK(p.scaled_pow2(-limit - 1).is_zero());
}

TEST_CASE("from_ln inverts ln") {
  lbsim::CounterRng rng(13, 2);
  for (int i = 0; i < 500; ++i) {
    double x = rng.next_unit();
    if (x == 0) continue;
    ExtProb p = ExtProb::from_ln(std::log(static_cast<long double>(x)));
    CHECK(doctest::Approx(p.to_double()).epsilon(1e-14) == x);
  }
  // Large-magnitude logs far outside double range.
  ExtProb tiny = ExtProb::from_ln(-1e6L);
  CHECK(doctest::Approx(static_cast<double>(tiny.ln())).epsilon(1e-12) == -1e6);
  CHECK(ExtProb::from_ln(-std::numeric_limits<long double>::infinity()).is_zero());
}

TEST_CASE("decimal strings") {
  CHECK(ExtProb::zero().decimal_string(6) == "0");
  CHECK(ExtProb::from_double(0.375).decimal_string(3) == "3.75e-1");
  ExtProb d = ExtProb::from_double(15.0 / 16.0);
  for (int i = 0; i < 10; ++i) d = d.squared();
  CHECK(d.decimal_string(6) == "1.98878e-29");
}

TEST_CASE("one minus a small power of two is exact") {
  for (int n = 1; n <= 52; ++n) {
    ExtProb d0 = ExtProb::one() - ExtProb::pow2(-n);
    CHECK(d0.to_double() == 1.0 - std::ldexp(1.0, -n));
  }
}
