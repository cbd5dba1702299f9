#include "invpow/scalar.hpp"

#include <random>

#include <gtest/gtest.h>

#include "oracle.hpp"

namespace invpow {
namespace {

Scalar q(long p, long d) { return Scalar::ratio(p, d); }

TEST(ScalarTest, ExactFieldOperations) {
  EXPECT_EQ(q(1, 3) + q(1, 6), q(1, 2));
  EXPECT_TRUE((q(1, 3) + q(1, 6)).exact());
  EXPECT_EQ(pow(q(2, 3), -2), q(9, 4));
  EXPECT_EQ(q(3, 4) - q(5, 4), q(-1, 2));
  EXPECT_EQ(q(3, 4) * q(8, 9), q(2, 3));
  EXPECT_EQ(q(3, 4) / q(-3, 8), Scalar(-2));
  EXPECT_EQ(-q(3, 4), q(-3, 4));
  EXPECT_EQ(pow(q(-1, 2), 3), q(-1, 8));
  EXPECT_EQ(pow(q(5, 7), 0), Scalar(1));
}

TEST(ScalarTest, LowestTermsPositiveDenominator) {
  const Scalar x = Scalar::ratio(6, -8);
  EXPECT_EQ(x.rational().get_num(), -3);
  EXPECT_EQ(x.rational().get_den(), 4);
  EXPECT_EQ(Scalar(mpq_class(10, 4)).rational().get_den(), 2);
}

TEST(ScalarTest, MixingWithFloatClearsExactness) {
  const Scalar third = q(1, 3);
  const Scalar half = parse_scalar("0.5", NumericMode::floating(64));
  const Scalar sum = third + half;
  EXPECT_FALSE(sum.exact());
  EXPECT_EQ(sum.precision(), 64);
  EXPECT_FALSE((half * third).exact());
  EXPECT_FALSE((third / half).exact());
  EXPECT_FALSE((third - half).exact());
  EXPECT_NEAR(sum.to_double(), 5.0 / 6.0, 1e-15);
  EXPECT_NEAR((third / half).to_double(), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR((third - half).to_double(), -1.0 / 6.0, 1e-15);
}

TEST(ScalarTest, MixedPrecisionTakesTheWider) {
  const Scalar a = q(1, 3).to_float(64);
  const Scalar b = q(1, 3).to_float(200);
  EXPECT_EQ((a + b).precision(), 200);
}

TEST(ScalarTest, FloatOpsAreCorrectlyRounded) {
  // 1/3 + 1/7 in exact arithmetic, then a single rounding, must match
  // the float pipeline that rounds 1/3 first and adds 1/7 exactly.
  const Scalar third = q(1, 3).to_float(64);
  BigFloat expected(64);
  mpq_class third_rounded;
  mpfr_get_q(third_rounded.get_mpq_t(), third.real().get());
  mpfr_set_q(expected.get(), mpq_class(third_rounded + mpq_class(1, 7)).get_mpq_t(), MPFR_RNDN);
  const Scalar sum = third + q(1, 7);
  EXPECT_EQ(mpfr_cmp(sum.real().get(), expected.get()), 0);
}

TEST(ScalarTest, ErrorPaths) {
  EXPECT_THROW(q(1, 2) / Scalar(0), std::domain_error);
  EXPECT_THROW(Scalar::ratio(1, 0), std::domain_error);
  EXPECT_THROW(pow(Scalar(0), -1), std::domain_error);
  EXPECT_THROW(pow(Scalar(2), kMaxExponent + 1), std::overflow_error);
  EXPECT_THROW(NumericMode::floating(53), std::invalid_argument);
  EXPECT_THROW(Scalar(BigFloat(32)), std::invalid_argument);
  EXPECT_THROW(q(1, 2).real(), std::logic_error);
  EXPECT_THROW(q(1, 2).to_float(64).rational(), std::logic_error);
  EXPECT_THROW(q(1, 2).to_float(64).to_mode(NumericMode{}), std::invalid_argument);
}

TEST(ScalarTest, ComparisonAcrossRepresentations) {
  EXPECT_LT(q(1, 3), q(1, 2));
  EXPECT_GT(q(1, 2).to_float(64), q(1, 3));
  EXPECT_EQ(q(1, 2).to_float(64), q(1, 2));
  EXPECT_NE(q(1, 3).to_float(64), q(1, 3));
  EXPECT_EQ(abs(q(-7, 2)), q(7, 2));
}

TEST(ScalarParseTest, DecimalsBecomeExactRationals) {
  EXPECT_EQ(parse_scalar("0.25"), q(1, 4));
  EXPECT_EQ(parse_scalar("0.2"), q(1, 5));
  EXPECT_EQ(parse_scalar("-1.5e-3"), q(-3, 2000));
  EXPECT_EQ(parse_scalar("1e-12"), Scalar::ratio(1, mpz_class("1000000000000")));
  EXPECT_EQ(parse_scalar("2E3"), Scalar(2000));
  EXPECT_EQ(parse_scalar(" 17 "), Scalar(17));
  EXPECT_EQ(parse_scalar("-6/8"), q(-3, 4));
  EXPECT_EQ(parse_scalar(".5"), q(1, 2));
  EXPECT_EQ(parse_scalar("5."), Scalar(5));
  EXPECT_TRUE(parse_scalar("0.1").exact());
}

TEST(ScalarParseTest, LeadingZerosAreDecimal) {
  EXPECT_EQ(parse_scalar("010"), Scalar(10));
  EXPECT_EQ(parse_scalar("0.08"), Scalar::ratio(2, 25));
  EXPECT_EQ(parse_scalar("007/09"), Scalar::ratio(7, 9));
  EXPECT_EQ(parse_scalar("1e-09"), Scalar::ratio(1, 1000000000));
  EXPECT_EQ(parse_scalar("010", NumericMode::floating(64)), Scalar(10));
}

TEST(ScalarParseTest, RejectsMalformedOrInexactLiterals) {
  for (const char *bad : {"", "abc", "1/0", "1/", "/2", "1.2.3", "1e", "0x1p3", "nan", "inf", "--1", "1/-2"})
    EXPECT_THROW(parse_scalar(bad), std::invalid_argument) << bad;
}

TEST(ScalarParseTest, FloatModeAcceptsMpfrSyntax) {
  const auto mode = NumericMode::floating(64);
  EXPECT_FALSE(parse_scalar("0.1", mode).exact());
  EXPECT_EQ(parse_scalar("3/4", mode), q(3, 4));
  EXPECT_EQ(parse_scalar("0x1p-3", NumericMode::floating(64)).to_double(), 0.125);
  EXPECT_THROW(parse_scalar("inf", mode), std::invalid_argument);
  EXPECT_THROW(parse_scalar("1.0junk", mode), std::invalid_argument);
}

TEST(RenderTest, DecimalLayout) {
  EXPECT_EQ(render_decimal(Scalar(0), 30), "0");
  EXPECT_EQ(render_decimal(q(1, 4), 30), "0.25");
  EXPECT_EQ(render_decimal(q(-4, 5), 30), "-0.8");
  EXPECT_EQ(render_decimal(q(1, 3), 5), "0.33333");
  EXPECT_EQ(render_decimal(q(2, 3), 5), "0.66667");
  EXPECT_EQ(render_decimal(Scalar(123456), 3), "1.23e+05");
  EXPECT_EQ(render_decimal(Scalar(100), 30), "100");
  EXPECT_EQ(render_decimal(q(1, 1000000), 30), "1e-06");
  EXPECT_EQ(render_decimal(q(1, 100000), 30), "0.00001");
  EXPECT_EQ(render_decimal(q(9999, 1000), 3), "10");
  EXPECT_EQ(render_decimal(pow(q(1, 5), 21) * Scalar(4), 10), "8.388608e-15");
  EXPECT_EQ(render_exact(q(-3, 9)), "-1/3");
  EXPECT_EQ(render_exact(Scalar(7)), "7");
}

TEST(RenderTest, FloatAndExactRenderAlike) {
  for (auto v : {q(1, 4), q(-5, 8), q(3, 1024), Scalar(12345)})
    EXPECT_EQ(render_decimal(v.to_float(64), 12), render_decimal(v, 12)) << v.str();
}

// Random expression trees over exact scalars agree with unreduced fraction
// arithmetic evaluated alongside.
TEST(ScalarPropertyTest, ExactnessMatchesNaiveFractions) {
  std::mt19937_64 rng(20261018);
  std::uniform_int_distribution<int> op(0, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const mpq_class seed = oracle::random_rational(rng);
    Scalar acc(seed);
    oracle::NaiveFraction ref = oracle::to_naive(seed);
    for (int step = 0; step < 12; ++step) {
      mpq_class v = oracle::random_rational(rng);
      if (v == 0)
        v = 1;
      const Scalar s(v);
      const auto n = oracle::to_naive(v);
      switch (op(rng)) {
      case 0: acc += s; ref = ref + n; break;
      case 1: acc -= s; ref = ref - n; break;
      case 2: acc *= s; ref = ref * n; break;
      case 3: acc /= s; ref = ref / n; break;
      case 4:
        if (!acc.is_zero()) {
          acc = pow(acc, -2);
          ref = oracle::NaiveFraction(1) / (ref * ref);
        }
        break;
      }
      ASSERT_TRUE(acc.exact());
      ASSERT_TRUE(ref.equals(acc)) << "trial " << trial << " step " << step;
    }
  }
}

} // namespace
} // namespace invpow
