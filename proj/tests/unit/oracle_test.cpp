#include <gtest/gtest.h>

#include <string>

#include "sangaku/errors.hpp"
#include "sangaku/oracle.hpp"

using namespace sangaku;

namespace {

ExtFloat F(const char* s, mpfr_prec_t p = 256) { return ExtFloat(std::string_view(s), p); }

double diff(const ExtFloat& a, const char* b) { return abs(a - F(b, a.precision())).to_double(); }

}  // namespace

TEST(Profile, RightEndpoint) {
  const ProfilePoint pt = profile(F("1"), F("1"));
  EXPECT_EQ(pt.w, F("1"));
  EXPECT_TRUE(pt.u.is_zero());
  EXPECT_EQ(pt.v, F("1"));
  EXPECT_LT(abs(pt.z - sqrt(F("2"))).to_double(), 1e-70);
}

TEST(Profile, LeftEndpoint) {
  const ProfilePoint pt = profile(F("1"), profile_left_end(256));
  EXPECT_LT(abs(pt.w - sqrt(F("0.5"))).to_double(), 1e-70);
  EXPECT_LT(abs(pt.u - F("1")).to_double(), 1e-70);
  EXPECT_LT(pt.v.to_double(), 1e-30);  // radicand clamped to zero
  // z = sqrt(3/2 - sqrt2 + 1/2). v is the square root of a rounding-level
  // radicand here, so only about half the bits survive.
  EXPECT_LT(abs(pt.z - sqrt(F("2") - sqrt(F("2")))).to_double(), 1e-30);
  EXPECT_NEAR(pt.z.to_double(), 0.76537, 1e-5);
}

TEST(Profile, DomainGuards) {
  EXPECT_THROW(profile(F("0.5"), F("0.9")), DomainError);
  EXPECT_THROW(profile(F("1"), F("0.1")), DomainError);
  EXPECT_THROW(profile_derivative(F("0.5"), F("0.9")), DomainError);
}

TEST(Profile, DerivativeSigns) {
  // The r = 1 minimizer sits near 0.3732, so 0.4 is already on the rising side.
  EXPECT_LT(profile_derivative(F("1"), F("0.35")).sign(), 0);
  EXPECT_GT(profile_derivative(F("1"), F("0.4")).sign(), 0);
  EXPECT_GT(profile_derivative(F("1"), F("0.9")).sign(), 0);
  // r = 4: brackets a sign change; cross-checked by a grid scan of z.
  EXPECT_LT(profile_derivative(F("4"), profile_left_end(256) + F("1e-6")).sign(), 0);
  EXPECT_GT(profile_derivative(F("4"), F("0.999999")).sign(), 0);
}

TEST(Profile, RadicandIdentitiesHoldToFewUlp) {
  for (const char* rs : {"1", "1.5", "3", "10"}) {
    const ExtFloat r = F(rs);
    for (const char* xs : {"0.3", "0.5", "0.77", "0.99"}) {
      const ProfilePoint pt = profile(r, F(xs));
      const ExtFloat ulp = exp2_int(-250, 256);
      EXPECT_LE(abs(pt.w * pt.w - (pt.x * 2L - pt.x * pt.x)), ulp * 4L);
      EXPECT_LE(abs(pt.v * pt.v - (r * r - pt.u * pt.u)), ulp * 4L * r * r);
      EXPECT_GE(pt.z.sign(), 0);
    }
  }
}

TEST(Minimize, PublishedValues) {
  EXPECT_LT(diff(minimize(F("1"), 256).mu, "0.3853983629832700199"), 1e-19);
  EXPECT_LT(diff(minimize(F("1.1"), 256).mu, "0.4025109500237806"), 1e-15);
  EXPECT_LT(diff(minimize(F("2"), 256).mu, "0.5161758482795963"), 1e-15);
}

TEST(Minimize, StationarityAndAgreement) {
  for (const char* rs : {"1", "1.5", "2", "5", "20"}) {
    const MinimizerResult m = minimize(F(rs), 256);
    EXPECT_LT(m.derivative_residual, exp2_int(-128, 256)) << rs;
    EXPECT_LT(abs(m.x_m - m.x_golden), exp2_int(-224, 256)) << rs;
    EXPECT_GT(m.x_m, profile_left_end(256));
    EXPECT_LT(m.x_m, F("1"));
    EXPECT_EQ(m.lambda, m.mu * m.mu);
  }
}

TEST(Minimize, UnimodalOnGrid) {
  for (const char* rs : {"1", "1.5", "2", "5", "20"}) {
    const ExtFloat r = F(rs, 128);
    const ExtFloat lo = profile_left_end(128);
    const ExtFloat step = (ExtFloat(1L, 128) - lo) / 999L;
    int changes = 0;
    int prev_sign = 0;
    ExtFloat prev = profile(r, lo).z;
    for (long i = 1; i < 1000; ++i) {
      ExtFloat x = i == 999 ? ExtFloat(1L, 128) : lo + step * i;
      const ExtFloat z = profile(r, x).z;
      const int s = (z - prev).sign();
      if (prev_sign != 0 && s != prev_sign) ++changes;
      prev_sign = s;
      prev = z;
    }
    EXPECT_EQ(changes, 1) << rs;
  }
}

TEST(Minimize, LipschitzProbe) {
  const ExtFloat delta = F("1e-6", 128);
  for (const char* rs : {"1", "2.5", "4", "7", "10"}) {
    const ExtFloat r = F(rs, 128);
    const ExtFloat a = minimize(r, 128).mu;
    const ExtFloat b = minimize(r + delta, 128).mu;
    EXPECT_LT(abs(b - a) / delta, F("1", 128)) << rs;
  }
}

TEST(Lambda, AtOneAndSqrtTwo) {
  EXPECT_LT(diff(lambda_of_k(F("1"), 256), "0.14853189819"), 1e-10);
  const ExtFloat mu2 = F("0.5161758482795963");
  EXPECT_LT(abs(lambda_of_k(sqrt(F("2", 320)), 256) - mu2 * mu2).to_double(), 1e-15);
}

TEST(Lambda, PrecisionDoublingIsConsistent) {
  const ExtFloat a = lambda_of_k(F("1"), 256);
  const ExtFloat b = lambda_of_k(F("1", 512), 512);
  EXPECT_LT(abs(b.rounded(512) - a.rounded(512)), exp2_int(-240, 512));
}

TEST(Lambda, RejectsSmallK) { EXPECT_THROW(lambda_of_k(F("0.9"), 128), DomainError); }
