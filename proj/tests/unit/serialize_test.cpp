#include <gtest/gtest.h>

#include <random>

#include "random_poly.hpp"
#include "sangaku/errors.hpp"
#include "sangaku/serialize.hpp"

using namespace sangaku;

TEST(PolyJson, ExactLayout) {
  const Poly p = parse_poly("3*k^2*y - 5*y^2 + 7");
  // Terms follow the ring's monomial order (y most significant).
  EXPECT_EQ(poly_to_json(p), R"({"vars":["k","y"],"terms":[[[0,0],"7"],[[2,1],"3"],[[0,2],"-5"]]})");
  EXPECT_EQ(poly_from_json(poly_to_json(p)), p);
}

TEST(PolyJson, RandomRoundTrip) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Poly p = sangaku::testing::random_poly(rng, {Var::k, Var::x, Var::y}, 3, 1000);
    p *= pow(Integer(10), 40) + trial;
    const Poly back = poly_from_json(poly_to_json(p));
    EXPECT_EQ(back, p);
    EXPECT_EQ(poly_to_json(back), poly_to_json(p));
  }
  EXPECT_EQ(poly_from_json(poly_to_json(Poly())), Poly());
}

TEST(PolyJson, Malformed) {
  EXPECT_THROW(poly_from_json("not json"), PreconditionError);
  EXPECT_THROW(poly_from_json(R"({"vars":["k"]})"), PreconditionError);
  EXPECT_THROW(poly_from_json(R"({"vars":["q"],"terms":[]})"), PreconditionError);
  EXPECT_THROW(poly_from_json(R"({"vars":["k","k"],"terms":[]})"), PreconditionError);
  EXPECT_THROW(poly_from_json(R"({"vars":["k"],"terms":[[[1,2],"3"]]})"), PreconditionError);
  EXPECT_THROW(poly_from_json(R"({"vars":["k"],"terms":[[[1],"1/2"]]})"), PreconditionError);
  EXPECT_THROW(poly_from_json(R"({"vars":["k"],"terms":[[[-1],"2"]]})"), PreconditionError);
  // Integer-valued fractions are accepted.
  EXPECT_EQ(poly_from_json(R"({"vars":["k"],"terms":[[[1],"4/2"]]})"), parse_poly("2*k"));
}

TEST(EliminantJson, MetadataAndRoundTrip) {
  EliminantFile f;
  f.polynomial = parse_poly("2*y - k^2");
  f.backend = "sylvester";
  const std::string text = eliminant_to_json(f);
  EXPECT_NE(text.find(R"("pipeline":"w,v,x")"), std::string::npos);
  EXPECT_NE(text.find(R"("timestamp":null)"), std::string::npos);
  EXPECT_NE(text.find(R"("degrees":{"k":2,"y":1,"total":2})"), std::string::npos);
  const EliminantFile back = eliminant_from_json(text);
  EXPECT_EQ(back.polynomial, f.polynomial);
  EXPECT_EQ(back.backend, "sylvester");
  EXPECT_FALSE(back.timestamp.has_value());

  f.timestamp = "1700000000";
  EXPECT_EQ(eliminant_from_json(eliminant_to_json(f)).timestamp, f.timestamp);
  EXPECT_THROW(eliminant_from_json(R"({"polynomial":{"vars":[],"terms":[]}})"), PreconditionError);
}

TEST(SeriesJson, RoundTripIsBitExact) {
  for (mpfr_prec_t p : {64, 113, 256, 300}) {
    std::vector<ExtFloat> c;
    for (int i = 0; i <= 12; ++i) c.push_back(sqrt(ExtFloat(static_cast<long>(i + 2), p)) / ExtFloat(3L - i, p));
    const PowerSeries s(std::move(c), p);
    const PowerSeries back = series_from_json(series_to_json(s));
    ASSERT_EQ(back.order(), s.order());
    EXPECT_EQ(back.precision(), p);
    for (std::size_t i = 0; i < s.coefficients().size(); ++i) EXPECT_TRUE(back[i] == s[i]) << i;
  }
  EXPECT_THROW(series_from_json(R"({"order":2,"precision_bits":64,"coefficients":["1"]})"), PreconditionError);
}

TEST(IntervalJson, RoundTrip) {
  const IsolatingInterval iv{Rational(103, 100), Rational(13, 10), 0};
  EXPECT_EQ(interval_to_json(iv), R"({"lo":"103/100","hi":"13/10"})");
  const IsolatingInterval back = interval_from_json(interval_to_json(iv));
  EXPECT_EQ(back.lo, iv.lo);
  EXPECT_EQ(back.hi, iv.hi);
  EXPECT_THROW(interval_from_json(R"({"lo":"2","hi":"1"})"), PreconditionError);
}

TEST(ReportJson, RoundTrip) {
  ExceptionalReport rep = exceptional_candidates(parse_poly("(k - 1)*(k - 2)*(2*k - 7)"), Rational(200));
  rep.grid = grid_signs(rep.delta0, Rational(1), Rational(5), 8);
  const ReportSummary s = summarize(rep);
  const std::string text = report_to_json(s);
  EXPECT_NE(text.find(R"("root_count":3)"), std::string::npos);
  const ReportSummary back = report_from_json(text);
  EXPECT_EQ(back.bound, Rational(200));
  ASSERT_EQ(back.roots.size(), 3u);
  EXPECT_EQ(back.roots[0].lo, Rational(1));
  EXPECT_EQ(back.grid_brackets.size(), s.grid_brackets.size());
  EXPECT_EQ(back.grid_zeros, s.grid_zeros);
  EXPECT_EQ(report_to_json(back), text);
}
