#include <gtest/gtest.h>

#include "zoo/borwein_integral.hpp"

using namespace zoo;

namespace {

BigRational q(long p, long r) { return make_rational(p, r); }

}  // namespace

TEST(Borwein, ThresholdVerdicts) {
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(threshold_verdict(ladder_spec(n)), Verdict::ExactPiOver2A0) << n;
  EXPECT_EQ(threshold_verdict(ladder_spec(7)), Verdict::Deficit);
  EXPECT_EQ(threshold_verdict(ladder_spec(8)), Verdict::Deficit);
  EXPECT_THROW(threshold_verdict(IntegralSpec::with_factors(1, {q(1, 2), q(1, 2)})), BoundaryError);
  EXPECT_EQ(ladder_spec(7).label(), "a0=1 {1/3,1/5,1/7,1/9,1/11,1/13,1/15}");
}

TEST(Borwein, SingleFactorArcsine) {
  // int_0^inf sin(z)/z J0(b z) dz = asin(1/b) for b > 1, pi/2 for b < 1.
  auto ctx = PrecisionContext::with_digits(25);
  const Precision p = ctx.precision();
  const BigReal pi = const_pi(p);
  const std::pair<BigRational, BigReal> cases[] = {
      {q(2, 1), pi / 6L},
      {q(1, 2), pi / 2L},
      {q(3, 2), atan(BigReal(2L, p) / sqrt(BigReal(5L, p)))}};  // asin(2/3)
  for (const auto& [b, want] : cases) {
    QuadratureResult r = integral_estimate(IntegralSpec::with_factors(1, {b}), 1e-12, ctx);
    EXPECT_TRUE(r.tolerance_met);
    EXPECT_LT(abs(r.value - want), BigReal(1e-12, p)) << b.get_str() << " " << r.value;
  }
}

TEST(Borwein, ScalesWithA0) {
  // sinc(a0 z): the exact value is pi/(2 a0).
  auto ctx = PrecisionContext::with_digits(25);
  const Precision p = ctx.precision();
  QuadratureResult r = integral_estimate(IntegralSpec::with_factors(2, {q(1, 2), q(1, 3)}), 1e-12, ctx);
  EXPECT_LT(abs(r.value - const_pi(p) / 4L), BigReal(1e-12, p));
}

TEST(Borwein, LadderExactThenDeficit) {
  auto ctx = PrecisionContext::with_digits(25);
  const Precision p = ctx.precision();
  auto rows = ladder_table(7, 1e-10, ctx);
  ASSERT_EQ(rows.size(), 8u);
  const BigReal half_pi = const_pi(p) / 2L;
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(rows[n].verdict, Verdict::ExactPiOver2A0);
    EXPECT_LT(abs(rows[n].value - half_pi), BigReal(1e-10, p)) << n;
    EXPECT_TRUE(rows[n].relative_deficit.is_zero());
  }
  EXPECT_EQ(rows[7].verdict, Verdict::Deficit);
  // mpmath quadosc (which itself only holds ~11 digits here): 9.8358e-7.
  const BigReal gap = half_pi - rows[7].value;
  EXPECT_LT(abs(gap / BigReal(9.8358e-7, p) - 1L), BigReal(1e-4, p)) << gap;
  EXPECT_EQ(rows[7].relative_deficit.to_string(6), "6.26166e-7");
  const std::string csv = ladder_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "case,verdict,value,relative_deficit,error_estimate");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 9);
}

TEST(Borwein, DeficitResolvedAndStableUnderRefinement) {
  auto ctx = PrecisionContext::with_digits(25);
  const Precision p = ctx.precision();
  const IntegralSpec spec = ladder_spec(7);
  DeficitResult d = deficit(spec, 1e-12, ctx);
  EXPECT_GT(d.deficit, d.abs_error_estimate * 1000L);
  QuadratureOptions fine;
  fine.segment_split = 2;
  fine.order_scale = 2;
  QuadratureResult r = integral_estimate(spec, 1e-12, ctx, fine);
  EXPECT_LT(abs(r.value - d.quadrature.value), BigReal(1e-15, p));
  EXPECT_THROW(deficit(ladder_spec(3), 1e-10, ctx), BoundaryError);
}

TEST(Borwein, TruncatedTailAgrees) {
  auto ctx = PrecisionContext::with_digits(20);
  const Precision p = ctx.precision();
  const IntegralSpec spec = IntegralSpec::with_factors(1, {q(1, 3), q(1, 2), q(1, 4)});
  QuadratureOptions trunc;
  trunc.tail = TailMethod::Truncate;
  QuadratureResult a = integral_estimate(spec, 1e-12, ctx);
  QuadratureResult b = integral_estimate(spec, 1e-6, ctx, trunc);
  EXPECT_LT(abs(a.value - b.value), BigReal(1e-6, p));
  EXPECT_LT(abs(a.value - b.value), b.abs_error_estimate + BigReal(1e-12, p));
}

TEST(Borwein, MonteCarloMatchesQuadrature) {
  auto ctx = PrecisionContext::with_digits(20);
  const Precision p = ctx.precision();
  // Single factor 2: P(|X| > 1/2) for X arcsine on [-1, 1] is 2/3.
  MonteCarloResult one = convolution_tail_oracle(IntegralSpec::with_factors(1, {q(2, 1)}), 400000, 11);
  EXPECT_LT(one.lower, 2.0 / 3);
  EXPECT_GT(one.upper, 2.0 / 3);

  const IntegralSpec spec = IntegralSpec::with_factors(1, {q(1, 2), q(2, 3)});
  DeficitResult d = deficit(spec, 1e-12, ctx);
  MonteCarloResult mc = convolution_tail_oracle(spec, 1000000, 5);
  const double rel = d.relative_deficit.to_double();
  EXPECT_LT(mc.lower, rel);
  EXPECT_GT(mc.upper, rel);
  EXPECT_GT(rel, 0.0);
  (void)p;
}

TEST(Borwein, MonteCarloDeterministic) {
  const IntegralSpec spec = IntegralSpec::with_factors(1, {q(1, 2), q(2, 3)});
  MonteCarloResult a = convolution_tail_oracle(spec, 100001, 42, 3);
  MonteCarloResult b = convolution_tail_oracle(spec, 100001, 42, 3);
  EXPECT_EQ(a.hits, b.hits);
  EXPECT_EQ(a.samples, 100001u);
  MonteCarloResult none = convolution_tail_oracle(ladder_spec(6), 100000, 1);
  EXPECT_EQ(none.hits, 0u);
  EXPECT_EQ(none.lower, 0.0);
}
