#pragma once

// int_0^inf sinc(a0 z) prod_k J0(a_k z) dz.
//
// It equals pi/(2 a0) exactly when a0 > sum a_k and falls short otherwise.
// The integral is evaluated by Gauss-Legendre on half-periods of the fastest
// combined oscillation up to some Z; the rest is integrated term by term from
// the Hankel expansion of each J0 (every term is z^-p e^{i w z}). Plain
// truncation at the envelope bound is kept as a cross-check. The
// Monte-Carlo oracle samples the dual side:
// the integral is (pi/(2 a0)) P(|X_1 + ... + X_n| <= a0/2) with X_k
// arcsine-distributed on [-a_k/2, a_k/2].

#include <cstdint>
#include <string>
#include <vector>

#include "zoo/numeric.hpp"

namespace zoo {

enum class Kernel { J0 };

struct IntegralSpec {
  BigRational a0{1};
  std::vector<BigRational> factors;
  std::vector<Kernel> kinds;  // one per factor

  static IntegralSpec with_factors(BigRational a0, std::vector<BigRational> factors);
  BigRational factor_sum() const;
  std::string label() const;
};

// a0 = 1, factors 1/3, 1/5, ..., 1/(2n+1).
IntegralSpec ladder_spec(int n);

enum class Verdict { ExactPiOver2A0, Deficit };
const char* to_string(Verdict v);

// BoundaryError when a0 equals the factor sum.
Verdict threshold_verdict(const IntegralSpec& spec);

struct QuadratureResult {
  BigReal value;
  BigReal abs_error_estimate;
  long segments_used = 0;
  bool accelerated = false;  // tail extrapolated rather than truncated
  bool tolerance_met = true;
  int gauss_order = 0;
  double z_max = 0;
};

enum class TailMethod {
  Asymptotic,  // quadrature to Z, Hankel-expansion tail beyond
  Truncate,    // quadrature to the Z where the envelope bound meets the tolerance
};

struct QuadratureOptions {
  TailMethod tail = TailMethod::Asymptotic;
  int segment_split = 1;  // subdivide each half-period this many times
  int order_scale = 1;    // multiply the Gauss order
};

QuadratureResult integral_estimate(const IntegralSpec& spec, double target_abs_tol,
                                   const PrecisionContext& ctx,
                                   const QuadratureOptions& opts = {});

struct DeficitResult {
  BigReal deficit;           // pi/(2 a0) - integral
  BigReal relative_deficit;  // deficit / (pi/(2 a0))
  BigReal abs_error_estimate;
  QuadratureResult quadrature;
};

// Requires a DEFICIT verdict (BoundaryError otherwise); ToleranceNotMet
// unless the deficit exceeds its error estimate.
DeficitResult deficit(const IntegralSpec& spec, double target_abs_tol,
                      const PrecisionContext& ctx);

// One line per rung of ladder_spec(0..max_n): verdict, value, and for DEFICIT
// rungs the relative deficit (zero otherwise).
struct LadderRow {
  int n = 0;
  std::string label;
  Verdict verdict = Verdict::ExactPiOver2A0;
  BigReal value;
  BigReal relative_deficit;
  BigReal abs_error_estimate;
};
std::vector<LadderRow> ladder_table(int max_n, double target_abs_tol,
                                    const PrecisionContext& ctx);
std::string ladder_csv(const std::vector<LadderRow>& rows);

struct MonteCarloResult {
  double estimate = 0;  // P(|S| > a0/2)
  double lower = 0;     // 95% interval
  double upper = 0;
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
};

// Shard s of `shards` draws from mt19937_64 seeded with seed_seq{seed, s};
// shard s gets samples/shards draws, the first samples%shards one extra.
MonteCarloResult convolution_tail_oracle(const IntegralSpec& spec, std::uint64_t samples,
                                         std::uint64_t seed, int shards = 8);

}  // namespace zoo
