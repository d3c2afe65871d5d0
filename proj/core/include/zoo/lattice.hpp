#pragma once

// Student-t and Gaussian lattice sums, their Poisson-dual (Bessel K) forms,
// and the worst-case error model of the Student approximation.

#include <string>

#include "zoo/numeric.hpp"

namespace zoo {

struct LatticeSumResult {
  BigReal scale_a;
  BigReal lambda;
  BigReal primal_sum;       // (1/a) sum_n (1 + n^2/a^2)^-lambda
  BigReal beta_target;      // B(1/2, lambda - 1/2)
  BigReal dual_correction;  // primal - target, summed from the Bessel side
  long terms_used = 0;
  std::string method;       // "primal-euler-maclaurin" or "dual-bessel"
};

// Public API limit on lambda.
inline constexpr double kMaxLambda = 1e7;

// (1/a) sum_{n in Z} (1 + n^2/a^2)^-lambda. Sums |n| <= m directly, with
// m >= 10a, and closes the tail with the integral plus Euler-Maclaurin
// corrections. TermCapExceeded when 2m+1 > ctx.max_terms.
BigReal student_lattice_sum(const BigReal& a, const BigReal& lambda,
                            const PrecisionContext& ctx);
SeriesSum student_lattice_sum_detail(const BigReal& a, const BigReal& lambda,
                                     const PrecisionContext& ctx);

// B(1/2, lambda-1/2) + dual_correction(a, lambda).
BigReal dual_bessel_sum(const BigReal& a, const BigReal& lambda,
                        const PrecisionContext& ctx);
// (2^(3/2-lambda) sqrt(pi)/Gamma(lambda)) * 2 sum_{n>=1} (2 pi a n)^(lambda-1/2)
// K_(lambda-1/2)(2 pi a n), to relative accuracy. `force_integral` routes
// every K evaluation through the quadrature path.
BigReal dual_correction(const BigReal& a, const BigReal& lambda,
                        const PrecisionContext& ctx, bool force_integral = false,
                        long* terms_used = nullptr);

// Primal when it fits within ctx.max_terms, otherwise the dual form; the
// chosen side is recorded in `method`.
LatticeSumResult evaluate_lattice(const BigReal& a, const BigReal& lambda,
                                  const PrecisionContext& ctx);

// (1/a) sum_{n in Z} exp(-n^2/a^2), summed directly.
BigReal gaussian_lattice_sum(const BigReal& a, const PrecisionContext& ctx);
// Modular dual: sqrt(pi) (1 + 2 sum_{n>=1} exp(-pi^2 a^2 n^2)); returns the
// excess over sqrt(pi) to relative accuracy.
BigReal gaussian_dual_excess(const BigReal& a, const PrecisionContext& ctx);

// Root of digamma(lambda) = log(pi a).
BigReal lambda_star(const BigReal& a, const PrecisionContext& ctx);
// sqrt(2/a) exp(-pi a).
BigReal worst_case_error(const BigReal& a, const PrecisionContext& ctx);

}  // namespace zoo
