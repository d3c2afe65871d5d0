#include "zoo/theta_moments.hpp"

#include <algorithm>
#include <cmath>

namespace zoo {

namespace {

PrecisionContext floored(const PrecisionContext& ctx) {
  PrecisionContext out = ctx;
  out.out_digits = std::max(ctx.out_digits, kThetaDigitsFloor);
  return out;
}

void check_q(const BigReal& q) {
  if (!(q.sign() > 0) || !(q < 1L)) throw DomainError("nome q must lie in (0, 1)");
}

BigReal sigma2_from(const EllipticPair& e, const BigReal& pi) {
  const BigReal kp2 = e.k_prime * e.k_prime;
  return e.K * e.K / (pi * pi) * (e.E / e.K - kp2);
}

}  // namespace

BigReal theta_moment_sum(const BigReal& q, ThetaOffset offset, int order,
                         const PrecisionContext& ctx) {
  check_q(q);
  if (order != 0 && order != 2 && order != 4) {
    throw DomainError("theta_moment_sum: order must be 0, 2 or 4");
  }
  const PrecisionContext inner = floored(ctx).widened(5);
  const Precision prec = inner.precision();
  const BigReal lq = log(q.rounded(prec));
  const BigReal eps = pow10(-(inner.working_digits() + 5), prec);
  const BigReal shift(offset == ThetaOffset::Half ? 0.5 : 0.0, prec);
  // Terms peak near x^2 = order / (2 |log q|); stop only past the peak.
  const double peak = std::sqrt(order / (2.0 * std::max(1e-300, -lq.to_double()))) + 1;

  BigReal sum(0L, prec);
  if (offset == ThetaOffset::Zero && order == 0) sum = BigReal(1L, prec);
  for (long n = 1;; ++n) {
    const BigReal x = BigReal(n, prec) - shift;
    const BigReal x2 = x * x;
    BigReal term = exp(x2 * lq);
    if (order > 0) term *= pow(x2, order / 2);
    term *= 2L;
    sum += term;
    if (n > peak && term < eps * sum) break;
    if (n > ctx.max_terms) throw TermCapExceeded("theta_moment_sum: too many terms");
  }
  return sum.rounded(ctx.precision());
}

BigReal second_moment_ratio_exact(const BigReal& q, const PrecisionContext& ctx) {
  check_q(q);
  const PrecisionContext inner = floored(ctx).widened(5);
  const EllipticPair e = nome_to_modulus(q, inner);
  return sigma2_from(e, const_pi(inner.precision())).rounded(ctx.precision());
}

BigReal fourth_moment_correction(const BigReal& q, const PrecisionContext& ctx) {
  check_q(q);
  const PrecisionContext inner = floored(ctx).widened(5);
  const EllipticPair e = nome_to_modulus(q, inner);
  const BigReal t3 = theta3(q, inner);
  const BigReal kk = e.k * e.k_prime;
  return (pow(t3, 8) * kk * kk / 8L).rounded(ctx.precision());
}

BigReal fourth_moment_ratio_exact(const BigReal& q, const PrecisionContext& ctx) {
  check_q(q);
  const PrecisionContext inner = floored(ctx).widened(5);
  const BigReal s2 = second_moment_ratio_exact(q, inner);
  return (s2 * s2 * 3L + fourth_moment_correction(q, inner)).rounded(ctx.precision());
}

BigReal theta2_second_moment_ratio_exact(const BigReal& q, const PrecisionContext& ctx) {
  check_q(q);
  const PrecisionContext inner = floored(ctx).widened(5);
  const EllipticPair e = nome_to_modulus(q, inner);
  const BigReal pi = const_pi(inner.precision());
  return (e.E * e.K / (pi * pi)).rounded(ctx.precision());
}

ThetaMomentResult theta_moment(const BigReal& q, ThetaOffset offset, int order,
                               const PrecisionContext& ctx) {
  ThetaMomentResult r;
  r.q = q.rounded(ctx.precision());
  r.offset = offset;
  r.order = order;
  r.direct_value = theta_moment_sum(q, offset, order, ctx);
  const PrecisionContext inner = floored(ctx).widened(5);
  r.elliptic = nome_to_modulus(q, inner);
  if (offset == ThetaOffset::Zero) {
    const BigReal t3 = theta3(q, inner);
    if (order == 0) r.exact_value = t3;
    if (order == 2) r.exact_value = t3 * second_moment_ratio_exact(q, inner);
    if (order == 4) r.exact_value = t3 * fourth_moment_ratio_exact(q, inner);
  } else {
    const BigReal t2 = theta2(q, inner);
    if (order == 0) r.exact_value = t2;
    if (order == 2) r.exact_value = t2 * theta2_second_moment_ratio_exact(q, inner);
  }
  if (r.exact_value) r.exact_value = r.exact_value->rounded(ctx.precision());
  return r;
}

UnitVarianceSolution solve_unit_variance(const PrecisionContext& ctx) {
  const PrecisionContext inner = floored(ctx).widened(5);
  const Precision prec = inner.precision();
  const BigReal pi = const_pi(prec);
  auto residual = [&](const BigReal& log_kp) {
    const EllipticPair e = modulus_from_complement(exp(log_kp), inner);
    return sigma2_from(e, pi) - 1L;
  };
  // sigma^2 grows as k' shrinks (q -> 1); bracket k' in [1e-12, 0.5].
  BigReal lo = log(BigReal(1e-12, prec));
  BigReal hi = log(BigReal(0.5, prec));
  BigReal r_lo = residual(lo);
  BigReal r_hi = residual(hi);
  if (r_lo.sign() * r_hi.sign() >= 0) {
    throw ConvergenceError("solve_unit_variance_c: root not bracketed");
  }
  const BigReal tol = pow10(-(inner.working_digits() - 2), prec);
  // Bisection to a few digits, then secant (Illinois) for the rest.
  for (int it = 0; it < 20; ++it) {
    BigReal mid = (lo + hi) / 2L;
    BigReal r = residual(mid);
    if (r.sign() == r_lo.sign()) { lo = mid; r_lo = r; } else { hi = mid; r_hi = r; }
  }
  int side = 0;
  for (int it = 0; it < 500; ++it) {
    BigReal x = (lo * r_hi - hi * r_lo) / (r_hi - r_lo);
    BigReal r = residual(x);
    if (r.is_zero() || abs(hi - lo) < tol * abs(x)) { lo = hi = x; break; }
    if (r.sign() == r_lo.sign()) {
      lo = x; r_lo = r;
      if (side == -1) r_hi /= 2L;
      side = -1;
    } else {
      hi = x; r_hi = r;
      if (side == 1) r_lo /= 2L;
      side = 1;
    }
    if (abs(hi - lo) < tol * abs(x)) { lo = hi = x; break; }
    if (it == 499) throw ConvergenceError("solve_unit_variance_c: no convergence");
  }
  const EllipticPair e = modulus_from_complement(exp(lo), inner);
  UnitVarianceSolution s;
  s.c = (pi * e.K_prime / e.K).rounded(ctx.precision());
  s.k = e.k.rounded(ctx.precision());
  s.k_prime = e.k_prime.rounded(ctx.precision());
  s.residual = (sigma2_from(e, pi) - 1L).rounded(ctx.precision());
  return s;
}

BigReal solve_unit_variance_c(const PrecisionContext& ctx) {
  return solve_unit_variance(ctx).c;
}

}  // namespace zoo
