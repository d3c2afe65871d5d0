#include "zoo/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "zoo/specfun.hpp"

namespace zoo {

namespace {

void check_student_args(const BigReal& a, const BigReal& lambda) {
  if (!(a.sign() > 0)) throw DomainError("lattice sums need a > 0");
  if (!(lambda > BigReal(0.5, lambda.precision()))) {
    throw DomainError("Student lattice sums need lambda > 1/2");
  }
  if (lambda > BigReal(kMaxLambda, lambda.precision())) {
    throw DomainError("lambda above 1e7 is outside the supported range");
  }
}

// B(z; p, 1/2) = z^p sum_n (1/2)_n/n! z^n/(p+n), for small z.
BigReal incomplete_beta_half(const BigReal& z, const BigReal& p,
                             const BigReal& eps) {
  const Precision prec = z.precision();
  BigReal coeff(1L, prec);  // (1/2)_n / n!
  BigReal zn(1L, prec);
  BigReal sum(0L, prec);
  for (long n = 0;; ++n) {
    BigReal term = coeff * zn / (p + n);
    sum += term;
    if (abs(term) < eps * abs(sum)) break;
    coeff *= BigReal(n + 0.5, prec);
    coeff /= n + 1;
    zn *= z;
  }
  return pow(z, p) * sum;
}

}  // namespace

SeriesSum student_lattice_sum_detail(const BigReal& a, const BigReal& lambda,
                                     const PrecisionContext& ctx) {
  check_student_args(a, lambda);
  const long digits = ctx.working_digits() + 10;
  const Precision prec = Precision::from_digits(digits);
  const BigReal aa = a.rounded(prec);
  const BigReal lam = lambda.rounded(prec);
  const BigReal eps = pow10(-(ctx.out_digits + 10), prec);

  // The Euler-Maclaurin terms behave like (2j)!/(2 pi m)^(2j); their minimum
  // exp(-2 pi m) must sit below the target.
  const double m_em = std::ceil(0.4 * (digits + 10));
  const double m_scale = std::ceil(10.0 * a.to_double());
  const long m = static_cast<long>(std::max(m_em, m_scale));
  if (m > (ctx.max_terms - 1) / 2) {
    throw TermCapExceeded("student_lattice_sum: need |n| <= " +
                          std::to_string(m) + " terms, above max_terms");
  }

  const BigReal inv_a2 = 1L / (aa * aa);
  auto f = [&](long n) {
    BigReal x = BigReal(n, prec);
    return pow(1L + x * x * inv_a2, -lam);
  };

  BigReal direct(1L, prec);
  for (long n = 1; n <= m; ++n) direct += f(n) * 2L;

  // Tail sum_{n>m} f(n) = int_m^inf f - f(m)/2 - sum_j B_2j/(2j)! f^(2j-1)(m).
  const BigReal mm(m, prec);
  const BigReal ratio = mm / aa;
  const BigReal s0 = 1L / (1L + ratio * ratio);
  const BigReal half(0.5, prec);
  BigReal tail = aa * incomplete_beta_half(s0, lam - half, eps) / 2L;
  const BigReal fm = f(m);
  tail -= fm / 2L;

  // Taylor coefficients of (g0 + g1 h + g2 h^2)^(-lambda) about h = 0.
  const BigReal g0 = 1L + ratio * ratio;
  const BigReal g1 = mm * 2L * inv_a2;
  const BigReal g2 = inv_a2;
  const BigReal alpha_plus_1 = 1L - lam;
  std::vector<BigReal> taylor{fm};
  auto next_coefficient = [&]() {
    const long k = static_cast<long>(taylor.size());
    BigReal acc = (alpha_plus_1 - k) * g1 * taylor[k - 1];
    if (k >= 2) acc += (alpha_plus_1 * 2L - k) * g2 * taylor[k - 2];
    taylor.push_back(acc / (g0 * k));
  };

  const BigReal scale = abs(direct);
  BigReal last(0L, prec);
  BigReal prev_mag;
  bool have_prev = false;
  long em_terms = 0;
  for (std::size_t j = 1;; ++j) {
    while (taylor.size() < 2 * j) next_coefficient();
    BigReal term = BigReal(bernoulli_b2n(j), prec) * taylor[2 * j - 1] /
                   static_cast<long>(2 * j);
    BigReal mag = abs(term);
    ++em_terms;
    if (mag < eps * scale) {
      last = mag;
      break;
    }
    if (have_prev && mag > prev_mag) {
      throw ConvergenceError("student_lattice_sum: Euler-Maclaurin terms grew");
    }
    tail -= term;
    prev_mag = mag;
    have_prev = true;
  }

  SeriesSum out;
  out.value = ((direct + tail * 2L) / aa).rounded(ctx.precision());
  out.terms_used = m + 1 + em_terms;
  out.tail_bound = (last * 2L / aa).rounded(ctx.precision());
  return out;
}

BigReal student_lattice_sum(const BigReal& a, const BigReal& lambda,
                            const PrecisionContext& ctx) {
  return student_lattice_sum_detail(a, lambda, ctx).value;
}

BigReal dual_correction(const BigReal& a, const BigReal& lambda,
                        const PrecisionContext& ctx, bool force_integral,
                        long* terms_used) {
  check_student_args(a, lambda);
  const PrecisionContext inner = ctx.widened(5);
  const Precision prec = inner.precision();
  const BigReal aa = a.rounded(prec);
  const BigReal lam = lambda.rounded(prec);
  const BigReal nu = lam - BigReal(0.5, prec);
  const BigReal two_pi_a = const_pi(prec) * aa * 2L;
  const BigReal eps = pow10(-(inner.working_digits() + 5), prec);

  BigReal sum(0L, prec);
  long n = 1;
  for (;; ++n) {
    const BigReal x = two_pi_a * n;
    BigReal scaled = force_integral
                         ? bessel_k_integral(nu, x, inner) * exp(x) * pow(x, nu)
                         : bessel_k_scaled_power(nu, x, inner);
    BigReal term = scaled * exp(-x);
    sum += term;
    // Successive terms shrink by at least exp(-2 pi a) <= exp(-2 pi) per step
    // once past the peak of x^nu exp(-x).
    if (x > nu && term < eps * sum) break;
    if (n > ctx.max_terms) throw TermCapExceeded("dual_correction: too many terms");
  }
  if (terms_used) *terms_used = n;
  const BigReal c = pow(BigReal(2L, prec), BigReal(1.5, prec) - lam) *
                    sqrt(const_pi(prec)) / gamma(lam, inner);
  return (c * sum * 2L).rounded(ctx.precision());
}

BigReal dual_bessel_sum(const BigReal& a, const BigReal& lambda,
                        const PrecisionContext& ctx) {
  const PrecisionContext inner = ctx.widened(5);
  const Precision prec = inner.precision();
  const BigReal half(0.5, prec);
  BigReal target = beta(half, lambda.rounded(prec) - half, inner);
  return (target + dual_correction(a, lambda, inner)).rounded(ctx.precision());
}

LatticeSumResult evaluate_lattice(const BigReal& a, const BigReal& lambda,
                                  const PrecisionContext& ctx) {
  check_student_args(a, lambda);
  const Precision prec = ctx.precision();
  const BigReal half(0.5, prec);
  LatticeSumResult out;
  out.scale_a = a.rounded(prec);
  out.lambda = lambda.rounded(prec);
  out.beta_target = beta(half, out.lambda - half, ctx);
  long dual_terms = 0;
  out.dual_correction = dual_correction(a, lambda, ctx, false, &dual_terms);
  try {
    SeriesSum primal = student_lattice_sum_detail(a, lambda, ctx);
    out.primal_sum = primal.value;
    out.terms_used = primal.terms_used;
    out.method = "primal-euler-maclaurin";
  } catch (const TermCapExceeded&) {
    out.primal_sum = out.beta_target + out.dual_correction;
    out.terms_used = dual_terms;
    out.method = "dual-bessel";
  }
  return out;
}

BigReal gaussian_lattice_sum(const BigReal& a, const PrecisionContext& ctx) {
  if (!(a.sign() > 0)) throw DomainError("lattice sums need a > 0");
  const PrecisionContext inner = ctx.widened(5);
  const Precision prec = inner.precision();
  const BigReal aa = a.rounded(prec);
  const BigReal inv_a2 = 1L / (aa * aa);
  auto term = [&](long i) {
    if (i == 0) return BigReal(1L, prec);
    BigReal n(i, prec);
    return exp(-(n * n * inv_a2)) * 2L;
  };
  // Both-sided tail beyond m: 2 int_m^inf e^{-x^2/a^2} dx <= (a^2/m) e^{-m^2/a^2}.
  auto tail = [&](long m) {
    if (m == 0) return BigReal(aa * aa * 1000L);
    BigReal mm(m, prec);
    return aa * aa / mm * exp(-(mm * mm * inv_a2));
  };
  SeriesSum s = sum_series(term, tail, inner);
  return (s.value / aa).rounded(ctx.precision());
}

BigReal gaussian_dual_excess(const BigReal& a, const PrecisionContext& ctx) {
  if (!(a.sign() > 0)) throw DomainError("lattice sums need a > 0");
  const double ad = a.to_double();
  const long mag = static_cast<long>(std::ceil(std::log10(std::max(10.0, M_PI * M_PI * ad * ad))));
  const Precision prec = Precision::from_digits(ctx.working_digits() + mag + 5);
  const BigReal pi = const_pi(prec);
  const BigReal base = pi * pi * a.rounded(prec) * a.rounded(prec);
  const BigReal eps = pow10(-(ctx.working_digits() + 5), prec);
  BigReal sum(0L, prec);
  for (long n = 1;; ++n) {
    BigReal term = exp(-(base * (n * n)));
    sum += term;
    if (term < eps * sum) break;
  }
  return (sqrt(pi) * sum * 2L).rounded(ctx.precision());
}

BigReal lambda_star(const BigReal& a, const PrecisionContext& ctx) {
  if (a < 1L) throw DomainError("lambda_star needs a >= 1");
  const PrecisionContext inner = ctx.widened(5);
  const Precision prec = inner.precision();
  const BigReal pi = const_pi(prec);
  const BigReal target = log(pi * a.rounded(prec));
  auto f = [&](const BigReal& x) { return digamma(x, inner) - target; };
  BigReal lo(1L, prec);
  BigReal hi = pi * a.rounded(prec) * 10L;
  if (!(f(lo).sign() < 0) || !(f(hi).sign() > 0)) {
    throw ConvergenceError("lambda_star: root not bracketed in [1, 10 pi a]");
  }
  // psi(x) ~ log(x - 1/2): good starting point, then safeguarded Newton with
  // the asymptotic trigamma as slope.
  BigReal x = pi * a.rounded(prec) + BigReal(0.5, prec);
  if (!(x < hi)) x = (lo + hi) / 2L;
  const BigReal tol = pow10(-(inner.working_digits()), prec);
  for (int it = 0; it < 400; ++it) {
    BigReal fx = f(x);
    if (fx.sign() < 0) lo = x; else hi = x;
    BigReal x2 = x * x;
    BigReal slope = 1L / x + 1L / (x2 * 2L) + 1L / (x2 * x * 6L);
    BigReal next = x - fx / slope;
    if (!(next > lo && next < hi)) next = (lo + hi) / 2L;
    if (abs(next - x) < tol * x) return next.rounded(ctx.precision());
    x = std::move(next);
  }
  throw ConvergenceError("lambda_star: no convergence");
}

BigReal worst_case_error(const BigReal& a, const PrecisionContext& ctx) {
  if (!(a.sign() > 0)) throw DomainError("worst_case_error needs a > 0");
  const double ad = a.to_double();
  const long mag = static_cast<long>(std::ceil(std::log10(std::max(10.0, M_PI * ad))));
  const Precision prec = Precision::from_digits(ctx.working_digits() + mag + 5);
  const BigReal aa = a.rounded(prec);
  return (sqrt(BigReal(2L, prec) / aa) * exp(-(const_pi(prec) * aa)))
      .rounded(ctx.precision());
}

}  // namespace zoo
