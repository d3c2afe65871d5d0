#include "zoo/specfun.hpp"

#include <algorithm>
#include <cmath>

namespace zoo {

namespace {

constexpr double kLn10 = 2.302585092994045684017991454684;
constexpr double kLog10E = 0.434294481903251827651128918917;

// Working precision widened by `extra` decimal digits.
Precision widen(const PrecisionContext& ctx, long extra) {
  return Precision::from_digits(ctx.working_digits() + extra);
}

BigReal tiny(long digits, Precision prec) { return pow10(-digits, prec); }

// Digits needed in front of the decimal point to hold |v| (>= 0).
long magnitude_digits(double v) {
  v = std::fabs(v);
  return v < 10.0 ? 1 : static_cast<long>(std::ceil(std::log10(v))) + 1;
}

// ln Gamma(z) for z > 0 to absolute accuracy 10^-digits, computed at `prec`.
BigReal log_gamma_abs(const BigReal& x, long digits, Precision prec) {
  const BigReal eps = tiny(digits + 5, prec);
  // Stirling terms shrink to ~exp(-2 pi z); shift z until that is small enough.
  const double z_min = (digits + 5) / 2.5 + 5.0;
  BigReal z = x.rounded(prec);
  BigReal shift_product(1L, prec);
  long shifts = 0;
  while (z.to_double() < z_min) {
    shift_product *= z;
    z += 1L;
    ++shifts;
  }
  const BigReal half_log_2pi = log(const_pi(prec) * 2L) / 2L;
  BigReal lg = (z - BigReal(0.5, prec)) * log(z) - z + half_log_2pi;
  const BigReal z2 = z * z;
  BigReal zpow = z;  // z^(2j-1)
  for (std::size_t j = 1;; ++j) {
    BigReal t = BigReal(bernoulli_b2n(j), prec) /
                (zpow * static_cast<long>((2 * j) * (2 * j - 1)));
    lg += t;
    if (abs(t) < eps) break;
    if (j > 4000) throw ConvergenceError("log_gamma: Stirling series stalled");
    zpow *= z2;
  }
  if (shifts > 0) lg -= log(shift_product);
  return lg;
}

BigReal log_gamma_checked(const BigReal& x, const PrecisionContext& ctx,
                          long extra_digits) {
  if (x.sign() <= 0) throw DomainError("gamma family requires x > 0");
  const double xd = x.to_double();
  const long mag = magnitude_digits(xd * std::log(std::max(xd, 2.0)));
  const long digits = ctx.working_digits() + extra_digits + mag;
  return log_gamma_abs(x, digits, Precision::from_digits(digits + 10));
}

// x^nu e^x K_nu(x) for nu = n + 1/2: sqrt(pi x/2) x^n sum (n+j)!/(j!(n-j)!(2x)^j).
BigReal k_half_integer_scaled_power(long n, const BigReal& nu,
                                    const BigReal& x, Precision prec) {
  BigReal sum(0L, prec);
  const BigReal two_x = x * 2L;
  BigReal inv_pow(1L, prec);
  for (long j = 0; j <= n; ++j) {
    BigInt c = factorial(static_cast<unsigned long>(n + j)) /
               (factorial(static_cast<unsigned long>(j)) *
                factorial(static_cast<unsigned long>(n - j)));
    sum += BigReal(c, prec) * inv_pow;
    inv_pow /= two_x;
  }
  return sqrt(const_pi(prec) / (two_x)) * pow(x, nu) * sum;
}

// Returns n when 2 nu is an odd integer (nu = n + 1/2), otherwise -1.
long half_integer_index(const BigReal& nu) {
  BigReal twice = nu * 2L;
  if (!mpfr_integer_p(twice.get())) return -1;
  const long t = twice.to_long();
  if (t < 1 || t % 2 == 0) return -1;
  return (t - 1) / 2;
}

// Trapezoidal rule for int_0^inf exp(-x (cosh t - 1)) cosh(nu t) dt.
BigReal k_integral_scaled(const BigReal& nu, const BigReal& x,
                          const PrecisionContext& ctx, int density) {
  const long digits = ctx.working_digits() + 10;
  const Precision prec = Precision::from_digits(digits + 5);
  const double xd = x.to_double();
  const double nud = nu.to_double();
  const double target = digits * kLn10;
  // Strip-width analysis: the discretisation error behaves like
  // exp(-2 pi d / h) with the integrand growing like exp(x d^2 / 2) inside
  // the strip, which caps the usable half-width d for large x.
  double h = std::min(M_PI * M_PI / target, M_PI * std::sqrt(2.0 / (xd * target)));
  h /= std::max(density, 1);
  // Exponent of the integrand, f(t) = nu t - x (cosh t - 1); peak and cut-off.
  auto expo = [&](double t) { return nud * t - xd * (std::cosh(t) - 1.0); };
  const double t_peak = std::asinh(nud / xd);
  const double peak = expo(t_peak);
  double t_max = std::max(t_peak, 1e-3);
  while (expo(t_max) > peak - target - 5.0) t_max *= 1.25;
  const long nodes = static_cast<long>(std::ceil(t_max / h)) + 1;

  const BigReal hh(h, prec);
  const BigReal xx = x.rounded(prec);
  const BigReal nn = nu.rounded(prec);
  BigReal sum(0L, prec);
  for (long i = 1; i <= nodes; ++i) {
    BigReal t = hh * i;
    sum += exp(-(xx * (cosh(t) - 1L))) * cosh(nn * t);
  }
  sum += BigReal(0.5, prec);  // f(0) / 2
  return sum * hh;
}

// P and Q of the Hankel expansion of J0; stops at the first term below eps.
void hankel_pq(const BigReal& x, const BigReal& eps, BigReal& p, BigReal& q) {
  const Precision prec = x.precision();
  p = BigReal(1L, prec);
  q = BigReal(0L, prec);
  BigReal term(1L, prec);  // a_k / x^k
  BigReal prev_abs = term;
  for (long k = 1;; ++k) {
    // a_k = a_{k-1} (2k-1)^2 / (8k)
    term *= (2 * k - 1) * (2 * k - 1);
    term /= 8 * k;
    term /= x;
    BigReal mag = abs(term);
    if (mag > prev_abs) {
      throw ConvergenceError("bessel_j0: asymptotic series diverged before "
                             "reaching the requested accuracy");
    }
    prev_abs = mag;
    // i^k (-1)^k a_k / x^k: even k feeds P with sign (-1)^(k/2), odd k feeds
    // Q with the opposite sign (Q ~ -1/(8x)).
    const long r = k % 4;
    if (r == 0) p += term;
    if (r == 2) p -= term;
    if (r == 1) q -= term;
    if (r == 3) q += term;
    if (mag < eps) break;
  }
}

}  // namespace

// ------------------------------------------------------------------ gamma

BigReal log_gamma(const BigReal& x, const PrecisionContext& ctx) {
  return log_gamma_checked(x, ctx, 5).rounded(ctx.precision());
}

BigReal gamma(const BigReal& x, const PrecisionContext& ctx) {
  return exp(log_gamma_checked(x, ctx, 5)).rounded(ctx.precision());
}

BigReal digamma(const BigReal& x, const PrecisionContext& ctx) {
  if (x.sign() <= 0) throw DomainError("digamma requires x > 0");
  const long digits = ctx.working_digits() + 10;
  const Precision prec = Precision::from_digits(digits + 5);
  const BigReal eps = tiny(digits + 5, prec);
  const double z_min = (digits + 5) / 2.5 + 5.0;
  BigReal z = x.rounded(prec);
  BigReal recurrence(0L, prec);
  while (z.to_double() < z_min) {
    recurrence += 1L / z;
    z += 1L;
  }
  BigReal psi = log(z) - 1L / (z * 2L);
  const BigReal z2 = z * z;
  BigReal zpow = z2;
  for (std::size_t j = 1;; ++j) {
    BigReal t = BigReal(bernoulli_b2n(j), prec) / (zpow * static_cast<long>(2 * j));
    psi -= t;
    if (abs(t) < eps * max(abs(psi), BigReal(1L, prec))) break;
    if (j > 4000) throw ConvergenceError("digamma: asymptotic series stalled");
    zpow *= z2;
  }
  return (psi - recurrence).rounded(ctx.precision());
}

BigReal beta(const BigReal& a, const BigReal& b, const PrecisionContext& ctx) {
  if (a.sign() <= 0 || b.sign() <= 0) throw DomainError("beta requires a, b > 0");
  const BigReal s = a + b;
  BigReal l = log_gamma_checked(a, ctx, 5) + log_gamma_checked(b, ctx, 5) -
              log_gamma_checked(s, ctx, 5);
  return exp(l).rounded(ctx.precision());
}

// ------------------------------------------------------------------ Bessel

double bessel_j0_switchover(const PrecisionContext& ctx) {
  // The smallest Hankel term is about exp(-2x).
  return 1.2 * static_cast<double>(ctx.working_digits() + 5) + 5.0;
}

BigReal bessel_j0(const BigReal& x, const PrecisionContext& ctx) {
  const double ax = std::fabs(x.to_double());
  if (ax > 1e6) throw RangeError("bessel_j0: |x| > 1e6 is not supported");
  const long digits = ctx.working_digits() + 5;
  if (ax < bessel_j0_switchover(ctx)) {
    // Terms grow to about e^|x| before cancelling.
    const long guard = static_cast<long>(std::ceil(ax * kLog10E)) + 5;
    const Precision prec = Precision::from_digits(digits + guard);
    const BigReal eps = tiny(digits + 5, prec);
    const BigReal y = x.rounded(prec) * x.rounded(prec) / 4L;
    BigReal term(1L, prec);
    BigReal sum(1L, prec);
    for (long k = 1;; ++k) {
      term *= y;
      term /= k * k;
      term = -term;
      sum += term;
      if (k > ax && abs(term) < eps) break;
    }
    return sum.rounded(ctx.precision());
  }
  const Precision prec =
      Precision::from_digits(digits + magnitude_digits(ax) + 5);
  const BigReal xx = abs(x.rounded(prec));
  BigReal p, q;
  hankel_pq(xx, tiny(digits + 2, prec), p, q);
  BigReal s(0L, prec), c(0L, prec);
  mpfr_sin_cos(s.get(), c.get(), xx.get(), MPFR_RNDN);
  // cos(x - pi/4) = (cos x + sin x)/sqrt 2, sin(x - pi/4) = (sin x - cos x)/sqrt 2
  const BigReal cos_chi = c + s;
  const BigReal sin_chi = s - c;
  BigReal value = (p * cos_chi - q * sin_chi) / sqrt(const_pi(prec) * xx);
  return value.rounded(ctx.precision());
}

BigReal bessel_k_integral(const BigReal& nu, const BigReal& x,
                          const PrecisionContext& ctx, int density) {
  if (x < 1L) throw DomainError("bessel_k: only x >= 1 is supported");
  if (nu.sign() < 0) throw DomainError("bessel_k: nu must be >= 0");
  const Precision prec = widen(ctx, 10);
  BigReal scaled = k_integral_scaled(nu, x, ctx, density);
  return (scaled * exp(-x.rounded(prec))).rounded(ctx.precision());
}

BigReal bessel_k(const BigReal& nu, const BigReal& x,
                 const PrecisionContext& ctx) {
  if (x < 1L) throw DomainError("bessel_k: only x >= 1 is supported");
  if (nu.sign() < 0) throw DomainError("bessel_k: nu must be >= 0");
  const long n = half_integer_index(nu);
  if (n < 0) return bessel_k_integral(nu, x, ctx);
  const Precision prec = widen(ctx, 10);
  const BigReal xx = x.rounded(prec);
  BigReal v = k_half_integer_scaled_power(n, nu.rounded(prec), xx, prec);
  return (v * exp(-xx) / pow(xx, nu.rounded(prec))).rounded(ctx.precision());
}

BigReal bessel_k_scaled_power(const BigReal& nu, const BigReal& x,
                              const PrecisionContext& ctx) {
  if (x < 1L) throw DomainError("bessel_k: only x >= 1 is supported");
  if (nu.sign() < 0) throw DomainError("bessel_k: nu must be >= 0");
  const Precision prec = widen(ctx, 10);
  const BigReal xx = x.rounded(prec);
  const BigReal nn = nu.rounded(prec);
  const long n = half_integer_index(nu);
  if (n >= 0) {
    return k_half_integer_scaled_power(n, nn, xx, prec).rounded(ctx.precision());
  }
  BigReal v = k_integral_scaled(nn, xx, ctx, 1) * pow(xx, nn);
  return v.rounded(ctx.precision());
}

// --------------------------------------------------------- elliptic / AGM

namespace {

// AGM of (a, b) plus the weighted sum sum_{n>=0} 2^(n-1) c_n^2 where
// c_0 = c0 and c_{n+1} = (a_n - b_n)/2.
struct AgmRun {
  BigReal mean;
  BigReal c_sum;
};

AgmRun agm_run(BigReal a, BigReal b, const BigReal& c0, Precision prec) {
  // a few ulps: |a - b| can stall at rounding level
  const BigReal eps = pow10(-(prec.digits() - 2), prec);
  BigReal weight(0.5, prec);
  BigReal c_sum = weight * c0 * c0;
  for (int it = 0; it < 200; ++it) {
    BigReal c = (a - b) / 2L;
    weight *= 2L;
    c_sum += weight * c * c;
    if (abs(c) <= eps * abs(a)) return {a, c_sum};
    BigReal next_a = (a + b) / 2L;
    b = sqrt(a * b);
    a = std::move(next_a);
  }
  throw ConvergenceError("agm: no convergence in 200 iterations");
}

void check_modulus(const BigReal& k) {
  if (k.sign() < 0 || !(k < 1L)) {
    throw DomainError("elliptic integrals need 0 <= k < 1");
  }
}

}  // namespace

BigReal agm(const BigReal& a, const BigReal& b, const PrecisionContext& ctx) {
  if (a.sign() <= 0 || b.sign() <= 0) throw DomainError("agm requires a, b > 0");
  const Precision prec = widen(ctx, 5);
  return agm_run(a.rounded(prec), b.rounded(prec), BigReal(0L, prec), prec)
      .mean.rounded(ctx.precision());
}

namespace {

BigReal k_from_complement(const BigReal& complement, Precision prec) {
  BigReal m = agm_run(BigReal(1L, prec), complement, BigReal(0L, prec), prec).mean;
  return const_pi(prec) / (m * 2L);
}

// E of `modulus`, whose complementary modulus is `complement`; both supplied
// so neither is recomputed through a cancelling sqrt(1 - x^2).
BigReal e_from_pair(const BigReal& modulus, const BigReal& complement,
                    Precision prec) {
  AgmRun run = agm_run(BigReal(1L, prec), complement, modulus, prec);
  BigReal K = const_pi(prec) / (run.mean * 2L);
  return K * (1L - run.c_sum);
}

void check_complement(const BigReal& k_prime) {
  if (!(k_prime.sign() > 0) || k_prime > 1L) {
    throw DomainError("elliptic integrals need 0 < k' <= 1");
  }
}

}  // namespace

BigReal elliptic_K_from_complement(const BigReal& k_prime,
                                   const PrecisionContext& ctx) {
  check_complement(k_prime);
  const Precision prec = widen(ctx, 5);
  return k_from_complement(k_prime.rounded(prec), prec).rounded(ctx.precision());
}

BigReal elliptic_E_from_complement(const BigReal& k_prime,
                                   const PrecisionContext& ctx) {
  check_complement(k_prime);
  const Precision prec = widen(ctx, 5);
  const BigReal kp = k_prime.rounded(prec);
  const BigReal k = sqrt((1L - kp) * (1L + kp));
  return e_from_pair(k, kp, prec).rounded(ctx.precision());
}

BigReal elliptic_K(const BigReal& k, const PrecisionContext& ctx) {
  check_modulus(k);
  const Precision prec = widen(ctx, 5);
  if (k.is_zero()) return (const_pi(prec) / 2L).rounded(ctx.precision());
  const BigReal kk = k.rounded(prec);
  return elliptic_K_from_complement(sqrt((1L - kk) * (1L + kk)), ctx);
}

BigReal elliptic_E(const BigReal& k, const PrecisionContext& ctx) {
  check_modulus(k);
  const Precision prec = widen(ctx, 5);
  if (k.is_zero()) return (const_pi(prec) / 2L).rounded(ctx.precision());
  const BigReal kk = k.rounded(prec);
  return elliptic_E_from_complement(sqrt((1L - kk) * (1L + kk)), ctx);
}

// ------------------------------------------------------------------ theta

namespace {

void check_nome(const BigReal& q) {
  if (!(q.sign() > 0) || !(q < 1L)) throw DomainError("nome q must lie in (0, 1)");
}

// sum_{n>=1} s^n q^(n^2) with s = +1 or -1.
BigReal theta_tail(const BigReal& q, int s, Precision prec, const BigReal& eps) {
  BigReal sum(0L, prec);
  const BigReal q2 = q * q;
  BigReal ratio = q;  // q^(2n-1)
  BigReal term = q;   // q^(n^2)
  for (long n = 1;; ++n) {
    sum += (s < 0 && n % 2 == 1) ? -term : term;
    if (term < eps) break;
    ratio *= q2;
    term *= ratio;
  }
  return sum;
}

}  // namespace

BigReal theta3(const BigReal& q, const PrecisionContext& ctx) {
  check_nome(q);
  const Precision prec = widen(ctx, 5);
  const BigReal eps = tiny(ctx.working_digits() + 5, prec);
  return (1L + theta_tail(q.rounded(prec), 1, prec, eps) * 2L).rounded(ctx.precision());
}

BigReal theta4(const BigReal& q, const PrecisionContext& ctx) {
  check_nome(q);
  const Precision prec = widen(ctx, 5);
  const BigReal eps = tiny(ctx.working_digits() + 5, prec);
  return (1L + theta_tail(q.rounded(prec), -1, prec, eps) * 2L).rounded(ctx.precision());
}

BigReal theta2(const BigReal& q, const PrecisionContext& ctx) {
  check_nome(q);
  const Precision prec = widen(ctx, 5);
  const BigReal eps = tiny(ctx.working_digits() + 5, prec);
  const BigReal qq = q.rounded(prec);
  // 2 q^(1/4) sum_{n>=0} q^(n(n+1))
  BigReal sum(1L, prec);
  BigReal term(1L, prec);
  const BigReal q2 = qq * qq;
  BigReal ratio(1L, prec);  // q^(2n)
  for (long n = 1;; ++n) {
    ratio *= q2;
    term *= ratio;
    sum += term;
    if (term < eps * sum) break;
  }
  return (sqrt(sqrt(qq)) * sum * 2L).rounded(ctx.precision());
}

BigReal EllipticPair::legendre_residual() const {
  const Precision prec = K.precision();
  return E * K_prime + E_prime * K - K * K_prime - const_pi(prec) / 2L;
}

namespace {

EllipticPair pair_from(const BigReal& k, const BigReal& kp,
                       const PrecisionContext& ctx) {
  const Precision prec = widen(ctx, 5);
  const Precision out = ctx.precision();
  return EllipticPair{k.rounded(out),
                      kp.rounded(out),
                      k_from_complement(kp, prec).rounded(out),
                      k_from_complement(k, prec).rounded(out),
                      e_from_pair(k, kp, prec).rounded(out),
                      e_from_pair(kp, k, prec).rounded(out)};
}

}  // namespace

EllipticPair modulus_from_complement(const BigReal& k_prime,
                                     const PrecisionContext& ctx) {
  check_complement(k_prime);
  const Precision prec = widen(ctx, 5);
  const BigReal kp = k_prime.rounded(prec);
  return pair_from(sqrt((1L - kp) * (1L + kp)), kp, ctx);
}

EllipticPair nome_to_modulus(const BigReal& q, const PrecisionContext& ctx) {
  check_nome(q);
  const PrecisionContext inner = ctx.widened(5);
  const BigReal t2 = theta2(q, inner);
  const BigReal t3 = theta3(q, inner);
  const BigReal t4 = theta4(q, inner);
  const BigReal r2 = t2 / t3;
  const BigReal r4 = t4 / t3;
  return pair_from(r2 * r2, r4 * r4, ctx);
}

BigReal sinc(const BigReal& x, const PrecisionContext& ctx) {
  const BigReal xx = x.rounded(ctx.precision());
  if (xx.is_zero()) return BigReal(1L, ctx.precision());
  return sin(xx) / xx;
}

}  // namespace zoo
