#include "zoo/borwein_integral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <random>

#include "zoo/specfun.hpp"

namespace zoo {

IntegralSpec IntegralSpec::with_factors(BigRational a0, std::vector<BigRational> factors) {
  IntegralSpec s;
  s.a0 = std::move(a0);
  s.kinds.assign(factors.size(), Kernel::J0);
  s.factors = std::move(factors);
  if (!(s.a0 > 0)) throw DomainError("a0 must be positive");
  for (const auto& a : s.factors) {
    if (!(a > 0)) throw DomainError("factor scales must be positive");
  }
  return s;
}

BigRational IntegralSpec::factor_sum() const {
  BigRational s(0);
  for (const auto& a : factors) s += a;
  return s;
}

std::string IntegralSpec::label() const {
  std::string out = "a0=" + a0.get_str() + " {";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += ",";
    out += factors[i].get_str();
  }
  return out + "}";
}

IntegralSpec ladder_spec(int n) {
  std::vector<BigRational> f;
  for (int j = 1; j <= n; ++j) f.push_back(make_rational(1, 2 * j + 1));
  return IntegralSpec::with_factors(BigRational(1), std::move(f));
}

const char* to_string(Verdict v) {
  return v == Verdict::ExactPiOver2A0 ? "EXACT" : "DEFICIT";
}

Verdict threshold_verdict(const IntegralSpec& spec) {
  const BigRational s = spec.factor_sum();
  if (spec.a0 == s) throw BoundaryError("a0 equals the factor sum; no verdict");
  return spec.a0 > s ? Verdict::ExactPiOver2A0 : Verdict::Deficit;
}

namespace {

struct GaussRule {
  std::vector<BigReal> nodes;    // on [-1, 1]
  std::vector<BigReal> weights;
};

// Newton on P_n from the Chebyshev guesses.
GaussRule make_gauss(int n, Precision prec) {
  GaussRule r;
  const BigReal eps = pow10(-(prec.digits() - 3), prec);
  const BigReal pi = const_pi(prec);
  for (int i = 1; i <= n; ++i) {
    BigReal x = cos(pi * BigReal(4L * i - 1, prec) / BigReal(4L * n + 2, prec));
    BigReal dp;
    for (int it = 0; it < 100; ++it) {
      BigReal p0(1L, prec), p1 = x;
      for (int k = 2; k <= n; ++k) {
        BigReal p2 = (x * p1 * (2L * k - 1) - p0 * (k - 1)) / BigReal(k, prec);
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      dp = BigReal(n, prec) * (x * p1 - p0) / (x * x - 1L);
      BigReal step = p1 / dp;
      x -= step;
      if (abs(step) < eps) break;
    }
    r.nodes.push_back(x);
    r.weights.push_back(BigReal(2L, prec) / ((1L - x * x) * dp * dp));
  }
  return r;
}

const GaussRule& gauss_rule(int n, Precision prec) {
  static std::mutex mu;
  static std::map<std::pair<int, long>, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, prec.bits);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, make_gauss(n, prec)).first;
  return it->second;
}

// Smallest order with (pi/2)^{2G}/(2G)! below 10^-digits: the error of a
// G-point rule on a half-period of the fastest oscillation.
int gauss_order_for(long digits) {
  double log_err = 0;
  for (int g = 1; g < 200; ++g) {
    log_err += 2 * std::log10(M_PI / 2) - std::log10(2.0 * g * (2.0 * g - 1));
    if (log_err < -static_cast<double>(digits)) return std::max(g, 6);
  }
  return 200;
}

class Integrand {
 public:
  Integrand(const IntegralSpec& spec, const PrecisionContext& ctx)
      : ctx_(ctx), prec_(ctx.precision()), a0_(spec.a0, prec_) {
    for (const auto& a : spec.factors) a_.emplace_back(a, prec_);
  }

  BigReal operator()(const BigReal& z) const {
    BigReal v = sinc(a0_ * z, ctx_);
    for (const auto& a : a_) v *= bessel_j0(a * z, ctx_);
    return v;
  }

 private:
  PrecisionContext ctx_;
  Precision prec_;
  BigReal a0_;
  std::vector<BigReal> a_;
};

// Integral over [lo, lo + h].
BigReal segment(const Integrand& f, const GaussRule& rule, const BigReal& lo,
                const BigReal& h) {
  const BigReal half = h / 2L;
  const BigReal mid = lo + half;
  BigReal acc(0L, lo.precision());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return acc * half;
}

struct Cx {
  BigReal re, im;
  Cx operator*(const Cx& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Cx& operator+=(const Cx& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  BigReal norm() const { return sqrt(re * re + im * im); }
};

// Hankel: J0(x) = sqrt(2/(pi x)) Re[H(x) e^{i(x - pi/4)}], H = sum a_n (i/x)^n,
// a_n = prod_{l<=n} (-(2l-1)^2) / (n! 8^n).
std::vector<BigRational> hankel_coefficients(int count) {
  std::vector<BigRational> a{BigRational(1)};
  for (int n = 1; n < count; ++n) {
    a.push_back(-a.back() * (2 * n - 1) * (2 * n - 1) / (8 * n));
  }
  return a;
}

struct TailResult {
  BigReal value;
  double error = 0;
};

// int_Z^inf z^-p e^{i w z} dz = (i e^{i w Z}/w) Z^-p sum_k (p)_k (-i/(w Z))^k,
// summed while the asymptotic terms keep shrinking; `residual` gets the
// magnitude of the last term used.
Cx oscillatory_tail(const BigReal& p, const BigRational& w, const BigReal& z,
                    const BigReal& eps, double& residual) {
  const Precision prec = z.precision();
  if (w == 0) {
    residual = 0;
    return {pow(z, 1L - p) / (p - 1L), BigReal(0L, prec)};
  }
  const BigReal ww(w, prec);
  const BigReal wz = ww * z;
  Cx term{BigReal(1L, prec), BigReal(0L, prec)};
  Cx sum = term;
  BigReal mag(1L, prec);
  for (long k = 0;; ++k) {
    // multiply by (p+k) (-i) / (w Z)
    BigReal f = (p + k) / wz;
    Cx next{term.im * f, -(term.re * f)};
    BigReal next_mag = mag * abs(f);
    if (!(next_mag < mag)) break;
    term = std::move(next);
    mag = std::move(next_mag);
    sum += term;
    if (mag < eps) break;
  }
  residual = mag.to_double();
  BigReal s(0L, prec), c(0L, prec);
  mpfr_sin_cos(s.get(), c.get(), wz.get(), MPFR_RNDN);
  const BigReal scale = pow(z, -p) / ww;
  // i e^{i wZ} = (-sin, cos)
  const Cx lead{-(s * scale), c * scale};
  return lead * sum;
}

TailResult asymptotic_tail(const IntegralSpec& spec, const BigReal& z,
                           const PrecisionContext& ctx) {
  const Precision prec = z.precision();
  const int m = static_cast<int>(spec.factors.size());
  const BigReal pi = const_pi(prec);
  const BigReal eps = pow10(-(ctx.working_digits()), prec);

  std::vector<BigReal> a;
  BigReal c0 = 1L / BigReal(spec.a0, prec);
  double a_min = spec.a0.get_d();
  for (const auto& x : spec.factors) {
    a.emplace_back(x, prec);
    c0 *= sqrt(BigReal(2L, prec) / (pi * a.back()));
    a_min = std::min(a_min, x.get_d());
  }
  // Enough Hankel terms that the omitted one is below eps at x = a_min Z.
  const double x_min = a_min * z.to_double();
  const auto coeffs = hankel_coefficients(200);
  int terms = 1;
  double last_hankel = 1;
  for (; terms < 199 && terms < 2 * x_min; ++terms) {
    last_hankel = std::fabs(coeffs[terms].get_d()) * std::pow(x_min, -terms);
    if (last_hankel < eps.to_double()) break;
  }
  const int J = terms;  // series in 1/z kept to degree J - 1

  TailResult out{BigReal(0L, prec), 0};
  const BigReal quarter_pi = pi / 4L;
  const BigReal scale = c0 / BigReal(std::pow(2.0, m), prec) / 2L;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    // prod_k H_{s_k}(a_k z) as a series in 1/z.
    std::vector<Cx> b(J, Cx{BigReal(0L, prec), BigReal(0L, prec)});
    b[0].re = BigReal(1L, prec);
    BigRational w_bessel(0);
    int sign_sum = 0;
    for (int k = 0; k < m; ++k) {
      const int s = (mask >> k) & 1 ? -1 : 1;
      sign_sum += s;
      w_bessel += s * spec.factors[k];
      std::vector<Cx> f;
      BigReal inv_a_pow(1L, prec);
      for (int n = 0; n < J; ++n) {
        // a_n (s i / a_k)^n
        BigReal mag = BigReal(coeffs[n], prec) * inv_a_pow;
        const int r = ((n % 4) + 4) % 4;
        BigReal re = (r == 0) ? mag : (r == 2) ? -mag : BigReal(0L, prec);
        BigReal im = (r == 1) ? mag : (r == 3) ? -mag : BigReal(0L, prec);
        if (s < 0) im = -im;
        f.push_back({re, im});
        inv_a_pow /= a[k];
      }
      std::vector<Cx> next(J, Cx{BigReal(0L, prec), BigReal(0L, prec)});
      for (int i = 0; i < J; ++i)
        for (int j = 0; i + j < J; ++j) next[i + j] += b[i] * f[j];
      b = std::move(next);
    }
    BigReal ps(0L, prec), pc(0L, prec);
    const BigReal phase = -quarter_pi * static_cast<long>(sign_sum);
    mpfr_sin_cos(ps.get(), pc.get(), phase.get(), MPFR_RNDN);
    for (int s0 : {1, -1}) {
      // sin(a0 z) = (e^{i a0 z} - e^{-i a0 z})/(2i); 1/(2i) = -i/2
      const BigRational w = s0 * spec.a0 + w_bessel;
      const Cx pre = Cx{pc * scale, ps * scale} * Cx{BigReal(0L, prec), BigReal(-s0, prec)};
      for (int j = 0; j < J; ++j) {
        const BigReal p = BigReal(1L, prec) + BigReal(m, prec) / 2L + j;
        double residual = 0;
        Cx integral = oscillatory_tail(p, w, z, eps, residual);
        Cx t = pre * b[j] * integral;
        out.value += t.re;
        const double mag = (pre * b[j]).norm().to_double() *
                           std::pow(z.to_double(), -p.to_double());
        out.error += mag * residual / std::max(1e-300, std::fabs(w.get_d()));
        if (j == J - 1) out.error += t.norm().to_double();
      }
    }
  }
  return out;
}

double envelope_constant(const IntegralSpec& spec) {
  double prod = 1;
  for (const auto& a : spec.factors) prod *= a.get_d();
  return std::pow(0.8, static_cast<double>(spec.factors.size())) /
         (spec.a0.get_d() * std::sqrt(prod));
}

}  // namespace

QuadratureResult integral_estimate(const IntegralSpec& spec, double target_abs_tol,
                                   const PrecisionContext& ctx,
                                   const QuadratureOptions& opts) {
  if (!(target_abs_tol >= 1e-12)) throw DomainError("target_abs_tol must be >= 1e-12");
  const Precision prec = ctx.precision();
  const Integrand f(spec, ctx);
  const int m = static_cast<int>(spec.factors.size());
  const BigReal freq = BigReal(spec.a0 + spec.factor_sum(), prec);
  const BigReal h = const_pi(prec) / freq / static_cast<long>(opts.segment_split);
  const double hd = h.to_double();
  const int order = gauss_order_for(ctx.out_digits + 4) * opts.order_scale;
  const GaussRule& rule = gauss_rule(order, prec);

  QuadratureResult r;
  r.gauss_order = order;
  // Rule error per unit length (|f| <= 1) plus the roundoff floor.
  const double per_segment =
      std::pow(10.0, -(ctx.out_digits + 4)) * hd + std::pow(10.0, -(ctx.working_digits() - 2));

  BigReal acc(0L, prec);
  long done = 0;
  auto integrate_to = [&](long segments) {
    if (segments > ctx.max_terms) {
      throw TermCapExceeded("integral_estimate: " + std::to_string(segments) +
                            " segments needed");
    }
    for (; done < segments; ++done) acc += segment(f, rule, h * done, h);
  };

  if (opts.tail == TailMethod::Truncate) {
    if (m < 1) throw DomainError("truncation needs at least one Bessel factor");
    // |sinc(a0 z)| <= 1/(a0 z) and |J0(x)| <= 0.8/sqrt(x): the tail beyond Z
    // is at most C Z^{-m/2}/(m/2).
    const double c = envelope_constant(spec);
    const double half_m = m / 2.0;
    const double z_max = std::pow(c / (half_m * target_abs_tol / 2), 1.0 / half_m);
    integrate_to(static_cast<long>(std::ceil(z_max / hd)));
    r.z_max = done * hd;
    r.value = acc;
    r.segments_used = done;
    r.abs_error_estimate = BigReal(c * std::pow(r.z_max, -half_m) / half_m +
                                       per_segment * done, prec);
    r.tolerance_met = r.abs_error_estimate.to_double() <= target_abs_tol;
    return r;
  }

  // Start where x = a_k Z is comfortably asymptotic for every factor and the
  // slowest combined frequency has gone through many periods.
  double a_min = spec.a0.get_d();
  for (const auto& a : spec.factors) a_min = std::min(a_min, a.get_d());
  double w_min = 1e300;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    BigRational w = spec.a0;
    for (int k = 0; k < m; ++k) w += ((mask >> k) & 1 ? -1 : 1) * spec.factors[k];
    if (w != 0) w_min = std::min(w_min, std::fabs(w.get_d()));
  }
  double z_target = std::max({40.0 / a_min, 40.0 / w_min, 30.0});
  r.accelerated = true;
  for (int attempt = 0; attempt < 12; ++attempt) {
    integrate_to(static_cast<long>(std::ceil(z_target / hd)));
    const BigReal z = h * done;
    TailResult tail = asymptotic_tail(spec, z, ctx);
    r.value = acc + tail.value;
    r.segments_used = done;
    r.z_max = z.to_double();
    r.abs_error_estimate = BigReal(tail.error + per_segment * done, prec);
    r.tolerance_met = r.abs_error_estimate.to_double() <= target_abs_tol;
    if (tail.error <= target_abs_tol / 10) break;
    z_target *= 2;
  }
  return r;
}

DeficitResult deficit(const IntegralSpec& spec, double target_abs_tol,
                      const PrecisionContext& ctx) {
  if (threshold_verdict(spec) != Verdict::Deficit) {
    throw BoundaryError("deficit: a0 exceeds the factor sum, the integral is exact");
  }
  DeficitResult d;
  d.quadrature = integral_estimate(spec, target_abs_tol, ctx);
  const Precision prec = ctx.precision();
  const BigReal full = const_pi(prec) / (BigReal(spec.a0, prec) * 2L);
  d.deficit = full - d.quadrature.value;
  d.relative_deficit = d.deficit / full;
  d.abs_error_estimate = d.quadrature.abs_error_estimate;
  if (!(d.deficit > d.abs_error_estimate)) {
    throw ToleranceNotMet("deficit " + d.deficit.to_string(4) +
                          " not resolved beyond error estimate " +
                          d.abs_error_estimate.to_string(2));
  }
  return d;
}

MonteCarloResult convolution_tail_oracle(const IntegralSpec& spec, std::uint64_t samples,
                                         std::uint64_t seed, int shards) {
  if (shards < 1) throw DomainError("shards must be >= 1");
  const double limit = spec.a0.get_d() / 2;
  std::vector<double> half;
  for (const auto& a : spec.factors) half.push_back(a.get_d() / 2);
  // Largest first: early exits happen sooner.
  std::sort(half.rbegin(), half.rend());
  std::vector<double> rest(half.size() + 1, 0.0);  // sum of half[i..]
  for (std::size_t i = half.size(); i-- > 0;) rest[i] = rest[i + 1] + half[i];

  MonteCarloResult out;
  out.samples = samples;
  for (int s = 0; s < shards; ++s) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(s)};
    std::mt19937_64 rng(seq);
    const std::uint64_t n = samples / shards + (static_cast<std::uint64_t>(s) < samples % shards ? 1 : 0);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      double sum = 0;
      for (std::size_t k = 0; k < half.size(); ++k) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        sum += half[k] * std::cos(std::numbers::pi * u);
        // Remaining factors can no longer push |S| past the limit.
        if (std::fabs(sum) + rest[k + 1] <= limit) {
          sum = 0;
          break;
        }
      }
      if (std::fabs(sum) > limit) ++hits;
    }
    out.hits += hits;
  }
  const double nn = static_cast<double>(samples);
  out.estimate = out.hits / nn;
  if (out.hits == 0) {
    out.lower = 0;
    out.upper = 1 - std::pow(0.05, 1 / nn);
  } else {
    const double z = 1.959963984540054;
    const double p = out.estimate;
    const double denom = 1 + z * z / nn;
    const double centre = (p + z * z / (2 * nn)) / denom;
    const double spread = z * std::sqrt(p * (1 - p) / nn + z * z / (4 * nn * nn)) / denom;
    out.lower = std::max(0.0, centre - spread);
    out.upper = std::min(1.0, centre + spread);
  }
  return out;
}

std::vector<LadderRow> ladder_table(int max_n, double target_abs_tol,
                                    const PrecisionContext& ctx) {
  std::vector<LadderRow> rows;
  const BigReal half_pi = const_pi(ctx.precision()) / 2L;
  for (int n = 0; n <= max_n; ++n) {
    const IntegralSpec spec = ladder_spec(n);
    QuadratureResult q = integral_estimate(spec, target_abs_tol, ctx);
    LadderRow row;
    row.n = n;
    row.label = spec.label();
    row.verdict = threshold_verdict(spec);
    row.relative_deficit = row.verdict == Verdict::Deficit ? (half_pi - q.value) / half_pi
                                                           : BigReal(0L, ctx.precision());
    row.value = std::move(q.value);
    row.abs_error_estimate = std::move(q.abs_error_estimate);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string ladder_csv(const std::vector<LadderRow>& rows) {
  std::string out = "case,verdict,value,relative_deficit,error_estimate\n";
  for (const auto& r : rows) {
    out += "\"" + r.label + "\"," + to_string(r.verdict) + "," + r.value.to_string(15) + "," +
           r.relative_deficit.to_string(6) + "," + r.abs_error_estimate.to_string(3) + "\n";
  }
  return out;
}

}  // namespace zoo
