#include "zoo/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <ostream>
#include <vector>

namespace zoo {

namespace {

// MPFR keeps the exponent range per thread. Widen it once per thread so
// magnitudes such as 10^-(4.3e10) stay representable.
void ensure_exponent_range() {
  thread_local bool done = false;
  if (!done) {
    mpfr_set_emin(mpfr_get_emin_min());
    mpfr_set_emax(mpfr_get_emax_max());
    done = true;
  }
}

constexpr double kLog2Of10 = 3.321928094887362347870319429489;

mpfr_prec_t wider(const BigReal& a, const BigReal& b) {
  return std::max(mpfr_get_prec(a.get()), mpfr_get_prec(b.get()));
}

// Rounds `target` in place to at least precision p without losing its value.
void widen_to(BigReal& target, mpfr_prec_t p) {
  if (mpfr_get_prec(target.get()) < p) {
    mpfr_prec_round(target.get(), p, MPFR_RNDN);
  }
}

}  // namespace

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ArgumentError("rational with zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

BigRational make_rational(long num, long den) {
  return make_rational(BigInt(num), BigInt(den));
}

Precision Precision::from_digits(long digits) {
  if (digits < 1) throw ArgumentError("precision must be at least one digit");
  return Precision{static_cast<long>(std::ceil(digits * kLog2Of10)) + 4};
}

long Precision::digits() const {
  return static_cast<long>(std::floor((bits - 4) / kLog2Of10));
}

PrecisionContext PrecisionContext::with_digits(long out_digits,
                                               long max_terms) {
  PrecisionContext ctx;
  ctx.out_digits = out_digits;
  ctx.max_terms = max_terms;
  ctx.guard_digits =
      15 + static_cast<long>(std::ceil(std::log10(static_cast<double>(
               std::max<long>(max_terms, 1)))));
  ctx.validate();
  return ctx;
}

PrecisionContext PrecisionContext::widened(long extra) const {
  PrecisionContext ctx = *this;
  ctx.out_digits += extra;
  ctx.validate();
  return ctx;
}

void PrecisionContext::validate() const {
  if (out_digits < 1) throw ArgumentError("out_digits must be positive");
  if (guard_digits < 10) throw ArgumentError("guard_digits must be >= 10");
  if (max_terms < 1) throw ArgumentError("max_terms must be >= 1");
}

// ---------------------------------------------------------------- BigReal

BigReal::BigReal() {
  ensure_exponent_range();
  mpfr_init2(v_, 64);
  mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long value, Precision prec) {
  ensure_exponent_range();
  mpfr_init2(v_, prec.bits);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigReal::BigReal(double value, Precision prec) {
  ensure_exponent_range();
  mpfr_init2(v_, prec.bits);
  mpfr_set_d(v_, value, MPFR_RNDN);
}

BigReal::BigReal(const BigInt& value, Precision prec) {
  ensure_exponent_range();
  mpfr_init2(v_, prec.bits);
  mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

BigReal::BigReal(const BigRational& value, Precision prec) {
  ensure_exponent_range();
  mpfr_init2(v_, prec.bits);
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const BigReal& other) {
  ensure_exponent_range();
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::parse(std::string_view text, Precision prec) {
  BigReal out(0L, prec);
  std::string buf(text);
  char* end = nullptr;
  mpfr_strtofr(out.v_, buf.c_str(), &end, 10, MPFR_RNDN);
  if (buf.empty() || end == buf.c_str() || *end != '\0') {
    throw ArgumentError("not a decimal number: '" + buf + "'");
  }
  return out;
}

BigReal BigReal::rounded(Precision prec) const {
  BigReal out(*this);
  mpfr_prec_round(out.v_, prec.bits, MPFR_RNDN);
  return out;
}

std::string BigReal::to_string(long digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return "0.0e+0";
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10,
                           static_cast<size_t>(std::max<long>(digits, 0)), v_,
                           MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string out;
  if (!mant.empty() && mant[0] == '-') {
    out.push_back('-');
    mant.erase(0, 1);
  }
  out.push_back(mant[0]);
  out.push_back('.');
  if (mant.size() > 1) {
    out.append(mant, 1, std::string::npos);
  } else {
    out.push_back('0');
  }
  const long e = static_cast<long>(exp10) - 1;
  out.push_back('e');
  out.push_back(e < 0 ? '-' : '+');
  out += std::to_string(e < 0 ? -e : e);
  return out;
}

std::ostream& operator<<(std::ostream& os, const BigReal& x) { return os << x.to_string(); }

double BigReal::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

long BigReal::to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

long BigReal::decimal_exponent() const {
  if (!is_finite() || is_zero()) {
    throw DomainError("decimal_exponent of zero or non-finite value");
  }
  // Enough bits for floor(log10) to be exact except at exact powers of ten,
  // which the correction below handles.
  BigReal a = abs(*this);
  mpfr_t l;
  mpfr_init2(l, 128);
  mpfr_log10(l, a.v_, MPFR_RNDD);
  mpfr_floor(l, l);
  long e = mpfr_get_si(l, MPFR_RNDN);
  mpfr_clear(l);
  BigReal p = pow10(e + 1, a.precision());
  if (a >= p) ++e;
  return e;
}

BigReal BigReal::operator-() const {
  BigReal out(*this);
  mpfr_neg(out.v_, out.v_, MPFR_RNDN);
  return out;
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  widen_to(*this, wider(*this, rhs));
  mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  widen_to(*this, wider(*this, rhs));
  mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  widen_to(*this, wider(*this, rhs));
  mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  widen_to(*this, wider(*this, rhs));
  mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator+=(long rhs) {
  mpfr_add_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(long rhs) {
  mpfr_sub_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(long rhs) {
  mpfr_mul_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(long rhs) {
  mpfr_div_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}

BigReal operator-(long lhs, const BigReal& rhs) {
  BigReal out(rhs);
  mpfr_si_sub(out.v_, lhs, rhs.v_, MPFR_RNDN);
  return out;
}

BigReal operator/(long lhs, const BigReal& rhs) {
  BigReal out(rhs);
  mpfr_si_div(out.v_, lhs, rhs.v_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater
                        : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const BigReal& a, long b) {
  if (mpfr_nan_p(a.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.v_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater
                        : std::partial_ordering::equivalent);
}

// ------------------------------------------------------ elementary functions

namespace {

template <typename Fn>
BigReal unary(const BigReal& x, Fn fn) {
  BigReal out(x);
  fn(out.get(), x.get(), MPFR_RNDN);
  return out;
}

}  // namespace

BigReal abs(const BigReal& x) { return unary(x, mpfr_abs); }

BigReal sqrt(const BigReal& x) {
  if (x.sign() < 0) throw DomainError("sqrt of a negative number");
  return unary(x, mpfr_sqrt);
}

BigReal exp(const BigReal& x) { return unary(x, mpfr_exp); }

BigReal log(const BigReal& x) {
  if (x.sign() <= 0) throw DomainError("log of a non-positive number");
  return unary(x, mpfr_log);
}

BigReal log10(const BigReal& x) {
  if (x.sign() <= 0) throw DomainError("log10 of a non-positive number");
  return unary(x, mpfr_log10);
}

BigReal pow(const BigReal& x, const BigReal& y) {
  if (x.sign() < 0) throw DomainError("pow with negative base");
  BigReal out(0L, Precision{wider(x, y)});
  mpfr_pow(out.get(), x.get(), y.get(), MPFR_RNDN);
  return out;
}

BigReal pow(const BigReal& x, long n) {
  BigReal out(x);
  mpfr_pow_si(out.get(), x.get(), n, MPFR_RNDN);
  return out;
}

BigReal sin(const BigReal& x) { return unary(x, mpfr_sin); }
BigReal cos(const BigReal& x) { return unary(x, mpfr_cos); }
BigReal atan(const BigReal& x) { return unary(x, mpfr_atan); }
BigReal cosh(const BigReal& x) { return unary(x, mpfr_cosh); }

BigReal floor(const BigReal& x) {
  BigReal out(x);
  mpfr_floor(out.get(), x.get());
  return out;
}

BigReal min(const BigReal& a, const BigReal& b) { return b < a ? b : a; }
BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }

BigReal const_pi(Precision prec) {
  BigReal out(0L, prec);
  mpfr_const_pi(out.get(), MPFR_RNDN);
  return out;
}

BigReal const_e(Precision prec) {
  BigReal one(1L, prec);
  return exp(one);
}

BigReal pow10(long n, Precision prec) {
  BigReal out(10L, prec);
  mpfr_pow_si(out.get(), out.get(), n, MPFR_RNDN);
  return out;
}

BigReal const_pi(const PrecisionContext& ctx) { return const_pi(ctx.precision()); }
BigReal const_e(const PrecisionContext& ctx) { return const_e(ctx.precision()); }

BigReal exp(const BigReal& x, const PrecisionContext& ctx) {
  return exp(x.rounded(ctx.precision()));
}
BigReal log(const BigReal& x, const PrecisionContext& ctx) {
  return log(x.rounded(ctx.precision()));
}
BigReal sqrt(const BigReal& x, const PrecisionContext& ctx) {
  return sqrt(x.rounded(ctx.precision()));
}
BigReal pow(const BigReal& x, const BigReal& y, const PrecisionContext& ctx) {
  return pow(x.rounded(ctx.precision()), y.rounded(ctx.precision()));
}

BigReal zeta(long s, Precision prec) {
  if (s < 2) throw DomainError("zeta(s) requires integer s >= 2");
  BigReal out(0L, prec);
  mpfr_zeta_ui(out.get(), static_cast<unsigned long>(s), MPFR_RNDN);
  return out;
}

// ------------------------------------------------------------ combinatorics

BigInt binomial(const BigInt& n, const BigInt& k) {
  if (n < 0) throw ArgumentError("binomial: n must be non-negative");
  if (k < 0 || k > n) throw ArgumentError("binomial: k out of range");
  if (!k.fits_ulong_p()) throw ArgumentError("binomial: k too large");
  BigInt out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k.get_ui());
  return out;
}

BigInt falling_factorial(const BigInt& d, const BigInt& n) {
  if (n < 0) throw ArgumentError("falling_factorial: n must be non-negative");
  if (!n.fits_ulong_p()) throw ArgumentError("falling_factorial: n too large");
  BigInt out = 1;
  BigInt factor = d;
  for (unsigned long i = 0, count = n.get_ui(); i < count; ++i) {
    out *= factor;
    if (out == 0) break;
    factor -= 1;
  }
  return out;
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

const BigRational& bernoulli_b2n(std::size_t j) {
  // Akiyama-Tanigawa over exact rationals; extended on demand.
  static std::mutex mu;
  static std::vector<BigRational> cache;  // cache[j] = B_{2j}
  std::lock_guard<std::mutex> lock(mu);
  if (j >= cache.size()) {
    const std::size_t want = std::max<std::size_t>(2 * j + 1, 2 * cache.size() + 16);
    std::vector<BigRational> a(want + 1);
    std::vector<BigRational> b(want + 1);
    for (std::size_t m = 0; m <= want; ++m) {
      a[m] = make_rational(1, static_cast<long>(m + 1));
      for (std::size_t i = m; i >= 1; --i) {
        a[i - 1] = static_cast<long>(i) * (a[i - 1] - a[i]);
      }
      b[m] = a[0];  // B_m with B_1 = +1/2
    }
    cache.clear();
    for (std::size_t m = 0; m <= want; m += 2) cache.push_back(b[m]);
  }
  return cache[j];
}

// ------------------------------------------------------------------ series

SeriesSum sum_series(const TermFn& term, const TermFn& tail_bound,
                     const PrecisionContext& ctx) {
  ctx.validate();
  const Precision prec = ctx.precision();
  const BigReal eps = pow10(-(ctx.out_digits + 5), prec);
  SeriesSum out{BigReal(0L, prec), 0, BigReal(0L, prec)};
  for (long i = 0; i < ctx.max_terms; ++i) {
    out.value += term(i).rounded(prec);
    out.terms_used = i + 1;
    BigReal bound = tail_bound(i);
    BigReal scale = abs(out.value);
    if (scale < 1L) scale = BigReal(1L, prec);
    if (abs(bound) < eps * scale) {
      out.tail_bound = abs(bound);
      return out;
    }
  }
  throw TermCapExceeded("sum_series: tail bound not met within " +
                        std::to_string(ctx.max_terms) + " terms");
}

}  // namespace zoo
