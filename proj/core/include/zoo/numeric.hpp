#pragma once

// Arbitrary-precision scalars used throughout the toolkit.
//
// BigReal is a thin value-semantic wrapper over an MPFR number. Every value
// carries its own binary precision; binary operations round to the larger of
// the two operand precisions, always round-to-nearest-even. Precision at the
// API surface is accounted in decimal digits through PrecisionContext.
//
// BigInt and BigRational are GMP's C++ classes. mpq_class keeps results of
// arithmetic canonical; use make_rational() when building a fraction from
// a numerator/denominator pair so the lowest-terms invariant holds.

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

#include "zoo/errors.hpp"

namespace zoo {

using BigInt = mpz_class;
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);
BigRational make_rational(long num, long den = 1);

// Binary precision of a BigReal, in bits.
struct Precision {
  long bits = 64;

  static Precision from_digits(long digits);
  long digits() const;  // decimal digits faithfully represented
  friend auto operator<=>(const Precision&, const Precision&) = default;
};

enum class Rounding { NearestEven };

struct PrecisionContext {
  long out_digits = 30;
  long guard_digits = 21;
  long max_terms = 1'000'000;
  Rounding rounding = Rounding::NearestEven;

  // guard_digits = 15 + ceil(log10(max_terms)).
  static PrecisionContext with_digits(long out_digits,
                                      long max_terms = 1'000'000);

  long working_digits() const { return out_digits + guard_digits; }
  Precision precision() const {
    return Precision::from_digits(working_digits());
  }
  // Same settings with out_digits raised by `extra` (guard unchanged).
  PrecisionContext widened(long extra) const;
  // Throws ArgumentError when an invariant is violated.
  void validate() const;
};

class BigReal {
 public:
  BigReal();
  BigReal(long value, Precision prec);
  BigReal(int value, Precision prec) : BigReal(static_cast<long>(value), prec) {}
  BigReal(double value, Precision prec);
  BigReal(const BigInt& value, Precision prec);
  BigReal(const BigRational& value, Precision prec);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  // Parses "[-]d.ddd[e[-]x]" (anything mpfr_strtofr accepts in base 10).
  static BigReal parse(std::string_view text, Precision prec);

  Precision precision() const { return Precision{mpfr_get_prec(v_)}; }
  BigReal rounded(Precision prec) const;

  // Scientific notation "-d.ddde-x", correctly rounded (ties to even) to
  // `digits` significant digits. digits <= 0 picks the shortest count that
  // parses back to the identical value at this precision.
  std::string to_string(long digits = 0) const;

  double to_double() const;
  long to_long() const;  // rounds to nearest
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  // floor(log10|x|) for nonzero finite x.
  long decimal_exponent() const;

  BigReal operator-() const;
  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator+=(long rhs);
  BigReal& operator-=(long rhs);
  BigReal& operator*=(long rhs);
  BigReal& operator/=(long rhs);

  friend BigReal operator+(BigReal lhs, const BigReal& rhs) { return lhs += rhs; }
  friend BigReal operator-(BigReal lhs, const BigReal& rhs) { return lhs -= rhs; }
  friend BigReal operator*(BigReal lhs, const BigReal& rhs) { return lhs *= rhs; }
  friend BigReal operator/(BigReal lhs, const BigReal& rhs) { return lhs /= rhs; }
  friend BigReal operator+(BigReal lhs, long rhs) { return lhs += rhs; }
  friend BigReal operator-(BigReal lhs, long rhs) { return lhs -= rhs; }
  friend BigReal operator*(BigReal lhs, long rhs) { return lhs *= rhs; }
  friend BigReal operator/(BigReal lhs, long rhs) { return lhs /= rhs; }
  friend BigReal operator+(long lhs, BigReal rhs) { return rhs += lhs; }
  friend BigReal operator*(long lhs, BigReal rhs) { return rhs *= lhs; }
  friend BigReal operator-(long lhs, const BigReal& rhs);
  friend BigReal operator/(long lhs, const BigReal& rhs);

  friend bool operator==(const BigReal& a, const BigReal& b) {
    return mpfr_equal_p(a.v_, b.v_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);
  friend bool operator==(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, long b);

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// Elementary functions, rounded to the argument's precision.
// Shortest round-trip form.
std::ostream& operator<<(std::ostream& os, const BigReal& x);

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log10(const BigReal& x);
BigReal pow(const BigReal& x, const BigReal& y);
BigReal pow(const BigReal& x, long n);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal atan(const BigReal& x);
BigReal cosh(const BigReal& x);
BigReal floor(const BigReal& x);
BigReal min(const BigReal& a, const BigReal& b);
BigReal max(const BigReal& a, const BigReal& b);

BigReal const_pi(Precision prec);
BigReal const_e(Precision prec);
// 10^n exactly rounded.
BigReal pow10(long n, Precision prec);

// Context-flavoured entry points: argument rounded to the working precision
// of `ctx` first.
BigReal const_pi(const PrecisionContext& ctx);
BigReal const_e(const PrecisionContext& ctx);
BigReal exp(const BigReal& x, const PrecisionContext& ctx);
BigReal log(const BigReal& x, const PrecisionContext& ctx);
BigReal sqrt(const BigReal& x, const PrecisionContext& ctx);
BigReal pow(const BigReal& x, const BigReal& y, const PrecisionContext& ctx);

// Riemann zeta at an integer s >= 2 (MPFR).
BigReal zeta(long s, Precision prec);

// Exact combinatorics.
BigInt binomial(const BigInt& n, const BigInt& k);
BigInt falling_factorial(const BigInt& d, const BigInt& n);
BigInt factorial(unsigned long n);
// B_{2j}, j >= 0, from a process-wide cache.
const BigRational& bernoulli_b2n(std::size_t j);

// Generic tail-bounded series summation.
struct SeriesSum {
  BigReal value;
  long terms_used = 0;
  BigReal tail_bound;  // bound reported for the last index summed
};

using TermFn = std::function<BigReal(long)>;

// Sums term(0), term(1), ... in ascending index order and stops after index
// m once tail_bound(m) < 10^-(out_digits+5) * max(1, |S_m|). Throws
// TermCapExceeded when ctx.max_terms terms were not enough.
SeriesSum sum_series(const TermFn& term, const TermFn& tail_bound,
                     const PrecisionContext& ctx);

}  // namespace zoo
