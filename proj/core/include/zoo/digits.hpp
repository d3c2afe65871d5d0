#pragma once

// Digit-count sequences a(n) (even digits), b(n) (odd digits), d(n) (all
// digits), the sums sum c_k(n)/k^n with c_k(n) = k^5 a(n) - b(n)/k^5, their
// generating-function evaluation and the "nice" fractions they almost equal.

#include <string>
#include <vector>

#include "zoo/numeric.hpp"

namespace zoo {

struct DigitCounts {
  BigInt n;
  long a = 0;  // even digits; 0 counts as even, so a(0) = 1
  long b = 0;  // odd digits
  long d = 0;  // a + b
};

DigitCounts digit_counts(const BigInt& n);
DigitCounts digit_counts(long n);

// k^5 a(n) - b(n)/k^5
BigRational c_sequence_value(const BigInt& n, const BigInt& k);

// sum_{n < n_terms} c_k(n)/k^n.
BigRational direct_sum_exact(long k, long n_terms);
BigReal direct_sum(long k, long n_terms, const PrecisionContext& ctx);
// Bound on sum_{n >= n_terms} |c_k(n)|/k^n.
BigReal direct_sum_tail_bound(long k, long n_terms, Precision prec);
// 130 + 10 digits / log10(k).
long default_direct_terms(long k, long digits);

inline constexpr int kDefaultGfTerms = 6;

// k^5 + k/(k-1) sum_{n < gf_terms} (k^{5-2*10^n} - k^{-5-10^n})/(1 + k^{-10^n}).
BigRational gf_closed_sum_exact(long k, int gf_terms);
BigReal gf_closed_sum(long k, int gf_terms, const PrecisionContext& ctx);
// The n-th summand (without the k/(k-1) factor).
BigRational gf_closed_term(long k, int n);

// (k^11 - 1)/(k^4 (k^2 - 1))
BigRational approx_fraction(long k);
// approx_fraction(10^p) written out as "num/den".
std::string pattern_string(int p);

// approx_fraction(k) - gf_closed_sum(k, 6), exactly, then rounded.
BigRational epsilon_exact_rational(long k);
BigReal epsilon_exact(long k, const PrecisionContext& ctx);

// Coefficients 0..n_max of the generating functions
//   sum b(n) x^n = 1/(1-x) sum x^{10^m}/(1+x^{10^m})
//   sum d(n) x^n = 1 + 1/(1-x) sum x^{10^m}
//   sum a(n) x^n = 1 + 1/(1-x) sum x^{2*10^m}/(1+x^{10^m})
// expanded as truncated series (no digit counting involved).
std::vector<long> gf_series_odd(long n_max);
std::vector<long> gf_series_digits(long n_max);
std::vector<long> gf_series_even(long n_max);
// sum c_k(n) x^n = k^5 + 1/(1-x) sum (k^5 x^{2*10^m} - x^{10^m}/k^5)/(1+x^{10^m})
std::vector<BigRational> gf_series_c(long k, long n_max);

}  // namespace zoo
