#include "zoo/digits.hpp"

#include <cmath>

namespace zoo {

namespace {

void check_base(long k) {
  if (k < 2) throw DomainError("k must be >= 2");
}

BigInt ipow(long k, unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(k), e);
  return r;
}

}  // namespace

DigitCounts digit_counts(const BigInt& n) {
  if (n < 0) throw DomainError("digit_counts needs n >= 0");
  DigitCounts c;
  c.n = n;
  for (char ch : n.get_str()) {
    if ((ch - '0') % 2 == 0) ++c.a; else ++c.b;
  }
  c.d = c.a + c.b;
  return c;
}

DigitCounts digit_counts(long n) { return digit_counts(BigInt(n)); }

BigRational c_sequence_value(const BigInt& n, const BigInt& k) {
  if (k < 2) throw DomainError("k must be >= 2");
  const DigitCounts c = digit_counts(n);
  BigInt k5;
  mpz_pow_ui(k5.get_mpz_t(), k.get_mpz_t(), 5);
  return BigRational(k5 * c.a) - make_rational(BigInt(c.b), k5);
}

BigRational direct_sum_exact(long k, long n_terms) {
  check_base(k);
  if (n_terms < 1) throw DomainError("n_terms must be >= 1");
  // sum c(n) k^{-n} = (sum c(n) k^{N-1-n}) / k^{N-1}; Horner over n.
  const BigInt k5 = ipow(k, 5);
  BigRational acc(0);
  for (long n = 0; n < n_terms; ++n) {
    const DigitCounts c = digit_counts(n);
    acc *= k;
    acc += BigRational(k5 * c.a) - make_rational(BigInt(c.b), k5);
  }
  return acc / ipow(k, static_cast<unsigned long>(n_terms - 1));
}

BigReal direct_sum(long k, long n_terms, const PrecisionContext& ctx) {
  if (n_terms > ctx.max_terms) throw TermCapExceeded("direct_sum: n_terms above max_terms");
  return BigReal(direct_sum_exact(k, n_terms), ctx.precision());
}

BigReal direct_sum_tail_bound(long k, long n_terms, Precision prec) {
  check_base(k);
  // |c(n)| <= k^5 d(n) and d(N + j) <= d(N) + 1 + j: geometric-arithmetic sum.
  const double dn = static_cast<double>(digit_counts(n_terms).d);
  const double r = 1.0 / static_cast<double>(k);
  const double factor = (dn + 1) / (1 - r) + r / ((1 - r) * (1 - r));
  BigReal kk(k, prec);
  return pow(kk, 5 - n_terms) * BigReal(factor, prec);
}

long default_direct_terms(long k, long digits) {
  check_base(k);
  return 130 + static_cast<long>(std::ceil(10.0 * digits / std::log10(static_cast<double>(k))));
}

BigRational gf_closed_term(long k, int n) {
  check_base(k);
  if (n < 0 || n > 7) throw DomainError("gf term index out of range");
  const unsigned long t = static_cast<unsigned long>(std::pow(10, n));
  // (k^{5-2t} - k^{-5-t})/(1 + k^{-t}); multiply through by k^{2t+5}:
  //   (k^10 - k^{t}) / (k^{2t+5} + k^{t+5})
  const BigInt num = ipow(k, 10) - ipow(k, t);
  const BigInt den = ipow(k, 2 * t + 5) + ipow(k, t + 5);
  return make_rational(num, den);
}

BigRational gf_closed_sum_exact(long k, int gf_terms) {
  check_base(k);
  if (gf_terms < 1) throw DomainError("gf_terms must be >= 1");
  BigRational s(0);
  for (int n = 0; n < gf_terms; ++n) s += gf_closed_term(k, n);
  return BigRational(ipow(k, 5)) + make_rational(BigInt(k), BigInt(k - 1)) * s;
}

BigReal gf_closed_sum(long k, int gf_terms, const PrecisionContext& ctx) {
  return BigReal(gf_closed_sum_exact(k, gf_terms), ctx.precision());
}

BigRational approx_fraction(long k) {
  check_base(k);
  return make_rational(ipow(k, 11) - 1, ipow(k, 4) * (ipow(k, 2) - 1));
}

std::string pattern_string(int p) {
  if (p < 1) throw DomainError("pattern_string needs p >= 1");
  const BigRational f = approx_fraction(static_cast<long>(std::pow(10, p)));
  return f.get_num().get_str() + "/" + f.get_den().get_str();
}

BigRational epsilon_exact_rational(long k) {
  return approx_fraction(k) - gf_closed_sum_exact(k, kDefaultGfTerms);
}

BigReal epsilon_exact(long k, const PrecisionContext& ctx) {
  return BigReal(epsilon_exact_rational(k), ctx.precision());
}

namespace {

// Prefix sums: multiplication by 1/(1-x).
template <class T>
void integrate(std::vector<T>& s) {
  for (std::size_t i = 1; i < s.size(); ++i) s[i] += s[i - 1];
}

// sum_{j >= start} (-1)^{j-start} x^{j t}, i.e. x^{start t}/(1 + x^t).
template <class T>
void add_alternating(std::vector<T>& s, long t, long start, const T& scale) {
  const long n_max = static_cast<long>(s.size()) - 1;
  bool plus = true;
  for (long e = start * t; e <= n_max; e += t, plus = !plus) {
    if (plus) s[e] += scale; else s[e] -= scale;
  }
}

void check_nmax(long n_max) {
  if (n_max < 0) throw DomainError("n_max must be >= 0");
}

}  // namespace

std::vector<long> gf_series_odd(long n_max) {
  check_nmax(n_max);
  std::vector<long> s(n_max + 1, 0);
  for (long t = 1; t <= n_max; t *= 10) add_alternating(s, t, 1, 1L);
  integrate(s);
  return s;
}

std::vector<long> gf_series_digits(long n_max) {
  check_nmax(n_max);
  std::vector<long> s(n_max + 1, 0);
  for (long t = 1; t <= n_max; t *= 10) s[t] += 1;
  integrate(s);
  s[0] += 1;
  return s;
}

std::vector<long> gf_series_even(long n_max) {
  check_nmax(n_max);
  std::vector<long> s(n_max + 1, 0);
  for (long t = 1; t <= n_max; t *= 10) add_alternating(s, t, 2, 1L);
  integrate(s);
  s[0] += 1;
  return s;
}

std::vector<BigRational> gf_series_c(long k, long n_max) {
  check_base(k);
  check_nmax(n_max);
  const BigRational k5(ipow(k, 5));
  const BigRational inv_k5 = 1 / k5;
  std::vector<BigRational> s(n_max + 1, BigRational(0));
  for (long t = 1; t <= n_max; t *= 10) {
    add_alternating(s, t, 2, k5);
    // -x^t/k^5 / (1 + x^t)
    add_alternating(s, t, 1, BigRational(-inv_k5));
  }
  integrate(s);
  s[0] += k5;
  return s;
}

}  // namespace zoo
