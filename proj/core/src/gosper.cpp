#include "zoo/gosper.hpp"

#include <cmath>
#include <memory>

namespace zoo {

HyperHarmonic::HyperHarmonic(int order) : order_(order), values_{BigRational(0)} {
  if (order < 1) throw DomainError("hyper-harmonic order must be >= 1");
}

BigRational inverse_power(long n, int p) {
  BigInt d;
  mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(p));
  return make_rational(BigInt(1), d);
}

BigRational HyperHarmonic::value(long n) {
  if (n < 0) throw DomainError("hyper-harmonic index must be >= 0");
  while (static_cast<long>(values_.size()) <= n) {
    const long k = static_cast<long>(values_.size());
    values_.push_back(values_.back() + inverse_power(k, order_));
  }
  return values_[n];
}

BigRational HyperHarmonic::bivariate(int q, long n) {
  if (n < 0) throw DomainError("hyper-harmonic index must be >= 0");
  if (q < 1) throw DomainError("hyper-harmonic order must be >= 1");
  Bivariate* b = nullptr;
  for (auto& x : bivariate_) {
    if (x.q == q) b = &x;
  }
  if (!b) {
    bivariate_.push_back({q, {BigRational(0)}, {BigRational(0)}});
    b = &bivariate_.back();
  }
  // H^(p,q)_k = H^(p,q)_{k-1} + H^(q)_{k-1} / k^p
  while (static_cast<long>(b->table.size()) <= n) {
    const long k = static_cast<long>(b->table.size());
    BigRational next = b->table.back() + b->inner.back() * inverse_power(k, order_);
    b->table.push_back(next);
    b->inner.push_back(b->inner.back() + inverse_power(k, q));
  }
  return b->table[n];
}

PartialProductState::PartialProductState(const TriangularProductSpec& spec)
    : spec_(spec), elem_sym_(spec.dim_n, BigRational(0)), v_(spec.dim_n, BigRational(0)) {
  elem_sym_[0] = 1;
}

void PartialProductState::advance() {
  const long p = ++step_;
  const int n = spec_.dim_n;
  const RationalVector u = spec_.u(p);
  // v^(l) += prod alpha * sum_m e_m u^(l-m); row i holds l = N - i.
  for (int i = 0; i < n; ++i) {
    BigRational acc(0);
    for (int m = 0; i + m < n; ++m) acc += elem_sym_[m] * u[i + m];
    v_[i] += alpha_prod_ * acc;
  }
  const BigRational a = spec_.alpha(p);
  if (a == 0) throw DomainError("alpha_n must be nonzero");
  const BigRational r = spec_.beta(p) / a;
  for (int m = n - 1; m >= 1; --m) elem_sym_[m] += r * elem_sym_[m - 1];
  alpha_prod_ *= a;
}

RationalMatrix step_matrix(const TriangularProductSpec& spec, long k) {
  const int n = spec.dim_n;
  RationalMatrix m(n + 1, RationalVector(n + 1, BigRational(0)));
  const BigRational a = spec.alpha(k);
  const BigRational b = spec.beta(k);
  const RationalVector u = spec.u(k);
  for (int i = 0; i < n; ++i) {
    m[i][i] = a;
    if (i + 1 < n) m[i][i + 1] = b;
    m[i][n] = u[i];
  }
  m[n][n] = 1;
  return m;
}

namespace {

// Both factors are upper triangular.
template <class M>
M multiply(const M& x, const M& y) {
  const std::size_t n = x.size();
  M out = y;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j < i) continue;  // stays zero
      typename M::value_type::value_type acc = x[i][i] * y[i][j];
      for (std::size_t k = i + 1; k <= j; ++k) acc += x[i][k] * y[k][j];
      out[i][j] = acc;
    }
  }
  return out;
}

RealMatrix to_real(const RationalMatrix& m, Precision prec) {
  RealMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) {
    RealVector r;
    r.reserve(row.size());
    for (const auto& x : row) r.emplace_back(x, prec);
    out.push_back(std::move(r));
  }
  return out;
}

void check_steps(long n) {
  if (n < 1) throw DomainError("matrix products need n >= 1");
}

RealMatrix pairwise_real(const TriangularProductSpec& spec, long lo, long hi,
                         Precision prec) {
  if (hi - lo == 1) return to_real(step_matrix(spec, lo), prec);
  const long mid = lo + (hi - lo) / 2;
  return multiply(pairwise_real(spec, lo, mid, prec), pairwise_real(spec, mid, hi, prec));
}

RationalMatrix pairwise_exact(const TriangularProductSpec& spec, long lo, long hi) {
  if (hi - lo == 1) return step_matrix(spec, lo);
  const long mid = lo + (hi - lo) / 2;
  return multiply(pairwise_exact(spec, lo, mid), pairwise_exact(spec, mid, hi));
}

}  // namespace

RationalMatrix partial_product_exact(const TriangularProductSpec& spec, long n) {
  check_steps(n);
  RationalMatrix acc = step_matrix(spec, 1);
  for (long k = 2; k <= n; ++k) acc = multiply(acc, step_matrix(spec, k));
  return acc;
}

RealMatrix partial_product_direct(const TriangularProductSpec& spec, long n,
                                  const PrecisionContext& ctx) {
  check_steps(n);
  const Precision prec = ctx.precision();
  RealMatrix acc = to_real(step_matrix(spec, 1), prec);
  for (long k = 2; k <= n; ++k) acc = multiply(acc, to_real(step_matrix(spec, k), prec));
  return acc;
}

RealMatrix partial_product_pairwise(const TriangularProductSpec& spec, long n,
                                    const PrecisionContext& ctx) {
  check_steps(n);
  return pairwise_real(spec, 1, n + 1, ctx.precision());
}

RationalMatrix partial_product_pairwise_exact(const TriangularProductSpec& spec,
                                              long n) {
  check_steps(n);
  return pairwise_exact(spec, 1, n + 1);
}

RationalVector v_partial_closed_exact(const TriangularProductSpec& spec, long n) {
  check_steps(n);
  PartialProductState state(spec);
  while (state.step() < n) state.advance();
  return state.v_partial();
}

RealVector v_partial_closed(const TriangularProductSpec& spec, long n,
                            const PrecisionContext& ctx) {
  RealVector out;
  for (const auto& x : v_partial_closed_exact(spec, n)) out.emplace_back(x, ctx.precision());
  return out;
}

TriangularProductSpec zeta_even_spec(EvenVariant variant) {
  TriangularProductSpec s;
  s.alpha = [](long n) { return make_rational(n, 2 * (2 * n + 1)); };
  s.beta = [](long n) { return make_rational(-3, 2 * n * (2 * n + 1)); };
  switch (variant) {
    case EvenVariant::Zeta4:
      s.dim_n = 2;
      s.name = "zeta4";
      s.u = [](long n) {
        return RationalVector{BigRational(3) / 2 * inverse_power(n, 3),
                              make_rational(3, 2 * n)};
      };
      break;
    case EvenVariant::Zeta6Uncorrected:
    case EvenVariant::Zeta6Alternate:
      s.dim_n = 3;
      s.name = variant == EvenVariant::Zeta6Alternate ? "zeta6-alternate"
                                                      : "zeta6-uncorrected";
      s.u = [](long n) {
        return RationalVector{BigRational(3) / 2 * inverse_power(n, 5),
                              BigRational(3) / 2 * inverse_power(n, 3),
                              make_rational(3, 2 * n)};
      };
      break;
    case EvenVariant::Zeta6Corrected: {
      s.dim_n = 3;
      s.name = "zeta6-corrected";
      auto h4 = std::make_shared<HyperHarmonic>(4);
      s.u = [h4](long n) {
        BigRational top = BigRational(3) / 2 * inverse_power(n, 5) -
                          BigRational(9) * h4->value(n - 1) / (2 * n);
        return RationalVector{top, BigRational(3) / 2 * inverse_power(n, 3),
                              make_rational(3, 2 * n)};
      };
      break;
    }
  }
  return s;
}

TriangularProductSpec zeta_odd_spec(int n) {
  if (n < 1) throw DomainError("zeta_odd_spec needs N >= 1");
  TriangularProductSpec s;
  s.dim_n = n;
  s.name = "zeta" + std::to_string(2 * n + 1);
  s.alpha = [](long k) { return make_rational(-k, 2 * (2 * k + 1)); };
  s.beta = [](long k) { return make_rational(1, 2 * k * (2 * k + 1)); };
  s.u = [n](long k) {
    RationalVector u;
    for (int i = n; i >= 2; --i) u.push_back(inverse_power(k, 2 * i));
    u.push_back(BigRational(5) / 4 * inverse_power(k, 2));
    return u;
  };
  return s;
}

TriangularProductSpec spec_by_name(const std::string& name) {
  if (name == "zeta3") return zeta_odd_spec(1);
  if (name == "zeta5") return zeta_odd_spec(2);
  if (name == "zeta4") return zeta_even_spec(EvenVariant::Zeta4);
  if (name == "zeta6-uncorrected") return zeta_even_spec(EvenVariant::Zeta6Uncorrected);
  if (name == "zeta6-corrected") return zeta_even_spec(EvenVariant::Zeta6Corrected);
  if (name == "zeta6-alternate") return zeta_even_spec(EvenVariant::Zeta6Alternate);
  throw ParamError("unknown product spec: " + name);
}

long terms_for_digits(long digits) {
  return static_cast<long>(std::ceil(1.1 * static_cast<double>(digits) / 0.602));
}

namespace {

void check_terms(long terms) {
  if (terms < 1) throw DomainError("terms must be >= 1");
}

// C(2(k+1),k+1) = C(2k,k) * 2(2k+1)/(k+1)
void next_central(BigInt& c, long k) {
  c *= 2 * (2 * k + 1);
  c /= k + 1;
}

}  // namespace

BigReal markov_zeta2(long terms, const PrecisionContext& ctx) {
  check_terms(terms);
  BigRational sum(0);
  BigInt c = 2;
  for (long i = 1; i <= terms; ++i) {
    sum += make_rational(BigInt(3), c * i * i);
    next_central(c, i);
  }
  return BigReal(sum, ctx.precision());
}

RationalVector borwein_gf_terms(int order, long terms) {
  if (order != 0 && order != 2 && order != 4) {
    throw DomainError("borwein_gf_coefficient: order must be 0, 2 or 4");
  }
  check_terms(terms);
  const int deg = order / 2;
  // prod_{j<k} (j^2-4w)/(j^2-w) as a series in w = z^2, truncated to degree 2:
  // each factor is 1 - 3w/j^2 - 3w^2/j^4 + ...
  RationalVector prod{BigRational(1), BigRational(0), BigRational(0)};
  RationalVector out;
  BigInt c = 2;
  for (long k = 1; k <= terms; ++k) {
    const BigRational ik2 = inverse_power(k, 2);
    // 1/(k^2 - w) = (1/k^2)(1 + w/k^2 + w^2/k^4)
    const RationalVector geo{ik2, ik2 * ik2, ik2 * ik2 * ik2};
    BigRational coeff(0);
    for (int i = 0; i <= deg; ++i) coeff += prod[i] * geo[deg - i];
    out.push_back(coeff * 3 / c);
    const RationalVector f{BigRational(1), -3 * ik2, -3 * ik2 * ik2};
    RationalVector next(3, BigRational(0));
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; i + j <= 2; ++j) next[i + j] += prod[i] * f[j];
    prod = std::move(next);
    next_central(c, k);
  }
  return out;
}

BigRational borwein_gf_coefficient_exact(int order, long terms) {
  BigRational sum(0);
  for (const auto& t : borwein_gf_terms(order, terms)) sum += t;
  return sum;
}

BigReal borwein_gf_coefficient(int order, long terms, const PrecisionContext& ctx) {
  return BigReal(borwein_gf_coefficient_exact(order, terms), ctx.precision());
}

RationalVector zeta6_expansion_terms(long terms) {
  check_terms(terms);
  HyperHarmonic h2(2), h4(4);
  RationalVector out;
  BigInt c = 2;
  for (long k = 1; k <= terms; ++k) {
    const BigRational a2 = h2.value(k - 1);
    const BigRational ik2 = inverse_power(k, 2);
    BigRational bracket = 17 * h2.bivariate(2, k - 1) + h4.value(k - 1) -
                          4 * a2 * a2 - 3 * a2 * ik2 + ik2 * ik2;
    out.push_back(3 * bracket * ik2 / c);
    next_central(c, k);
  }
  return out;
}

BigRational zeta6_expansion_exact(long terms) {
  BigRational sum(0);
  for (const auto& t : zeta6_expansion_terms(terms)) sum += t;
  return sum;
}

BigReal zeta6_expansion(long terms, const PrecisionContext& ctx) {
  return BigReal(zeta6_expansion_exact(terms), ctx.precision());
}

BigReal delta_constant(long terms, const PrecisionContext& ctx) {
  check_terms(terms);
  HyperHarmonic h4(4);
  BigRational sum(0);
  BigInt c = 2;
  for (long m = 1; m <= terms; ++m) {
    sum += 9 * h4.value(m - 1) / (c * m * m);
    next_central(c, m);
  }
  return BigReal(sum, ctx.precision());
}

}  // namespace zoo
