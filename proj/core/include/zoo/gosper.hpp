#pragma once

// Structured infinite matrix products for zeta values.
//
// Every step matrix is [[A_k, u_k], [0, 1]] with A_k = alpha_k I + beta_k J
// (J = first superdiagonal shift), so the last column of M_1...M_n is
// sum_p A_1...A_{p-1} u_p and the A-block of the product decays like 4^-n.
// Per-step data is exact (mpq); BigReal only appears when accumulating.

#include <functional>
#include <string>
#include <vector>

#include "zoo/numeric.hpp"

namespace zoo {

using RationalVector = std::vector<BigRational>;
using RationalMatrix = std::vector<RationalVector>;
using RealVector = std::vector<BigReal>;
using RealMatrix = std::vector<RealVector>;

struct TriangularProductSpec {
  int dim_n = 1;
  std::function<BigRational(long)> alpha;
  std::function<BigRational(long)> beta;
  // Top to bottom: u^(N), ..., u^(1).
  std::function<RationalVector(long)> u;
  std::string name;
};

// H_n^(p), extended on demand. bivariate(q, n) is
// H_n^(p,q) = sum_{n >= k1 > k2 >= 1} k1^-p k2^-q.
class HyperHarmonic {
 public:
  explicit HyperHarmonic(int order);
  int order() const { return order_; }
  BigRational value(long n);
  BigRational bivariate(int q, long n);

 private:
  int order_;
  std::vector<BigRational> values_;
  struct Bivariate {
    int q;
    std::vector<BigRational> table;
    std::vector<BigRational> inner;  // H^(q)
  };
  std::vector<Bivariate> bivariate_;
};

// 1/n^p exactly.
BigRational inverse_power(long n, int p);

class PartialProductState {
 public:
  explicit PartialProductState(const TriangularProductSpec& spec);

  // Folds in step p = step() + 1.
  void advance();
  long step() const { return step_; }
  const BigRational& alpha_prod() const { return alpha_prod_; }
  // e_1..e_{N-1} of {beta_j/alpha_j : j <= step}; index 0 holds e_0 = 1.
  const RationalVector& elem_sym() const { return elem_sym_; }
  const RationalVector& v_partial() const { return v_; }

 private:
  const TriangularProductSpec& spec_;
  long step_ = 0;
  BigRational alpha_prod_{1};
  RationalVector elem_sym_;
  RationalVector v_;
};

RationalMatrix step_matrix(const TriangularProductSpec& spec, long k);

// M_1 M_2 ... M_n, left to right.
RationalMatrix partial_product_exact(const TriangularProductSpec& spec, long n);
RealMatrix partial_product_direct(const TriangularProductSpec& spec, long n,
                                  const PrecisionContext& ctx);
// Balanced-tree evaluation of the same product.
RealMatrix partial_product_pairwise(const TriangularProductSpec& spec, long n,
                                    const PrecisionContext& ctx);
RationalMatrix partial_product_pairwise_exact(const TriangularProductSpec& spec,
                                              long n);

// Last column of the n-step product (without the trailing 1), from the
// elementary-symmetric closed form; O(N) work per step.
RationalVector v_partial_closed_exact(const TriangularProductSpec& spec, long n);
RealVector v_partial_closed(const TriangularProductSpec& spec, long n,
                            const PrecisionContext& ctx);

enum class EvenVariant { Zeta4, Zeta6Uncorrected, Zeta6Corrected, Zeta6Alternate };

TriangularProductSpec zeta_even_spec(EvenVariant variant);
TriangularProductSpec zeta_odd_spec(int n);
// Accepts zeta3, zeta5, zeta4, zeta6-uncorrected, zeta6-corrected,
// zeta6-alternate; ParamError otherwise.
TriangularProductSpec spec_by_name(const std::string& name);

// Steps needed for `digits` digits (0.602 digits per step, 10% margin).
long terms_for_digits(long digits);

// sum_{i<=terms} 3/(i^2 C(2i,i)).
BigReal markov_zeta2(long terms, const PrecisionContext& ctx);

// Coefficient of z^order (order 0, 2, 4) in the partial sum over k <= terms
// of 3/(C(2k,k)(k^2-z^2)) prod_{j<k} (j^2-4z^2)/(j^2-z^2).
BigRational borwein_gf_coefficient_exact(int order, long terms);
BigReal borwein_gf_coefficient(int order, long terms, const PrecisionContext& ctx);
// The per-k summands of the above.
RationalVector borwein_gf_terms(int order, long terms);

// 3 sum_k [17H22 + H4 - 4 (H2)^2 - 3 H2/k^2 + 1/k^4]/(C(2k,k) k^2), indices k-1.
RationalVector zeta6_expansion_terms(long terms);
BigRational zeta6_expansion_exact(long terms);
BigReal zeta6_expansion(long terms, const PrecisionContext& ctx);

// 9 sum_{m<=terms} H_{m-1}^(4)/(C(2m,m) m^2).
BigReal delta_constant(long terms, const PrecisionContext& ctx);

}  // namespace zoo
