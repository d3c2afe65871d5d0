#pragma once

// Special functions over BigReal: gamma family, Bessel J0 and K_nu,
// AGM-based complete elliptic integrals, Jacobi theta constants and the
// nome -> modulus map, sinc.
//
// Every function works at the working precision of the supplied context and
// aims at the accuracy stated next to it; domain violations throw
// DomainError.

#include "zoo/numeric.hpp"

namespace zoo {

// Relative error <= 10^-out_digits for x > 0. Argument shift followed by
// the Stirling series, truncated by the first omitted Bernoulli term.
BigReal gamma(const BigReal& x, const PrecisionContext& ctx);
BigReal log_gamma(const BigReal& x, const PrecisionContext& ctx);
BigReal digamma(const BigReal& x, const PrecisionContext& ctx);
BigReal beta(const BigReal& a, const BigReal& b, const PrecisionContext& ctx);

// Absolute error <= 10^-out_digits for |x| <= 1e6. Power series (with
// cancellation guard digits) below the switchover returned by
// bessel_j0_switchover(), Hankel asymptotic expansion above it.
BigReal bessel_j0(const BigReal& x, const PrecisionContext& ctx);
double bessel_j0_switchover(const PrecisionContext& ctx);

// K_nu(x) for x >= 1, nu >= 0. Half-integer orders use the terminating
// closed form; other orders integrate exp(-x cosh t) cosh(nu t) over t with
// the trapezoidal rule (the integrand decays double exponentially).
BigReal bessel_k(const BigReal& nu, const BigReal& x,
                 const PrecisionContext& ctx);
// Quadrature path regardless of nu. `density` multiplies the number of
// nodes per unit length (1 = default step); used for self-convergence checks.
BigReal bessel_k_integral(const BigReal& nu, const BigReal& x,
                          const PrecisionContext& ctx, int density = 1);
// x^nu K_nu(x) e^x, finite for large x; avoids under/overflow in lattice sums.
BigReal bessel_k_scaled_power(const BigReal& nu, const BigReal& x,
                              const PrecisionContext& ctx);

BigReal agm(const BigReal& a, const BigReal& b, const PrecisionContext& ctx);
// K and E of modulus k in [0, 1). k = 0 returns pi/2 exactly; k = 1 throws.
BigReal elliptic_K(const BigReal& k, const PrecisionContext& ctx);
BigReal elliptic_E(const BigReal& k, const PrecisionContext& ctx);
// Same, from the complementary modulus k' = sqrt(1 - k^2) which callers near
// k = 1 know more accurately than k itself.
BigReal elliptic_K_from_complement(const BigReal& k_prime,
                                   const PrecisionContext& ctx);
BigReal elliptic_E_from_complement(const BigReal& k_prime,
                                   const PrecisionContext& ctx);

// Theta constants at nome q in (0, 1); n and -n terms are paired and the
// series stops once q^(n^2) < 10^-(working digits + 5).
BigReal theta2(const BigReal& q, const PrecisionContext& ctx);
BigReal theta3(const BigReal& q, const PrecisionContext& ctx);
BigReal theta4(const BigReal& q, const PrecisionContext& ctx);

struct EllipticPair {
  BigReal k;
  BigReal k_prime;
  BigReal K;
  BigReal K_prime;
  BigReal E;
  BigReal E_prime;

  // E K' + E' K - K K' - pi/2.
  BigReal legendre_residual() const;
};

// k = theta2^2/theta3^2 and k' = theta4^2/theta3^2, then K, K', E, E' by AGM.
EllipticPair nome_to_modulus(const BigReal& q, const PrecisionContext& ctx);
// Fills the pair from k' alone.
EllipticPair modulus_from_complement(const BigReal& k_prime,
                                     const PrecisionContext& ctx);

// sin(x)/x with sinc(0) = 1.
BigReal sinc(const BigReal& x, const PrecisionContext& ctx);

}  // namespace zoo
