#pragma once

// Moments of the discrete normal distribution p(n) ~ q^{(n-offset)^2} and
// their closed forms in terms of complete elliptic integrals.
//
// Nome convention: weights q^{(n-offset)^2}; exp(-n^2/2) is q = e^{-1/2}.
// Everything here runs at >= 40 digits regardless of the caller's request.

#include <optional>

#include "zoo/numeric.hpp"
#include "zoo/specfun.hpp"

namespace zoo {

enum class ThetaOffset { Zero, Half };

struct ThetaMomentResult {
  BigReal q;
  ThetaOffset offset = ThetaOffset::Zero;
  int order = 0;
  BigReal direct_value;
  std::optional<BigReal> exact_value;
  EllipticPair elliptic;
};

inline constexpr long kThetaDigitsFloor = 40;

// sum_{n in Z} (n-offset)^order q^{(n-offset)^2}, order in {0, 2, 4}.
BigReal theta_moment_sum(const BigReal& q, ThetaOffset offset, int order,
                         const PrecisionContext& ctx);
// Direct sum plus the closed form of the same quantity.
ThetaMomentResult theta_moment(const BigReal& q, ThetaOffset offset, int order,
                               const PrecisionContext& ctx);

// K^2/pi^2 (E/K - k'^2)
BigReal second_moment_ratio_exact(const BigReal& q, const PrecisionContext& ctx);
// 3 sigma^4 + theta3^8 (k k')^2 / 8
BigReal fourth_moment_ratio_exact(const BigReal& q, const PrecisionContext& ctx);
// The theta3^8 (k k')^2 / 8 part alone.
BigReal fourth_moment_correction(const BigReal& q, const PrecisionContext& ctx);
// E K / pi^2
BigReal theta2_second_moment_ratio_exact(const BigReal& q, const PrecisionContext& ctx);

struct UnitVarianceSolution {
  BigReal c;
  BigReal k;
  BigReal k_prime;
  BigReal residual;  // second moment ratio at q = e^{-c}, minus 1
};

// c with sigma^2(e^{-c}) = 1, solved on log k'; c = pi K'/K.
UnitVarianceSolution solve_unit_variance(const PrecisionContext& ctx);
BigReal solve_unit_variance_c(const PrecisionContext& ctx);

}  // namespace zoo
