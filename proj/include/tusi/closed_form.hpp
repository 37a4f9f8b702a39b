#pragma once

// Cardano's formula in the regimes where it stays real, plus the quadratic
// formula. Nothing here touches complex arithmetic: a reduced form with three
// real roots (or a double root) is refused with RegimeError.

#include <utility>
#include <vector>

#include "tusi/forms.hpp"

namespace tusi {

struct ClosedFormTrace {
  double s = 0.0;                        // sqrt(q^2/4 + p^3/27) >= 0
  std::pair<double, double> cube_args;   // (-q/2 + s, -q/2 - s)
  double root = 0.0;
};

/// sign(v) |v|^(1/3).
double real_cbrt(double v) noexcept;

/// x^3 + x + q. Requires sign = +1.
ClosedFormTrace cardano_normal(const NormalForm& f);

/// x^3 + p x + q for p > 0, p = 0, or p < 0 with Delta < 0.
ClosedFormTrace cardano_reduced(const ReducedForm& r);

/// Real roots of x^2 - b x + c, ascending; a double root is listed once.
std::vector<double> quadratic_roots(const QuadraticTusiForm& qt);

}  // namespace tusi
