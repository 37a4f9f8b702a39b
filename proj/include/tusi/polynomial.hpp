#pragma once

#include <span>
#include <vector>

namespace tusi {

/// Dense real polynomial, coefficients stored highest degree first
/// (a_n, a_{n-1}, ..., a_0).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const double> coeffs() const noexcept { return coeffs_; }

  double operator()(double x) const noexcept;
  Polynomial derivative() const;

  /// Largest coefficient magnitude; used to scale residual tolerances.
  double max_abs_coeff() const noexcept;

 private:
  std::vector<double> coeffs_;
};

/// Evaluates p and p' together in one Horner pass.
struct ValueAndSlope {
  double value;
  double slope;
};
ValueAndSlope eval_with_slope(std::span<const double> coeffs, double x) noexcept;

}  // namespace tusi
