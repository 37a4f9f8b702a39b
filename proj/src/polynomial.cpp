#include "tusi/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "tusi/error.hpp"

namespace tusi {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw InputError("polynomial needs at least one coefficient");
  }
}

double Polynomial::operator()(double x) const noexcept {
  double acc = 0.0;
  for (double c : coeffs_) acc = acc * x + c;
  return acc;
}

Polynomial Polynomial::derivative() const {
  const int n = degree();
  if (n == 0) return Polynomial({0.0});
  std::vector<double> d;
  d.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    d.push_back(coeffs_[static_cast<std::size_t>(i)] * (n - i));
  }
  return Polynomial(std::move(d));
}

double Polynomial::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

ValueAndSlope eval_with_slope(std::span<const double> coeffs, double x) noexcept {
  double v = 0.0;
  double d = 0.0;
  for (double c : coeffs) {
    d = d * x + v;
    v = v * x + c;
  }
  return {v, d};
}

}  // namespace tusi
