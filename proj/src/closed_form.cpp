#include "tusi/closed_form.hpp"

#include <cmath>

#include "tusi/classify.hpp"
#include "tusi/error.hpp"

namespace tusi {

namespace {

// Cube arguments u, v with u + v = -q and u v = -p^3/27 (passed in as
// `product`). The one with the larger magnitude is formed without
// cancellation and the other recovered from the product.
ClosedFormTrace cardano_core(double q, double s, double product) {
  ClosedFormTrace t;
  t.s = s;
  if (q <= 0.0) {
    const double u = -q / 2.0 + s;
    const double v = u != 0.0 ? product / u : 0.0;
    t.cube_args = {u, v};
  } else {
    const double v = -q / 2.0 - s;
    const double u = product / v;
    t.cube_args = {u, v};
  }
  t.root = real_cbrt(t.cube_args.first) + real_cbrt(t.cube_args.second);
  return t;
}

}  // namespace

double real_cbrt(double v) noexcept { return std::cbrt(v); }

ClosedFormTrace cardano_normal(const NormalForm& f) {
  if (f.sign() != 1) {
    throw PreconditionError("cardano_normal requires the positive normal form x^3 + x + q");
  }
  const double q = f.q();
  const double s = std::hypot(q / 2.0, std::sqrt(1.0 / 27.0));
  return cardano_core(q, s, -1.0 / 27.0);
}

ClosedFormTrace cardano_reduced(const ReducedForm& r) {
  const double p = r.p();
  const double q = r.q();
  if (p == 0.0) {
    ClosedFormTrace t;
    t.s = std::abs(q) / 2.0;
    t.cube_args = {-q / 2.0 + t.s, -q / 2.0 - t.s};
    t.root = real_cbrt(-q);
    return t;
  }
  if (p > 0.0) {
    // Scale to x^3 + x + q' and back: every trace quantity scales by p^(3/2).
    const auto normal = normalize(r);
    const ClosedFormTrace n = cardano_normal(normal.form);
    const double root_p = normal.map.scale();
    const double k = p * root_p;
    ClosedFormTrace t;
    t.s = n.s * k;
    t.cube_args = {n.cube_args.first * k, n.cube_args.second * k};
    t.root = n.root * root_p;
    return t;
  }
  const Discriminant d = discriminant(r);
  if (d.sign >= 0) {
    throw RegimeError(
        d.sign > 0 ? "three-real-root regime: Cardano needs complex arithmetic, use the iterative path"
                   : "double-root boundary: roots are supplied exactly by classification");
  }
  // s^2 = -Delta = q^2/4 + p^3/27 > 0; the factored form keeps it accurate
  // near the boundary.
  const double m = -p;
  const double h = m * std::sqrt(m) / std::sqrt(27.0);  // sqrt(-p^3/27)
  const double s = std::sqrt((std::abs(q) / 2.0 - h) * (std::abs(q) / 2.0 + h));
  return cardano_core(q, s, m * m * m / 27.0);
}

std::vector<double> quadratic_roots(const QuadraticTusiForm& qt) {
  std::vector<double> roots;
  for (const auto& iv : classify_quadratic(qt).intervals) roots.push_back(iv.lo);
  return roots;
}

}  // namespace tusi
