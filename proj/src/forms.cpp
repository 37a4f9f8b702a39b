#include "tusi/forms.hpp"

#include <cmath>
#include <string>

#include "tusi/classify.hpp"
#include "tusi/error.hpp"

namespace tusi {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw InputError(std::string(what) + " must be finite");
  }
}

}  // namespace

AffineMap::AffineMap(double scale, double shift) : scale_(scale), shift_(shift) {
  require_finite(scale, "map scale");
  require_finite(shift, "map shift");
  if (scale == 0.0) throw InputError("map scale must be nonzero");
}

AffineMap AffineMap::inverse() const { return {1.0 / scale_, -shift_ / scale_}; }

AffineMap AffineMap::then(const AffineMap& inner) const {
  return {scale_ * inner.scale_, scale_ * inner.shift_ + shift_};
}

GeneralCubic::GeneralCubic(double a3, double a2, double a1, double a0)
    : a3_(a3), a2_(a2), a1_(a1), a0_(a0) {
  require_finite(a3, "a3");
  require_finite(a2, "a2");
  require_finite(a1, "a1");
  require_finite(a0, "a0");
  if (a3 == 0.0) throw InputError("leading coefficient a3 is zero: not a cubic");
}

ReducedForm::ReducedForm(double p, double q) : p_(p), q_(q) {
  require_finite(p, "p");
  require_finite(q, "q");
}

NormalForm::NormalForm(int sign, double q) : sign_(sign), q_(q) {
  if (sign != 1 && sign != -1) throw InputError("normal form sign must be +1 or -1");
  require_finite(q, "q");
}

TusiForm::TusiForm(double delta) : delta_(delta) { require_finite(delta, "delta"); }

TusiGeneralForm::TusiGeneralForm(double b, double c) : b_(b), c_(c) {
  require_finite(b, "b");
  require_finite(c, "c");
  if (!(b > 0.0)) throw InputError("x^3 - b x^2 + c requires b > 0");
}

QuadraticTusiForm::QuadraticTusiForm(double b, double c) : b_(b), c_(c) {
  require_finite(b, "b");
  require_finite(c, "c");
  if (!(b > 0.0)) throw InputError("x^2 - b x + c requires b > 0");
}

GeneralizedTusiForm::GeneralizedTusiForm(int n, double delta) : n_(n), delta_(delta) {
  if (n < 2) throw InputError("generalized form requires n >= 2");
  require_finite(delta, "delta");
}

Polynomial GeneralizedTusiForm::polynomial() const {
  std::vector<double> coeffs(static_cast<std::size_t>(n_) + 1, 0.0);
  coeffs[0] = 1.0;
  coeffs[1] = -1.0;
  coeffs.back() += delta_ * maximizer(n_).phi_star;
  return Polynomial(std::move(coeffs));
}

Reduction<ReducedForm> reduce_general(const GeneralCubic& c) {
  const double b = c.a2() / c.a3();
  const double lin = c.a1() / c.a3();
  const double d = c.a0() / c.a3();
  if (!std::isfinite(b) || !std::isfinite(lin) || !std::isfinite(d)) {
    throw InputError("coefficients overflow after dividing by a3");
  }
  const double t = -b / 3.0;
  double p = lin - b * b / 3.0;
  // q is the monic cubic evaluated at the shift point.
  const double q = ((t + b) * t + lin) * t + d;

  bool snapped = false;
  if (p != 0.0 && std::abs(p) <= kClassTolerance * (std::abs(lin) + b * b / 3.0)) {
    p = 0.0;
    snapped = true;
  }
  return {ReducedForm(p, q), AffineMap(1.0, t), snapped};
}

Reduction<NormalForm> normalize(const ReducedForm& r) {
  if (r.p() == 0.0) {
    throw PreconditionError("normalize requires p != 0 (use the cube-root path for p = 0)");
  }
  const double ap = std::abs(r.p());
  const double root = std::sqrt(ap);
  const int sign = r.p() > 0.0 ? 1 : -1;
  return {NormalForm(sign, r.q() / (ap * root)), AffineMap(root, 0.0)};
}

Reduction<TusiForm> reduced_to_tusi(const ReducedForm& r) {
  if (!(r.p() < 0.0)) throw PreconditionError("reduced_to_tusi requires p < 0");
  const double m = -r.p();
  const double sqrt_neg_p_cubed = m * std::sqrt(m);
  const double delta = 0.5 + 3.0 * std::sqrt(3.0) * r.q() / (4.0 * sqrt_neg_p_cubed);
  return {TusiForm(delta), AffineMap(std::sqrt(3.0 * m), -std::sqrt(m / 3.0))};
}

Reduction<ReducedForm> tusi_to_reduced(const TusiForm& t) {
  return {ReducedForm(-1.0 / 3.0, (4.0 * t.delta() - 2.0) / 27.0), AffineMap(1.0, 1.0 / 3.0)};
}

TusiGeneralReduction general_to_tusi_general(const GeneralCubic& c) {
  if (c.a1() != 0.0) {
    throw InputError("cubic has a linear term; reduce it with reduce_general instead");
  }
  if (c.a2() == 0.0) throw InputError("cubic has no quadratic term: not of the form x^3 - b x^2 + c");
  double b = -c.a2() / c.a3();
  double cc = c.a0() / c.a3();
  AffineMap reflection;
  if (b < 0.0) {
    // x -> -x turns x^3 - b x^2 + c into -(x^3 + b x^2 - c).
    b = -b;
    cc = -cc;
    reflection = AffineMap(-1.0, 0.0);
  }
  TusiGeneralForm form(b, cc);
  return {form, reflection, TusiForm(form.delta()), reflection.then(AffineMap(b, 0.0))};
}

double phi(double alpha) noexcept { return alpha * alpha * (1.0 - alpha); }

double phi_n(int n, double alpha) {
  if (n < 2) throw InputError("phi_n requires n >= 2");
  return std::pow(alpha, n - 1) * (1.0 - alpha);
}

}  // namespace tusi
