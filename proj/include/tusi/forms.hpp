#pragma once

// Canonical representations of real cubic (and quadratic / degree-n) equations
// together with the affine substitutions that move between them.
//
// Every reduction returns the new form and an AffineMap expressing the
// previous variable in terms of the new one, x = scale * y + shift, so roots
// found in a canonical form can be pulled back to the caller's variable.

#include "tusi/polynomial.hpp"

namespace tusi {

/// Relative tolerance used to snap values onto classification boundaries.
inline constexpr double kClassTolerance = 1e-12;

/// x = scale * y + shift, with y the transformed variable.
class AffineMap {
 public:
  AffineMap() = default;
  AffineMap(double scale, double shift);

  static AffineMap identity() { return {}; }

  double scale() const noexcept { return scale_; }
  double shift() const noexcept { return shift_; }

  double apply(double y) const noexcept { return scale_ * y + shift_; }
  double invert(double x) const noexcept { return (x - shift_) / scale_; }
  AffineMap inverse() const;

  /// Composition with an inner (later) reduction. If *this maps y -> x and
  /// `inner` maps z -> y, the result maps z -> x. Reductions are applied
  /// innermost-first, so a pipeline original -> A -> B composes as
  /// map_A.then(map_B).
  AffineMap then(const AffineMap& inner) const;

  friend bool operator==(const AffineMap&, const AffineMap&) = default;

 private:
  double scale_ = 1.0;
  double shift_ = 0.0;
};

/// a3 x^3 + a2 x^2 + a1 x + a0 with a3 != 0.
class GeneralCubic {
 public:
  GeneralCubic(double a3, double a2, double a1, double a0);

  double a3() const noexcept { return a3_; }
  double a2() const noexcept { return a2_; }
  double a1() const noexcept { return a1_; }
  double a0() const noexcept { return a0_; }
  Polynomial polynomial() const { return Polynomial({a3_, a2_, a1_, a0_}); }

 private:
  double a3_, a2_, a1_, a0_;
};

/// x^3 + p x + q.
class ReducedForm {
 public:
  ReducedForm(double p, double q);

  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }
  Polynomial polynomial() const { return Polynomial({1.0, 0.0, p_, q_}); }

 private:
  double p_, q_;
};

/// x^3 + sign * x + q with sign in {+1, -1}.
class NormalForm {
 public:
  NormalForm(int sign, double q);

  int sign() const noexcept { return sign_; }
  double q() const noexcept { return q_; }
  Polynomial polynomial() const {
    return Polynomial({1.0, 0.0, static_cast<double>(sign_), q_});
  }

 private:
  int sign_;
  double q_;
};

/// alpha^3 - alpha^2 + (4/27) delta.
class TusiForm {
 public:
  explicit TusiForm(double delta);

  double delta() const noexcept { return delta_; }
  double constant() const noexcept { return 4.0 * delta_ / 27.0; }
  Polynomial polynomial() const { return Polynomial({1.0, -1.0, 0.0, constant()}); }

 private:
  double delta_;
};

/// x^3 - b x^2 + c with b > 0. Rescaling x = b * alpha gives the Tusi form
/// with delta = 27 c / (4 b^3).
class TusiGeneralForm {
 public:
  TusiGeneralForm(double b, double c);

  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  double delta() const noexcept { return 27.0 * c_ / (4.0 * b_ * b_ * b_); }
  Polynomial polynomial() const { return Polynomial({1.0, -b_, 0.0, c_}); }

 private:
  double b_, c_;
};

/// x^2 - b x + c with b > 0; the unit form alpha^2 - alpha + delta/4 is b = 1.
class QuadraticTusiForm {
 public:
  QuadraticTusiForm(double b, double c);
  static QuadraticTusiForm from_delta(double delta) { return {1.0, delta / 4.0}; }

  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  double delta() const noexcept { return 4.0 * c_ / (b_ * b_); }
  Polynomial polynomial() const { return Polynomial({1.0, -b_, c_}); }

 private:
  double b_, c_;
};

/// alpha^n - alpha^(n-1) + delta * phi_n* with n >= 2, equivalently
/// phi_n(alpha) = delta * phi_n*.
class GeneralizedTusiForm {
 public:
  GeneralizedTusiForm(int n, double delta);

  int n() const noexcept { return n_; }
  double delta() const noexcept { return delta_; }
  Polynomial polynomial() const;

 private:
  int n_;
  double delta_;
};

template <class Form>
struct Reduction {
  Form form;
  AffineMap map;  // previous variable in terms of form's variable
  bool boundary_snapped = false;
};

/// Divides by a3 and shifts away the quadratic term. A p within
/// kClassTolerance of zero (relative to the terms it was formed from) is
/// snapped to exactly 0 and flagged.
Reduction<ReducedForm> reduce_general(const GeneralCubic& c);

/// Scales x = |p|^(1/2) y so that p becomes +-1. Requires p != 0.
Reduction<NormalForm> normalize(const ReducedForm& r);

/// For p < 0: x = sqrt(-3p) alpha - sqrt(-p/3),
/// delta = 1/2 + 3 sqrt(3) q / (4 sqrt(-p^3)).
Reduction<TusiForm> reduced_to_tusi(const ReducedForm& r);

/// alpha = x + 1/3 turns the Tusi form into x^3 - x/3 + (4 delta - 2)/27.
Reduction<ReducedForm> tusi_to_reduced(const TusiForm& t);

struct TusiGeneralReduction {
  TusiGeneralForm form;
  AffineMap reflection;  // x = +-x', scale -1 when the input had b < 0
  TusiForm tusi;
  AffineMap map;  // original x in terms of the Tusi variable alpha
};

/// Accepts cubics whose monic form is x^3 - b x^2 + c (no linear term,
/// nonzero quadratic term).
TusiGeneralReduction general_to_tusi_general(const GeneralCubic& c);

double phi(double alpha) noexcept;
double phi_n(int n, double alpha);

}  // namespace tusi
