#pragma once

// Conic constructions for the normal forms. Multiplying x^3 + x + q = 0 by x
// and putting y = x^2 gives the circle (x + q/2)^2 + y^2 = q^2/4; the same
// step on x^3 - x + q' = 0 gives the hyperbola (x - q'/2)^2 - y^2 = q'^2/4.
// Both pass through the origin, and the remaining intersections with the
// parabola y = x^2 sit above the real roots.

#include <string>
#include <vector>

#include "tusi/forms.hpp"

namespace tusi {

enum class ConicKind { circle, hyperbola };

struct ConicSystem {
  ConicKind kind = ConicKind::circle;
  double center_x = 0.0;  // -q/2 for the circle, q'/2 for the hyperbola
  double param = 0.0;     // q^2/4: squared radius / squared semi-axis
  double q_value = 0.0;   // normal-form constant the conic was built from
  bool reflected = false; // built from x -> -x of the caller's form
  bool degenerate = false;

  /// Normal form the conic encodes (after any reflection).
  NormalForm normal_form() const;
  double semi_axis() const;
  /// Left-hand side minus right-hand side of the conic equation.
  double residual(double x, double y) const noexcept;
};

/// Circle for sign = +1 (normalized to q < 0), hyperbola for sign = -1
/// (normalized to q' > 0). q = 0 gives a degenerate system.
ConicSystem build_conic(const NormalForm& f);

struct IntersectionPoint {
  double x;
  double y;
  int multiplicity;
};

/// Nontrivial intersections with y = x^2, ascending in x. Coordinates are in
/// the conic's own frame (negate x to undo a reflection). A degenerate
/// system returns every real root of its normal form, origin included.
std::vector<IntersectionPoint> intersect_with_parabola(const ConicSystem& c);

struct ViewWindow {
  double xmin = -1.5;
  double xmax = 1.5;
  double ymin = -1.5;
  double ymax = 1.5;

  void validate() const;
};

/// Standalone SVG 1.1 document: axes, parabola, conic, intersection marks.
std::string emit_svg(const ConicSystem& c, const ViewWindow& window);

/// alpha^2 - alpha^3 and alpha^3 + alpha with the line y = 4/27.
std::string emit_tusi_split_svg(const ViewWindow& window);

/// alpha^(n-1) - alpha^n for n = 2..n_max.
std::string emit_phi_family_svg(int n_max, const ViewWindow& window);

}  // namespace tusi
