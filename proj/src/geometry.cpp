#include "tusi/geometry.hpp"

#include <cmath>

#include "tusi/error.hpp"
#include "tusi/solve.hpp"

namespace tusi {

NormalForm ConicSystem::normal_form() const {
  return NormalForm(kind == ConicKind::circle ? 1 : -1, reflected ? -q_value : q_value);
}

double ConicSystem::semi_axis() const { return std::sqrt(param); }

double ConicSystem::residual(double x, double y) const noexcept {
  const double dx = x - center_x;
  return kind == ConicKind::circle ? dx * dx + y * y - param : dx * dx - y * y - param;
}

ConicSystem build_conic(const NormalForm& f) {
  ConicSystem c;
  c.q_value = f.q();
  c.kind = f.sign() > 0 ? ConicKind::circle : ConicKind::hyperbola;
  double q = f.q();
  if (q == 0.0) {
    c.degenerate = true;
    return c;
  }
  // The construction assumes q < 0 (circle) and q' > 0 (hyperbola).
  if ((c.kind == ConicKind::circle && q > 0.0) || (c.kind == ConicKind::hyperbola && q < 0.0)) {
    q = -q;
    c.reflected = true;
  }
  c.center_x = c.kind == ConicKind::circle ? -q / 2.0 : q / 2.0;
  c.param = q * q / 4.0;
  return c;
}

std::vector<IntersectionPoint> intersect_with_parabola(const ConicSystem& c) {
  const RootReport report = solve(ReducedForm(c.kind == ConicKind::circle ? 1.0 : -1.0,
                                              c.reflected ? -c.q_value : c.q_value));
  std::vector<IntersectionPoint> points;
  for (const auto& r : report.roots) {
    if (!c.degenerate && r.value == 0.0) continue;
    points.push_back({r.value, r.value * r.value, r.multiplicity});
  }
  return points;
}

void ViewWindow::validate() const {
  if (!(xmax > xmin) || !(ymax > ymin) || !std::isfinite(xmin) || !std::isfinite(xmax) ||
      !std::isfinite(ymin) || !std::isfinite(ymax)) {
    throw InputError("view window must have positive finite extent");
  }
}

}  // namespace tusi
