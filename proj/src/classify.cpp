#include "tusi/classify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tusi/error.hpp"

namespace tusi {

namespace {

constexpr double kThird = 1.0 / 3.0;
constexpr double kTwoThirds = 2.0 / 3.0;

RootInterval exact(double x, int multiplicity = 1) {
  return {x, x, IntervalKind::exact_point, multiplicity};
}

RootInterval open(double lo, double hi) { return {lo, hi, IntervalKind::open, 1}; }

bool near(double value, double target) {
  return std::abs(value - target) <= kClassTolerance * (1.0 + std::abs(value));
}

// Strict sign change, or an exact zero at one end.
void verify_bracket(const Polynomial& f, const RootInterval& iv) {
  const double a = f(iv.lo);
  const double b = f(iv.hi);
  if ((a > 0.0 && b > 0.0) || (a < 0.0 && b < 0.0)) {
    throw std::logic_error("tightened bracket has no sign change");
  }
}

}  // namespace

bool RootInterval::contains(double x) const noexcept {
  switch (kind) {
    case IntervalKind::exact_point:
      return x == lo;
    case IntervalKind::half_open:
      return x >= lo && x < hi;
    case IntervalKind::open:
      break;
  }
  return x > lo && x < hi;
}

std::string_view to_string(Regime r) noexcept {
  switch (r) {
    case Regime::delta_gt_1: return "delta_gt_1";
    case Regime::delta_eq_1: return "delta_eq_1";
    case Regime::delta_in_0_1: return "delta_in_0_1";
    case Regime::delta_eq_0: return "delta_eq_0";
    case Regime::delta_lt_0: return "delta_lt_0";
    case Regime::p_positive_single: return "p_positive_single";
    case Regime::p_zero_single: return "p_zero_single";
    case Regime::p_zero_triple: return "p_zero_triple";
    case Regime::quadratic_none: return "quadratic_none";
    case Regime::quadratic_double: return "quadratic_double";
    case Regime::quadratic_two: return "quadratic_two";
    case Regime::odd_delta_lt_0: return "odd_delta_lt_0";
    case Regime::even_delta_lt_0: return "even_delta_lt_0";
    case Regime::any_delta_eq_0: return "any_delta_eq_0";
    case Regime::odd_delta_in_0_1: return "odd_delta_in_0_1";
    case Regime::even_delta_in_0_1: return "even_delta_in_0_1";
    case Regime::odd_delta_eq_1: return "odd_delta_eq_1";
    case Regime::even_delta_eq_1: return "even_delta_eq_1";
    case Regime::odd_delta_gt_1: return "odd_delta_gt_1";
    case Regime::even_delta_gt_1: return "even_delta_gt_1";
  }
  return "unknown";
}

std::string_view to_string(IntervalKind k) noexcept {
  switch (k) {
    case IntervalKind::open: return "open";
    case IntervalKind::half_open: return "half_open";
    case IntervalKind::exact_point: return "exact_point";
  }
  return "unknown";
}

Classification map_classification(const Classification& c, const AffineMap& map) {
  Classification out = c;
  for (auto& iv : out.intervals) {
    double lo = map.apply(iv.lo);
    double hi = map.apply(iv.hi);
    if (iv.kind == IntervalKind::exact_point) {
      iv.lo = iv.hi = lo;
    } else {
      iv.lo = std::min(lo, hi);
      iv.hi = std::max(lo, hi);
    }
  }
  if (map.scale() < 0.0) std::reverse(out.intervals.begin(), out.intervals.end());
  return out;
}

SnappedDelta snap_delta(double delta) noexcept {
  if (near(delta, 0.0)) return {0.0, delta != 0.0};
  if (near(delta, 1.0)) return {1.0, delta != 1.0};
  return {delta, false};
}

Discriminant discriminant(const ReducedForm& r) {
  const double p = r.p();
  const double q = r.q();
  Discriminant d;
  d.delta_cap = -(q * q / 4.0 + p * p * p / 27.0);
  if (p < 0.0) {
    const auto [delta, snapped] = snap_delta(reduced_to_tusi(r).form.delta());
    d.delta_tusi = delta;
    d.boundary_snapped = snapped;
    if (delta == 0.0 || delta == 1.0) {
      d.sign = 0;
    } else {
      d.sign = (delta > 0.0 && delta < 1.0) ? 1 : -1;
      const int raw = d.delta_cap > 0.0 ? 1 : (d.delta_cap < 0.0 ? -1 : 0);
      if (raw != d.sign) {
        throw std::logic_error("discriminant sign disagrees with delta outside the boundary band");
      }
    }
  } else {
    d.sign = (p == 0.0 && q == 0.0) ? 0 : -1;
  }
  return d;
}

Maximizer maximizer(int n) {
  if (n < 2) throw InputError("maximizer requires n >= 2");
  const double nd = n;
  const double alpha_star = (nd - 1.0) / nd;
  double phi_star;
  if (n <= 30) {
    phi_star = std::pow(nd - 1.0, n - 1) / std::pow(nd, n);
  } else {
    // (n-1) ln(n-1) - n ln n = (n-1) ln(1 - 1/n) - ln n
    phi_star = std::exp((nd - 1.0) * std::log1p(-1.0 / nd) - std::log(nd));
  }
  return {alpha_star, phi_star};
}

namespace bounds {

RootInterval bound_tightening(const NormalForm& f) {
  const double q = f.q();
  RootInterval iv;
  if (f.sign() > 0) {
    if (q == 0.0) return exact(0.0);
    iv = q < 0.0 ? open(0.0, -q) : open(-q, 0.0);
  } else {
    if (q == 0.0) throw PreconditionError("x^3 - x has the exact roots -1, 0, 1");
    const double qa = std::abs(q);
    const double lower = std::min(-std::sqrt(2.0), -std::cbrt(2.0 * qa));
    // Roots of x^3 - x + q' lie in [L, 1) for q' >= 0; reflect otherwise.
    iv = q >= 0.0 ? RootInterval{lower, 1.0, IntervalKind::half_open, 1}
                  : RootInterval{-1.0, -lower, IntervalKind::open, 1};
    return iv;
  }
  verify_bracket(f.polynomial(), iv);
  return iv;
}

RootInterval negative_root_bracket(const NormalForm& f) {
  if (f.sign() != -1 || !(f.q() > 0.0)) {
    throw PreconditionError("negative_root_bracket needs x^3 - x + q' with q' > 0");
  }
  const double lower = std::min(-std::sqrt(2.0), -std::cbrt(2.0 * f.q()));
  RootInterval iv{lower, 0.0, IntervalKind::open, 1};
  verify_bracket(f.polynomial(), iv);
  return iv;
}

RootInterval bound_tightening(const TusiForm& t) {
  const double d = t.delta();
  const double reach = 1.0 + 4.0 * std::abs(d) / 27.0;
  RootInterval iv;
  if (d > 1.0) {
    iv = open(-reach, -kThird);
  } else if (d < 0.0) {
    iv = open(1.0, reach);
  } else {
    throw PreconditionError("Tusi form has bounded root intervals for 0 <= delta <= 1");
  }
  verify_bracket(t.polynomial(), iv);
  return iv;
}

}  // namespace bounds

Classification classify_tusi(const TusiForm& t) {
  const auto [d, snapped] = snap_delta(t.delta());
  Classification c;
  c.boundary_snapped = snapped;
  if (d > 1.0) {
    c.regime = Regime::delta_gt_1;
    c.intervals = {bounds::bound_tightening(TusiForm(d))};
  } else if (d == 1.0) {
    c.regime = Regime::delta_eq_1;
    c.intervals = {exact(-kThird), exact(kTwoThirds, 2)};
  } else if (d > 0.0) {
    c.regime = Regime::delta_in_0_1;
    c.intervals = {open(-kThird, 0.0), open(0.0, kTwoThirds), open(kTwoThirds, 1.0)};
  } else if (d == 0.0) {
    c.regime = Regime::delta_eq_0;
    c.intervals = {exact(0.0, 2), exact(1.0)};
  } else {
    c.regime = Regime::delta_lt_0;
    c.intervals = {bounds::bound_tightening(TusiForm(d))};
  }
  return c;
}

Classification classify_tusi_general(const TusiGeneralForm& g) {
  return map_classification(classify_tusi(TusiForm(g.delta())), AffineMap(g.b(), 0.0));
}

Classification classify_reduced(const ReducedForm& r) {
  const double p = r.p();
  const double q = r.q();
  Classification c;
  if (p == 0.0) {
    if (q == 0.0) {
      c.regime = Regime::p_zero_triple;
      c.intervals = {exact(0.0, 3)};
    } else {
      c.regime = Regime::p_zero_single;
      const double reach = 1.0 + std::abs(q);
      c.intervals = {q < 0.0 ? open(0.0, reach) : open(-reach, 0.0)};
    }
    return c;
  }
  if (p > 0.0) {
    const auto normal = normalize(r);
    c.regime = Regime::p_positive_single;
    c.intervals = {bounds::bound_tightening(normal.form)};
    return map_classification(c, normal.map);
  }

  const auto tusi = reduced_to_tusi(r);
  c = map_classification(classify_tusi(tusi.form), tusi.map);
  // Boundary roots have closed forms in the reduced variable; use them
  // instead of the rounded pull-back.
  const double h = std::sqrt(-p / 3.0);
  if (c.regime == Regime::delta_eq_1) {
    c.intervals = {exact(-2.0 * h), exact(h, 2)};
  } else if (c.regime == Regime::delta_eq_0) {
    c.intervals = {exact(-h, 2), exact(2.0 * h)};
  }
  return c;
}

Classification classify_quadratic(const QuadraticTusiForm& qt) {
  const auto [d, snapped] = snap_delta(qt.delta());
  const double b = qt.b();
  Classification c;
  c.boundary_snapped = snapped;
  if (d > 1.0) {
    c.regime = Regime::quadratic_none;
  } else if (d == 1.0) {
    c.regime = Regime::quadratic_double;
    c.intervals = {exact(b / 2.0, 2)};
  } else {
    c.regime = Regime::quadratic_two;
    const double cc = d == 0.0 ? 0.0 : qt.c();
    const double s = std::sqrt(b * b - 4.0 * cc);
    const double big = (b + s) / 2.0;
    // Product of the roots is c; avoids cancellation in b/2 - s/2.
    const double small = cc / big;
    c.intervals = {exact(small), exact(big)};
  }
  return c;
}

Classification classify_generalized(const GeneralizedTusiForm& g) {
  const int n = g.n();
  const bool odd = (n % 2) == 1;
  const auto [a_star, phi_star] = maximizer(n);
  const auto [d, snapped] = snap_delta(g.delta());
  const double reach = 1.0 + std::abs(d) * phi_star;

  Classification c;
  c.boundary_snapped = snapped;
  if (d < 0.0) {
    c.regime = odd ? Regime::odd_delta_lt_0 : Regime::even_delta_lt_0;
    if (!odd) c.intervals.push_back(open(-reach, 0.0));
    c.intervals.push_back(open(1.0, reach));
  } else if (d == 0.0) {
    c.regime = Regime::any_delta_eq_0;
    c.intervals = {exact(0.0, n - 1), exact(1.0)};
  } else if (d < 1.0) {
    c.regime = odd ? Regime::odd_delta_in_0_1 : Regime::even_delta_in_0_1;
    if (odd) c.intervals.push_back(open(-a_star, 0.0));
    c.intervals.push_back(open(0.0, a_star));
    c.intervals.push_back(open(a_star, 1.0));
  } else if (d == 1.0) {
    c.regime = odd ? Regime::odd_delta_eq_1 : Regime::even_delta_eq_1;
    if (odd) c.intervals.push_back({-a_star, 0.0, IntervalKind::half_open, 1});
    c.intervals.push_back(exact(a_star, 2));
  } else {
    c.regime = odd ? Regime::odd_delta_gt_1 : Regime::even_delta_gt_1;
    if (odd) {
      // phi_n is decreasing on (-inf, 0] with phi_n(-alpha*) = (2n-1) phi*,
      // so the root passes -alpha* exactly at delta = 2n - 1.
      const double turn = 2.0 * n - 1.0;
      if (near(d, turn)) {
        c.intervals.push_back(exact(-a_star));
        c.boundary_snapped = c.boundary_snapped || d != turn;
      } else if (d < turn) {
        c.intervals.push_back(open(-a_star, 0.0));
      } else {
        c.intervals.push_back(open(-reach, -a_star));
      }
    }
  }

  const GeneralizedTusiForm snapped_form(n, d);
  const Polynomial f = snapped_form.polynomial();
  for (const auto& iv : c.intervals) {
    if (iv.kind != IntervalKind::exact_point) verify_bracket(f, iv);
  }
  return c;
}

Polynomial factor_u(int n) {
  if (n < 2) throw InputError("factor_u requires n >= 2");
  const double nd = n;
  const double ratio = (nd - 1.0) / nd;
  std::vector<double> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n));
  coeffs.push_back(1.0);
  // alpha^(n-i) carries -(n-1)^(i-2) / n^(i-1), i = 2..n.
  double power = 1.0;
  for (int i = 2; i <= n; ++i) {
    coeffs.push_back(-power / nd);
    power *= ratio;
  }
  return Polynomial(std::move(coeffs));
}

Polynomial factor_v(int n) {
  if (n < 2) throw InputError("factor_v requires n >= 2");
  const double nd = n;
  const double ratio = (nd - 1.0) / nd;
  std::vector<double> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n - 1));
  // alpha^(n-2-j) carries (n-1)^(j-1) (n-1-j) / n^j, j = 0..n-2.
  double power = 1.0;
  for (int j = 0; j <= n - 2; ++j) {
    coeffs.push_back(power * (nd - 1.0 - j) / (nd - 1.0));
    power *= ratio;
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace tusi
