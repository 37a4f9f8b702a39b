#pragma once

// Root counting, multiplicities and isolation intervals for the canonical
// forms. Every case is decided structurally from the sign of delta (or
// Delta) relative to its boundaries; nothing here is inferred numerically
// from polynomial values except the sign checks on tightened brackets.

#include <optional>
#include <string_view>
#include <vector>

#include "tusi/forms.hpp"

namespace tusi {

enum class IntervalKind { open, half_open, exact_point };

/// One isolated root. For exact_point, lo == hi is the root itself; for
/// half_open the interval is [lo, hi).
struct RootInterval {
  double lo = 0.0;
  double hi = 0.0;
  IntervalKind kind = IntervalKind::open;
  int multiplicity = 1;

  bool contains(double x) const noexcept;

  friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

enum class Regime {
  // Tusi form and anything pulled back through it.
  delta_gt_1,
  delta_eq_1,
  delta_in_0_1,
  delta_eq_0,
  delta_lt_0,
  // Reduced forms that never reach a Tusi form.
  p_positive_single,
  p_zero_single,
  p_zero_triple,
  // Quadratic.
  quadratic_none,
  quadratic_double,
  quadratic_two,
  // Generalized degree-n form, split by parity of n.
  odd_delta_lt_0,
  even_delta_lt_0,
  any_delta_eq_0,
  odd_delta_in_0_1,
  even_delta_in_0_1,
  odd_delta_eq_1,
  even_delta_eq_1,
  odd_delta_gt_1,
  even_delta_gt_1,
};

std::string_view to_string(Regime r) noexcept;
std::string_view to_string(IntervalKind k) noexcept;

struct Classification {
  std::vector<RootInterval> intervals;  // ascending, pairwise disjoint
  Regime regime = Regime::delta_in_0_1;
  bool boundary_snapped = false;

  int count() const noexcept { return static_cast<int>(intervals.size()); }

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Pulls every interval back through x = map(y); reverses order for a
/// negative scale.
Classification map_classification(const Classification& c, const AffineMap& map);

struct Discriminant {
  double delta_cap = 0.0;             // -(q^2/4 + p^3/27)
  std::optional<double> delta_tusi;   // only when p < 0
  int sign = 0;                       // sign of delta_cap after boundary snapping
  bool boundary_snapped = false;
};

/// Snaps delta onto 0 or 1 when within kClassTolerance * (1 + |delta|).
struct SnappedDelta {
  double value;
  bool snapped;
};
SnappedDelta snap_delta(double delta) noexcept;

Discriminant discriminant(const ReducedForm& r);

Classification classify_tusi(const TusiForm& t);
Classification classify_tusi_general(const TusiGeneralForm& g);
Classification classify_reduced(const ReducedForm& r);
Classification classify_quadratic(const QuadraticTusiForm& qt);
Classification classify_generalized(const GeneralizedTusiForm& g);

struct Maximizer {
  double alpha_star;
  double phi_star;
};
/// ((n-1)/n, (n-1)^(n-1)/n^n).
Maximizer maximizer(int n);

// Finite, sign-verified brackets for roots whose theorem interval is
// unbounded or given only loosely.
namespace bounds {

/// Positive normal form x^3 + x + q: the only root lies in (0, -q) for q < 0,
/// (-q, 0) for q > 0, and is exactly 0 for q = 0. Negative normal form
/// x^3 - x + q', q' > 0: every root lies in [L, 1) with
/// L = min(-sqrt 2, -(2q')^(1/3)); q' < 0 is handled by reflection.
RootInterval bound_tightening(const NormalForm& f);

/// Negative root of x^3 - x + q', q' > 0: [L, 0].
RootInterval negative_root_bracket(const NormalForm& f);

/// Tusi form with delta > 1 (root below -1/3) or delta < 0 (root above 1),
/// closed off with |alpha| <= 1 + 4|delta|/27.
RootInterval bound_tightening(const TusiForm& t);

}  // namespace bounds

// Auxiliary factors of phi_n(alpha) - phi_n*, highest degree first:
//   phi_n(alpha) - phi_n* = (alpha_n* - alpha) U_n(alpha)
//   U_n(alpha) = (alpha - alpha_n*) V_n(alpha)
// Kept for verification; the solvers never use them.
Polynomial factor_u(int n);
Polynomial factor_v(int n);

}  // namespace tusi
