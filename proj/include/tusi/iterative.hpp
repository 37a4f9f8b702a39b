#pragma once

// Bracketed refinement inside the isolation intervals produced by classify:
// bisection, Newton with a bisection safeguard, and the chord/half-circle
// iteration on the positive normal form.

#include <functional>
#include <span>
#include <vector>

#include "tusi/forms.hpp"

namespace tusi {

enum class Method { automatic, bisection, newton, chord, cardano };

/// How the chord iteration picks its next abscissa.
enum class ChordStep {
  exact_root,       // root of the chord quadratic inside (A, B)
  newton_midpoint,  // one Newton step on that quadratic from (A + B) / 2
};

struct SolveOptions {
  double tol = 1e-12;  // absolute, in the canonical variable
  int max_iter = 200;
  Method method = Method::automatic;
  ChordStep chord_step = ChordStep::exact_root;

  void validate() const;
};

using ScalarFn = std::function<double(double)>;

/// [lo, hi] with lo < hi and a sign change (or exact zero) between f(lo) and
/// f(hi).
class Bracket {
 public:
  Bracket(double lo, double hi, double f_lo, double f_hi);
  static Bracket around(const ScalarFn& f, double lo, double hi);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double f_lo() const noexcept { return f_lo_; }
  double f_hi() const noexcept { return f_hi_; }
  double width() const noexcept { return hi_ - lo_; }
  double midpoint() const noexcept { return lo_ + (hi_ - lo_) / 2.0; }

  /// Replaces whichever endpoint has the same sign as f(x). x must lie
  /// strictly inside.
  void shrink(double x, double fx);

 private:
  double lo_, hi_, f_lo_, f_hi_;
};

bool has_sign_change(double a, double b) noexcept;

struct IterationResult {
  double root = 0.0;
  int iterations = 0;
};

using BracketObserver = std::function<void(const Bracket&)>;

/// Halves until the midpoint is within tol of the root.
IterationResult bisect(const ScalarFn& f, Bracket b, const SolveOptions& opts,
                       const BracketObserver& observe = {});

/// x - f(x) / f'(x). Throws DerivativeVanishes when |f'(x)| < 1e-300.
double newton_step(const ScalarFn& f, const ScalarFn& df, double x);

/// Newton iteration kept inside the bracket: steps that leave it, or that do
/// not at least halve the previous step, are replaced by bisection.
IterationResult safeguarded_newton(const ScalarFn& f, const ScalarFn& df, Bracket b,
                                   const SolveOptions& opts,
                                   const BracketObserver& observe = {});

struct QuadraticCoeffs {
  double a2, a1, a0;
};

/// ((A+B)^2 + 1) x^2 + (q - 2AB(A+B)) x + A^2 B^2: the chord through
/// (A, A^2), (B, B^2) meeting the half circle y = sqrt(-x^2 - q x).
QuadraticCoeffs chord_quadratic(double a, double b, double q);

struct ChordState {
  double a = 0.0;  // endpoint where x^3 + x + q has the sign of f(A)
  double b = 0.0;
  double q = 0.0;
  double c = 0.0;  // latest chord abscissa
};

using ChordObserver = std::function<void(const ChordState&)>;

/// Positive root of x^3 + x + q, q < 0, by chord/half-circle intersection.
/// Falls back to bisection for any step whose abscissa is not strictly
/// inside the current bracket.
IterationResult khayyam_chord_solve(const NormalForm& f, const SolveOptions& opts,
                                    const ChordObserver& observe = {});

/// Initial bracket for the positive root of x^3 + x + q, q < 0:
/// (-q/2, min(1, -q)) when -q < 2, (1, -q/2) when -q > 2. The root is
/// exactly 1 at -q = 2, returned as lo == hi.
std::pair<double, double> chord_initial_bracket(double q);

/// Samples of phi(alpha) = alpha^2 - alpha^3 on [-1/3, 1], split into the
/// three monotone pieces [-1/3, 0], [0, 2/3], [2/3, 1].
class LookupTable {
 public:
  struct Entry {
    double alpha;
    double phi;
    int segment;  // 0, 1, 2
  };

  explicit LookupTable(int resolution);

  std::span<const Entry> entries() const noexcept { return entries_; }
  double step() const noexcept { return step_; }

  /// Roots of the Tusi form for delta in [0, 1] by inverse lookup on each
  /// monotone piece; distinct values, ascending.
  std::vector<double> approximate_roots(double delta) const;

 private:
  std::vector<Entry> entries_;
  double step_;
};

LookupTable lookup_table(int resolution);

}  // namespace tusi
