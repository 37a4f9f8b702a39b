#include "tusi/iterative.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "tusi/error.hpp"

namespace tusi {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void notify(const BracketObserver& observe, const Bracket& b) {
  if (observe) observe(b);
}

// Certifies a root within tol of x by a sign change on [x - tol, x + tol]
// (clipped to the bracket). Shrinks the bracket when it succeeds.
bool certify(const ScalarFn& f, Bracket& b, double x, double tol) {
  const double lo = std::max(x - tol, b.lo());
  const double hi = std::min(x + tol, b.hi());
  if (!(lo < hi)) return false;
  const double f_lo = lo == b.lo() ? b.f_lo() : f(lo);
  const double f_hi = hi == b.hi() ? b.f_hi() : f(hi);
  if (!has_sign_change(f_lo, f_hi)) return false;
  b = Bracket(lo, hi, f_lo, f_hi);
  return true;
}

[[noreturn]] void fail(const std::string& what, const Bracket& b) {
  throw ConvergenceError(what + ": iteration limit reached", b.lo(), b.hi());
}

}  // namespace

void SolveOptions::validate() const {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw InputError("tolerance must be positive");
  if (max_iter < 1) throw InputError("max_iter must be at least 1");
}

bool has_sign_change(double a, double b) noexcept {
  return (a <= 0.0 && b >= 0.0) || (a >= 0.0 && b <= 0.0);
}

Bracket::Bracket(double lo, double hi, double f_lo, double f_hi)
    : lo_(lo), hi_(hi), f_lo_(f_lo), f_hi_(f_hi) {
  if (!(lo < hi)) throw PreconditionError("bracket needs lo < hi");
  if (!has_sign_change(f_lo, f_hi)) throw PreconditionError("bracket endpoints have the same sign");
}

Bracket Bracket::around(const ScalarFn& f, double lo, double hi) {
  return Bracket(lo, hi, f(lo), f(hi));
}

void Bracket::shrink(double x, double fx) {
  if (!(x > lo_ && x < hi_)) throw PreconditionError("shrink point must lie inside the bracket");
  if (has_sign_change(f_lo_, fx)) {
    hi_ = x;
    f_hi_ = fx;
  } else {
    lo_ = x;
    f_lo_ = fx;
  }
}

IterationResult bisect(const ScalarFn& f, Bracket b, const SolveOptions& opts,
                       const BracketObserver& observe) {
  opts.validate();
  if (b.f_lo() == 0.0) return {b.lo(), 0};
  if (b.f_hi() == 0.0) return {b.hi(), 0};
  int iterations = 0;
  while (b.width() > 2.0 * opts.tol) {
    const double m = b.midpoint();
    if (!(m > b.lo() && m < b.hi())) break;  // no representable point left between
    if (iterations == opts.max_iter) fail("bisection", b);
    const double fm = f(m);
    ++iterations;
    if (fm == 0.0) return {m, iterations};
    b.shrink(m, fm);
    notify(observe, b);
  }
  return {b.midpoint(), iterations};
}

double newton_step(const ScalarFn& f, const ScalarFn& df, double x) {
  const double slope = df(x);
  if (!(std::abs(slope) >= 1e-300)) {
    throw DerivativeVanishes("derivative vanishes at x = " + std::to_string(x));
  }
  return x - f(x) / slope;
}

IterationResult safeguarded_newton(const ScalarFn& f, const ScalarFn& df, Bracket b,
                                   const SolveOptions& opts, const BracketObserver& observe) {
  opts.validate();
  if (b.f_lo() == 0.0) return {b.lo(), 0};
  if (b.f_hi() == 0.0) return {b.hi(), 0};

  double x = b.midpoint();
  double step = b.width();
  double prev_step = step;
  double fx = f(x);
  double dfx = df(x);
  for (int it = 1; it <= opts.max_iter; ++it) {
    if (fx == 0.0) return {x, it - 1};
    if (x > b.lo() && x < b.hi()) {
      b.shrink(x, fx);
      notify(observe, b);
    }
    if (b.width() <= 2.0 * opts.tol) return {b.midpoint(), it - 1};

    const double candidate = dfx != 0.0 ? x - fx / dfx : kNaN;
    const bool inside = candidate > b.lo() && candidate < b.hi();
    const bool fast = std::abs(2.0 * fx) <= std::abs(prev_step * dfx);
    prev_step = step;
    if (inside && fast) {
      step = x - candidate;
      x = candidate;
    } else {
      step = b.width() / 2.0;
      x = b.midpoint();
    }

    if (std::abs(step) <= opts.tol && certify(f, b, x, opts.tol)) {
      notify(observe, b);
      return {x, it};
    }
    fx = f(x);
    dfx = df(x);
  }
  fail("newton", b);
}

QuadraticCoeffs chord_quadratic(double a, double b, double q) {
  if (!(a >= 0.0) || !(b >= 0.0)) throw PreconditionError("chord endpoints must be non-negative");
  if (a == b) throw PreconditionError("chord endpoints must differ");
  if (!(q < 0.0)) throw PreconditionError("chord iteration assumes q < 0");
  const double s = a + b;
  const double ab = a * b;
  return {s * s + 1.0, q - 2.0 * ab * s, ab * ab};
}

std::pair<double, double> chord_initial_bracket(double q) {
  if (!(q < 0.0)) throw PreconditionError("chord iteration assumes q < 0");
  const double m = -q;
  if (m < 2.0) return {m / 2.0, std::min(1.0, m)};
  if (m == 2.0) return {1.0, 1.0};
  return {1.0, m / 2.0};
}

namespace {

double chord_abscissa(const QuadraticCoeffs& k, double lo, double hi, ChordStep mode,
                      const ScalarFn& f) {
  if (mode == ChordStep::newton_midpoint) {
    const double x = lo + (hi - lo) / 2.0;
    const double slope = 2.0 * k.a2 * x + k.a1;
    if (slope == 0.0) return kNaN;
    return x - ((k.a2 * x + k.a1) * x + k.a0) / slope;
  }
  const double disc = k.a1 * k.a1 - 4.0 * k.a2 * k.a0;
  if (disc < 0.0) return kNaN;
  const double big = -(k.a1 + std::copysign(std::sqrt(disc), k.a1)) / 2.0;
  const double r1 = big / k.a2;
  const double r2 = big != 0.0 ? k.a0 / big : kNaN;
  const bool in1 = r1 > lo && r1 < hi;
  const bool in2 = r2 > lo && r2 < hi;
  if (in1 && in2) return std::abs(f(r1)) <= std::abs(f(r2)) ? r1 : r2;
  if (in1) return r1;
  if (in2) return r2;
  return kNaN;
}

}  // namespace

IterationResult khayyam_chord_solve(const NormalForm& nf, const SolveOptions& opts,
                                    const ChordObserver& observe) {
  opts.validate();
  if (nf.sign() != 1 || !(nf.q() < 0.0)) {
    throw PreconditionError("chord iteration needs x^3 + x + q with q < 0");
  }
  const double q = nf.q();
  const ScalarFn f = [q](double x) { return (x * x + 1.0) * x + q; };

  auto [lo, hi] = chord_initial_bracket(q);
  if (lo == hi) return {lo, 0};
  double f_lo = f(lo);
  double f_hi = f(hi);
  if (!has_sign_change(f_lo, f_hi)) {
    lo = 0.0;
    hi = -q;
    f_lo = f(lo);
    f_hi = f(hi);
  }
  if (f_lo == 0.0) return {lo, 0};
  if (f_hi == 0.0) return {hi, 0};
  Bracket b(lo, hi, f_lo, f_hi);

  double previous = kNaN;
  // One endpoint can stay fixed for many steps. When the bracket has not
  // halved over the last kWindow steps, the next step is a bisection.
  constexpr int kWindow = 4;
  std::array<double, kWindow> widths;
  widths.fill(kNaN);
  for (int it = 1; it <= opts.max_iter; ++it) {
    const bool stalled = b.width() > 0.5 * widths[it % kWindow];
    double c = b.midpoint();
    if (!stalled) {
      const auto k = chord_quadratic(b.lo(), b.hi(), q);
      c = chord_abscissa(k, b.lo(), b.hi(), opts.chord_step, f);
      if (!(c > b.lo() && c < b.hi())) c = b.midpoint();
    }
    if (observe) observe({b.lo(), b.hi(), q, c});
    if (!(c > b.lo() && c < b.hi())) return {c, it};  // bracket down to adjacent doubles
    const double fc = f(c);
    if (fc == 0.0) return {c, it};
    b.shrink(c, fc);
    if (b.width() <= 2.0 * opts.tol) return {b.midpoint(), it};
    if (std::abs(c - previous) <= opts.tol && certify(f, b, c, opts.tol)) return {c, it};
    previous = c;
    widths[it % kWindow] = stalled ? kNaN : b.width();
  }
  fail("chord", b);
}

LookupTable::LookupTable(int resolution) {
  if (resolution < 2) throw PreconditionError("lookup table needs resolution >= 2");
  constexpr double lo = -1.0 / 3.0;
  constexpr double hi = 1.0;
  constexpr double peak = 4.0 / 27.0;
  step_ = (hi - lo) / (resolution - 1);

  std::vector<double> alphas;
  alphas.reserve(static_cast<std::size_t>(resolution) + 2);
  for (int i = 0; i + 1 < resolution; ++i) alphas.push_back(lo + i * step_);
  alphas.push_back(hi);
  alphas.push_back(0.0);
  alphas.push_back(2.0 / 3.0);
  std::sort(alphas.begin(), alphas.end());
  alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());

  entries_.reserve(alphas.size());
  for (double a : alphas) {
    double value = phi(a);
    // Breakpoints carry their exact extreme values.
    if (a == lo || a == 2.0 / 3.0) value = peak;
    if (a == 0.0 || a == hi) value = 0.0;
    const int segment = a < 0.0 ? 0 : (a < 2.0 / 3.0 ? 1 : 2);
    entries_.push_back({a, value, segment});
  }
}

std::vector<double> LookupTable::approximate_roots(double delta) const {
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw PreconditionError("table lookup covers the three-root range 0 <= delta <= 1");
  }
  const double target = 4.0 * delta / 27.0;
  constexpr double starts[] = {-1.0 / 3.0, 0.0, 2.0 / 3.0};
  constexpr double ends[] = {0.0, 2.0 / 3.0, 1.0};

  std::vector<double> roots;
  for (int s = 0; s < 3; ++s) {
    const auto first = std::lower_bound(entries_.begin(), entries_.end(), starts[s],
                                        [](const Entry& e, double a) { return e.alpha < a; });
    const auto last = std::upper_bound(entries_.begin(), entries_.end(), ends[s],
                                       [](double a, const Entry& e) { return a < e.alpha; });
    for (auto it = first; it + 1 < last; ++it) {
      const Entry& e0 = *it;
      const Entry& e1 = *(it + 1);
      const double lo = std::min(e0.phi, e1.phi);
      const double hi = std::max(e0.phi, e1.phi);
      if (target < lo || target > hi) continue;
      double alpha = e0.alpha;
      if (e1.phi != e0.phi) {
        const double t = (target - e0.phi) / (e1.phi - e0.phi);
        alpha = t == 1.0 ? e1.alpha : e0.alpha + t * (e1.alpha - e0.alpha);
      }
      roots.push_back(alpha);
      break;
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

LookupTable lookup_table(int resolution) { return LookupTable(resolution); }

}  // namespace tusi
