#include "tusi/solve.hpp"

#include <algorithm>
#include <cmath>

#include "tusi/closed_form.hpp"
#include "tusi/error.hpp"

namespace tusi {

namespace {

struct Context {
  Polynomial input;
  SolveOptions opts;
  RootReport report;
};

AffineMap add_step(Context& ctx, std::string form,
                   std::vector<std::pair<std::string, double>> params, const AffineMap& map) {
  const AffineMap base =
      ctx.report.pipeline.empty() ? AffineMap::identity() : ctx.report.pipeline.back().to_input;
  const AffineMap to_input = base.then(map);
  ctx.report.pipeline.push_back({std::move(form), std::move(params), map, to_input});
  return to_input;
}

RootEntry make_entry(const Context& ctx, double canonical_root, const RootInterval& iv,
                     const AffineMap& to_input, std::string method, int iterations) {
  RootEntry e;
  e.value = to_input.apply(canonical_root);
  e.residual = std::abs(ctx.input(e.value));
  e.multiplicity = iv.multiplicity;
  const double a = to_input.apply(iv.lo);
  const double b = to_input.apply(iv.hi);
  e.lo = std::min(a, b);
  e.hi = std::max(a, b);
  if (iv.kind == IntervalKind::exact_point) e.lo = e.hi = e.value;
  e.method = std::move(method);
  e.iterations = iterations;
  return e;
}

// Refines one isolation interval of `canon` (bisection or safeguarded
// Newton) and records it in the input variable.
void refine(Context& ctx, const Polynomial& canon, const RootInterval& iv,
            const AffineMap& to_input, Method method) {
  if (iv.kind == IntervalKind::exact_point) {
    ctx.report.roots.push_back(make_entry(ctx, iv.lo, iv, to_input, "exact", 0));
    return;
  }
  const Polynomial slope = canon.derivative();
  const ScalarFn f = [&canon](double x) { return canon(x); };
  const ScalarFn df = [&slope](double x) { return slope(x); };
  const bool newton = method == Method::newton;
  const std::string tag = newton ? "newton" : "bisection";
  try {
    const Bracket br = Bracket::around(f, iv.lo, iv.hi);
    const IterationResult r =
        newton ? safeguarded_newton(f, df, br, ctx.opts) : bisect(f, br, ctx.opts);
    ctx.report.roots.push_back(make_entry(ctx, r.root, iv, to_input, tag, r.iterations));
  } catch (const ConvergenceError& e) {
    RootEntry entry =
        make_entry(ctx, e.lo() + (e.hi() - e.lo()) / 2.0, iv, to_input, tag, ctx.opts.max_iter);
    entry.error = e.what();
    ctx.report.warnings.push_back(std::string("convergence: ") + e.what());
    ctx.report.roots.push_back(std::move(entry));
  }
}

void finish(Context& ctx, const Classification& canonical, const AffineMap& to_input) {
  ctx.report.classification = map_classification(canonical, to_input);
  if (canonical.boundary_snapped) {
    ctx.report.warnings.emplace_back("boundary_snapped: classification parameter within tolerance of a regime boundary");
  }
  std::sort(ctx.report.roots.begin(), ctx.report.roots.end(),
            [](const RootEntry& a, const RootEntry& b) { return a.value < b.value; });
}

[[noreturn]] void refuse_chord() {
  throw RegimeError("chord iteration applies only to the positive normal form x^3 + x + q");
}

// Iterative methods for a classification with several (or boundary) roots.
Method multi_root_method(Method requested) {
  switch (requested) {
    case Method::cardano:
      throw RegimeError("three-real-root regime: Cardano needs complex arithmetic, use the iterative path");
    case Method::chord:
      refuse_chord();
    case Method::bisection:
      return Method::bisection;
    case Method::automatic:
    case Method::newton:
      return Method::newton;
  }
  return Method::newton;
}

// Solves in the Tusi variable. `reduced` is the reduced form the Tusi form
// came from (with its own map), used for the Cardano route.
void solve_tusi(Context& ctx, const TusiForm& t, const AffineMap& to_input,
                std::optional<std::pair<ReducedForm, AffineMap>> reduced) {
  const Classification cls = classify_tusi(t);
  const Polynomial canon = t.polynomial();
  const bool single = cls.regime == Regime::delta_gt_1 || cls.regime == Regime::delta_lt_0;
  const Method m = ctx.opts.method;

  if (!single) {
    const Method use = multi_root_method(m);
    for (const auto& iv : cls.intervals) refine(ctx, canon, iv, to_input, use);
    finish(ctx, cls, to_input);
    return;
  }

  if (m == Method::chord) refuse_chord();
  if (m == Method::automatic || m == Method::cardano) {
    if (!reduced) {
      const auto back = tusi_to_reduced(t);
      const AffineMap to_in = add_step(ctx, "reduced", {{"p", back.form.p()}, {"q", back.form.q()}},
                                       back.map);
      reduced.emplace(back.form, to_in);
    }
    try {
      const ClosedFormTrace trace = cardano_reduced(reduced->first);
      // Interval from the Tusi classification, value from the reduced form.
      RootEntry e = make_entry(ctx, 0.0, cls.intervals.front(), to_input, "cardano", 0);
      e.value = reduced->second.apply(trace.root);
      e.residual = std::abs(ctx.input(e.value));
      ctx.report.roots.push_back(std::move(e));
      finish(ctx, cls, to_input);
      return;
    } catch (const RegimeError&) {
      // Recomputed delta landed in the boundary band; only reachable within
      // rounding of the seam.
      if (m == Method::cardano) throw;
    }
  }
  const Method use = m == Method::bisection ? Method::bisection : Method::newton;
  refine(ctx, canon, cls.intervals.front(), to_input, use);
  finish(ctx, cls, to_input);
}

void solve_reduced(Context& ctx, const ReducedForm& r, const AffineMap& to_input) {
  const Method m = ctx.opts.method;
  if (r.p() == 0.0) {
    const Classification cls = classify_reduced(r);
    const RootInterval& iv = cls.intervals.front();
    if (iv.kind == IntervalKind::exact_point) {
      ctx.report.roots.push_back(make_entry(ctx, iv.lo, iv, to_input, "exact", 0));
    } else if (m == Method::automatic || m == Method::cardano) {
      ctx.report.roots.push_back(
          make_entry(ctx, cardano_reduced(r).root, iv, to_input, "cardano", 0));
    } else if (m == Method::chord) {
      refuse_chord();
    } else {
      refine(ctx, r.polynomial(), iv, to_input, m);
    }
    finish(ctx, cls, to_input);
    return;
  }

  if (r.p() > 0.0) {
    const auto normal = normalize(r);
    const AffineMap to_in = add_step(
        ctx, "normal", {{"sign", 1.0}, {"q", normal.form.q()}}, normal.map);
    Classification cls;
    cls.regime = Regime::p_positive_single;
    cls.intervals = {bounds::bound_tightening(normal.form)};
    const RootInterval& iv = cls.intervals.front();
    const double q = normal.form.q();

    if (iv.kind == IntervalKind::exact_point) {
      ctx.report.roots.push_back(make_entry(ctx, iv.lo, iv, to_in, "exact", 0));
    } else if (m == Method::automatic || m == Method::cardano) {
      ctx.report.roots.push_back(
          make_entry(ctx, cardano_normal(normal.form).root, iv, to_in, "cardano", 0));
    } else if (m == Method::chord) {
      // x -> -x turns q > 0 into the q < 0 case the chord iteration assumes.
      const double sign = q < 0.0 ? 1.0 : -1.0;
      try {
        const IterationResult res = khayyam_chord_solve(NormalForm(1, sign * q), ctx.opts);
        ctx.report.roots.push_back(
            make_entry(ctx, sign * res.root, iv, to_in, "chord", res.iterations));
      } catch (const ConvergenceError& e) {
        RootEntry entry = make_entry(ctx, sign * (e.lo() + e.hi()) / 2.0, iv, to_in, "chord",
                                     ctx.opts.max_iter);
        entry.error = e.what();
        ctx.report.warnings.push_back(std::string("convergence: ") + e.what());
        ctx.report.roots.push_back(std::move(entry));
      }
    } else {
      refine(ctx, normal.form.polynomial(), iv, to_in, m);
    }
    finish(ctx, cls, to_in);
    return;
  }

  const auto tusi = reduced_to_tusi(r);
  const AffineMap to_in = add_step(ctx, "tusi", {{"delta", tusi.form.delta()}}, tusi.map);
  solve_tusi(ctx, tusi.form, to_in, std::make_pair(r, to_input));
}

Context start(Polynomial input, const SolveOptions& opts) {
  opts.validate();
  return Context{std::move(input), opts, {}};
}

}  // namespace

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::automatic: return "auto";
    case Method::bisection: return "bisection";
    case Method::newton: return "newton";
    case Method::chord: return "chord";
    case Method::cardano: return "cardano";
  }
  return "auto";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
  for (Method m : {Method::automatic, Method::bisection, Method::newton, Method::chord,
                   Method::cardano}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

RootReport solve(const GeneralCubic& c, const SolveOptions& opts) {
  Context ctx = start(c.polynomial(), opts);
  add_step(ctx, "general", {{"a3", c.a3()}, {"a2", c.a2()}, {"a1", c.a1()}, {"a0", c.a0()}},
           AffineMap::identity());
  const auto reduced = reduce_general(c);
  const AffineMap to_in =
      add_step(ctx, "reduced", {{"p", reduced.form.p()}, {"q", reduced.form.q()}}, reduced.map);
  if (reduced.boundary_snapped) {
    ctx.report.warnings.emplace_back("boundary_snapped: p within tolerance of 0, treated as 0");
  }
  solve_reduced(ctx, reduced.form, to_in);
  return std::move(ctx.report);
}

RootReport solve(const ReducedForm& r, const SolveOptions& opts) {
  Context ctx = start(r.polynomial(), opts);
  const AffineMap to_in =
      add_step(ctx, "reduced", {{"p", r.p()}, {"q", r.q()}}, AffineMap::identity());
  solve_reduced(ctx, r, to_in);
  return std::move(ctx.report);
}

RootReport solve(const TusiForm& t, const SolveOptions& opts) {
  Context ctx = start(t.polynomial(), opts);
  const AffineMap to_in = add_step(ctx, "tusi", {{"delta", t.delta()}}, AffineMap::identity());
  solve_tusi(ctx, t, to_in, std::nullopt);
  return std::move(ctx.report);
}

RootReport solve(const GeneralizedTusiForm& g, const SolveOptions& opts) {
  Context ctx = start(g.polynomial(), opts);
  const AffineMap to_in =
      add_step(ctx, "generalized", {{"n", static_cast<double>(g.n())}, {"delta", g.delta()}},
               AffineMap::identity());
  Method use = Method::bisection;
  switch (opts.method) {
    case Method::cardano:
      throw RegimeError("no closed form is used for the generalized degree-n form");
    case Method::chord:
      refuse_chord();
    case Method::newton:
      use = Method::newton;
      break;
    case Method::automatic:
    case Method::bisection:
      break;
  }
  const Classification cls = classify_generalized(g);
  const Polynomial canon = g.polynomial();
  for (const auto& iv : cls.intervals) refine(ctx, canon, iv, to_in, use);
  finish(ctx, cls, to_in);
  return std::move(ctx.report);
}

RootReport solve(const QuadraticTusiForm& qt, const SolveOptions& opts) {
  Context ctx = start(qt.polynomial(), opts);
  const AffineMap to_in =
      add_step(ctx, "quadratic", {{"b", qt.b()}, {"c", qt.c()}}, AffineMap::identity());
  const Classification cls = classify_quadratic(qt);
  for (const auto& iv : cls.intervals) {
    ctx.report.roots.push_back(make_entry(ctx, iv.lo, iv, to_in, "exact", 0));
  }
  finish(ctx, cls, to_in);
  return std::move(ctx.report);
}

}  // namespace tusi
