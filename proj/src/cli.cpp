#include "tusi/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "tusi/error.hpp"
#include "tusi/geometry.hpp"

namespace tusi::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

double parse_decimal(std::string_view text, std::string_view whole) {
  const std::string_view t = trim(text);
  std::string_view body = t;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
  if (body.empty() || ec != std::errc() || end != body.data() + body.size() || !std::isfinite(v)) {
    throw InputError("not a finite number: '" + std::string(whole) + "'");
  }
  return v;
}

OutputEnvelope from_report(Json input, RootReport report) {
  OutputEnvelope env;
  env.input = std::move(input);
  env.pipeline = std::move(report.pipeline);
  env.classification = std::move(report.classification);
  env.roots = std::move(report.roots);
  env.warnings = std::move(report.warnings);
  return env;
}

void push_step(OutputEnvelope& env, std::string form,
               std::vector<std::pair<std::string, double>> params, const AffineMap& map) {
  const AffineMap base = env.pipeline.empty() ? AffineMap::identity() : env.pipeline.back().to_input;
  env.pipeline.push_back({std::move(form), std::move(params), map, base.then(map)});
}

GeneralCubic cubic_from(const std::vector<double>& c) {
  if (c.size() != 4) throw InputError("--coeffs needs exactly four values a3,a2,a1,a0");
  return GeneralCubic(c[0], c[1], c[2], c[3]);
}

// General -> reduced -> normal (p > 0) or Tusi (p < 0), with delta and Delta.
OutputEnvelope analyze(const std::string& command, const std::vector<double>& coeffs,
                       bool with_classification) {
  const GeneralCubic cubic = cubic_from(coeffs);
  OutputEnvelope env;
  env.input = Json{{"command", command}, {"coeffs", coeffs}};
  push_step(env, "general",
            {{"a3", cubic.a3()}, {"a2", cubic.a2()}, {"a1", cubic.a1()}, {"a0", cubic.a0()}},
            AffineMap::identity());
  const auto reduced = reduce_general(cubic);
  const ReducedForm& r = reduced.form;
  push_step(env, "reduced", {{"p", r.p()}, {"q", r.q()}}, reduced.map);
  const AffineMap reduced_to_input = env.pipeline.back().to_input;
  if (reduced.boundary_snapped) {
    env.warnings.emplace_back("boundary_snapped: p within tolerance of 0, treated as 0");
  }

  const Discriminant d = discriminant(r);
  env.details["Delta"] = d.delta_cap;
  env.details["delta"] = d.delta_tusi ? Json(*d.delta_tusi) : Json(nullptr);
  env.details["discriminant_sign"] = d.sign;
  if (d.boundary_snapped) {
    env.warnings.emplace_back("boundary_snapped: delta within tolerance of a regime boundary");
  }

  if (r.p() > 0.0) {
    const auto normal = normalize(r);
    push_step(env, "normal", {{"sign", 1.0}, {"q", normal.form.q()}}, normal.map);
  } else if (r.p() < 0.0) {
    const auto normal = normalize(r);
    env.details["normal"] = Json{{"sign", -1},
                                 {"q", normal.form.q()},
                                 {"map", Json{{"scale", normal.map.scale()},
                                              {"shift", normal.map.shift()}}}};
    const auto tusi = reduced_to_tusi(r);
    push_step(env, "tusi", {{"delta", tusi.form.delta()}}, tusi.map);
  }

  if (with_classification) {
    env.classification = map_classification(classify_reduced(r), reduced_to_input);
  }
  return env;
}

Json maximizer_json(int n) {
  const Maximizer m = maximizer(n);
  return Json{{"alpha_star", m.alpha_star}, {"phi_star", m.phi_star}};
}

ViewWindow parse_window(const std::string& text) {
  const std::vector<double> v = parse_number_list(text);
  if (v.size() != 4) throw InputError("--window needs xmin,xmax,ymin,ymax");
  ViewWindow w{v[0], v[1], v[2], v[3]};
  w.validate();
  return w;
}

ViewWindow square_window(double reach) {
  const double r = std::max(1.5, 1.1 * std::abs(reach) + 0.1);
  return ViewWindow{-r, r, -r, r};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw InputError("failed writing '" + path + "'");
}

bool any_failed(const OutputEnvelope& env) {
  return std::any_of(env.roots.begin(), env.roots.end(),
                     [](const RootEntry& r) { return r.error.has_value(); });
}

}  // namespace

double parse_number(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return parse_decimal(t, text);
  const double num = parse_decimal(t.substr(0, slash), text);
  const double den = parse_decimal(t.substr(slash + 1), text);
  if (den == 0.0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return num / den;
}

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_number(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classify and solve real cubic equations through their canonical forms", "tusi"};
  app.require_subcommand(1);

  bool json = false;
  std::string coeffs_text, method_text = "auto", tol_text = "1e-12";
  int max_iter = 200;
  std::string delta_text, b_text, c_text, q_text, qprime_text, window_text, figure, out_path;
  int n = 0;
  int n_max = 5;
  bool do_solve = false;

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "Emit JSON"); };
  auto add_coeffs = [&](CLI::App* sub) {
    sub->add_option("--coeffs", coeffs_text, "a3,a2,a1,a0 (decimal or n/d)")->required();
  };

  CLI::App* classify_cmd = app.add_subcommand("classify", "Count and isolate the real roots");
  add_coeffs(classify_cmd);
  add_json(classify_cmd);

  CLI::App* solve_cmd = app.add_subcommand("solve", "Compute the real roots");
  add_coeffs(solve_cmd);
  solve_cmd->add_option("--method", method_text, "auto|cardano|bisection|newton|chord")
      ->check(CLI::IsMember({"auto", "cardano", "bisection", "newton", "chord"}));
  solve_cmd->add_option("--tol", tol_text, "Absolute root tolerance");
  solve_cmd->add_option("--max-iter", max_iter, "Iteration cap");
  add_json(solve_cmd);

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "Show the canonical forms and maps");
  add_coeffs(reduce_cmd);
  add_json(reduce_cmd);

  CLI::App* tusi_cmd = app.add_subcommand("tusi", "Analyze alpha^3 - alpha^2 + 4 delta/27");
  tusi_cmd->add_option("--delta", delta_text, "delta")->required();
  tusi_cmd->add_flag("--solve", do_solve, "Also compute the roots");
  add_json(tusi_cmd);

  CLI::App* general_cmd =
      app.add_subcommand("general", "Analyze alpha^(n-1) - alpha^n = delta * phi_n*");
  general_cmd->add_option("--n", n, "Degree n >= 2")->required();
  general_cmd->add_option("--delta", delta_text, "delta")->required();
  general_cmd->add_flag("--solve", do_solve, "Also compute the roots");
  add_json(general_cmd);

  CLI::App* quadratic_cmd = app.add_subcommand("quadratic", "Solve x^2 - b x + c, b > 0");
  quadratic_cmd->add_option("--b", b_text, "b")->required();
  quadratic_cmd->add_option("--c", c_text, "c")->required();
  add_json(quadratic_cmd);

  CLI::App* plot_cmd = app.add_subcommand("plot", "Write an SVG figure");
  plot_cmd->add_option("--figure", figure, "tusi-split|circle|hyperbola|phi-family")
      ->required()
      ->check(CLI::IsMember({"tusi-split", "circle", "hyperbola", "phi-family"}));
  CLI::Option* q_opt = plot_cmd->add_option("--q", q_text, "q of x^3 + x + q (circle)");
  CLI::Option* qp_opt = plot_cmd->add_option("--qprime", qprime_text, "q' of x^3 - x + q' (hyperbola)");
  CLI::Option* nmax_opt = plot_cmd->add_option("--n-max", n_max, "Largest n (phi-family)");
  q_opt->excludes(qp_opt)->excludes(nmax_opt);
  qp_opt->excludes(nmax_opt);
  plot_cmd->add_option("--window", window_text, "xmin,xmax,ymin,ymax");
  plot_cmd->add_option("--out", out_path, "Output SVG path")->required();
  add_json(plot_cmd);

  std::vector<const char*> argv{"tusi"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    OutputEnvelope env;
    if (*classify_cmd) {
      env = analyze("classify", parse_number_list(coeffs_text), true);
    } else if (*reduce_cmd) {
      env = analyze("reduce", parse_number_list(coeffs_text), false);
    } else if (*solve_cmd) {
      const std::vector<double> coeffs = parse_number_list(coeffs_text);
      SolveOptions opts;
      opts.method = *parse_method(method_text);
      opts.tol = parse_number(tol_text);
      opts.max_iter = max_iter;
      Json input{{"command", "solve"}, {"coeffs", coeffs}, {"method", method_text},
                 {"tol", opts.tol},    {"max_iter", max_iter}};
      env = from_report(std::move(input), solve(cubic_from(coeffs), opts));
    } else if (*tusi_cmd) {
      const TusiForm t(parse_number(delta_text));
      Json input{{"command", "tusi"}, {"delta", t.delta()}, {"solve", do_solve}};
      if (do_solve) {
        env = from_report(std::move(input), solve(t));
      } else {
        env.input = std::move(input);
        env.pipeline.push_back({"tusi", {{"delta", t.delta()}}, {}, {}});
        const Classification cls = classify_tusi(t);
        if (cls.boundary_snapped) {
          env.warnings.emplace_back("boundary_snapped: delta within tolerance of a regime boundary");
        }
        env.classification = cls;
      }
      env.details["constant"] = t.constant();
    } else if (*general_cmd) {
      const GeneralizedTusiForm g(n, parse_number(delta_text));
      Json input{{"command", "general"}, {"n", n}, {"delta", g.delta()}, {"solve", do_solve}};
      if (do_solve) {
        env = from_report(std::move(input), solve(g));
      } else {
        env.input = std::move(input);
        env.pipeline.push_back(
            {"generalized", {{"n", static_cast<double>(n)}, {"delta", g.delta()}}, {}, {}});
        const Classification cls = classify_generalized(g);
        if (cls.boundary_snapped) {
          env.warnings.emplace_back("boundary_snapped: delta within tolerance of a regime boundary");
        }
        env.classification = cls;
      }
      env.details["maximizer"] = maximizer_json(n);
    } else if (*quadratic_cmd) {
      const QuadraticTusiForm qt(parse_number(b_text), parse_number(c_text));
      Json input{{"command", "quadratic"}, {"b", qt.b()}, {"c", qt.c()}};
      env = from_report(std::move(input), solve(qt));
      env.details["delta"] = qt.delta();
    } else if (*plot_cmd) {
      env.input = Json{{"command", "plot"}, {"figure", figure}, {"out", out_path}};
      std::string svg;
      if (figure == "circle" || figure == "hyperbola") {
        const bool circle = figure == "circle";
        if (circle && !qprime_text.empty()) throw InputError("--qprime applies to hyperbola only");
        if (!circle && !q_text.empty()) throw InputError("--q applies to circle only");
        if (nmax_opt->count() > 0) throw InputError("--n-max applies to phi-family only");
        const std::string& text = circle ? q_text : qprime_text;
        const double q = text.empty() ? (circle ? -2.0 : 0.1) : parse_number(text);
        env.input[circle ? "q" : "qprime"] = q;
        const NormalForm form(circle ? 1 : -1, q);
        const ConicSystem conic = build_conic(form);
        const ViewWindow w = window_text.empty() ? square_window(q) : parse_window(window_text);
        svg = emit_svg(conic, w);
        Json points = Json::array();
        for (const auto& p : intersect_with_parabola(conic)) {
          points.push_back(Json{{"x", p.x}, {"y", p.y}, {"multiplicity", p.multiplicity}});
        }
        env.details["reflected"] = conic.reflected;
        env.details["intersections"] = points;
      } else {
        if (!q_text.empty() || !qprime_text.empty()) {
          throw InputError("--q/--qprime apply to circle and hyperbola only");
        }
        if (figure == "tusi-split") {
          if (nmax_opt->count() > 0) throw InputError("--n-max applies to phi-family only");
          svg = emit_tusi_split_svg(window_text.empty() ? ViewWindow{-0.6, 1.2, -0.3, 0.6}
                                                        : parse_window(window_text));
        } else {
          env.input["n_max"] = n_max;
          svg = emit_phi_family_svg(n_max, window_text.empty() ? ViewWindow{-0.2, 1.2, -0.1, 0.35}
                                                               : parse_window(window_text));
        }
      }
      write_file(out_path, svg);
      env.details["written"] = out_path;
    }

    if (json) {
      out << to_json(env).dump(2) << "\n";
    } else {
      out << render_human(env);
    }
    return any_failed(env) ? kNumeric : kOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const RegimeError& e) {
    err << "refused: " << e.what() << "\n";
    return kRegime;
  } catch (const ConvergenceError& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  } catch (const DerivativeVanishes& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  }
}

}  // namespace tusi::cli
