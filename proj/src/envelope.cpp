#include <cmath>
#include <cstdio>
#include <sstream>

#include "tusi/cli.hpp"
#include "tusi/error.hpp"

namespace tusi::cli {

namespace {

constexpr Regime kAllRegimes[] = {
    Regime::delta_gt_1,        Regime::delta_eq_1,        Regime::delta_in_0_1,
    Regime::delta_eq_0,        Regime::delta_lt_0,        Regime::p_positive_single,
    Regime::p_zero_single,     Regime::p_zero_triple,     Regime::quadratic_none,
    Regime::quadratic_double,  Regime::quadratic_two,     Regime::odd_delta_lt_0,
    Regime::even_delta_lt_0,   Regime::any_delta_eq_0,    Regime::odd_delta_in_0_1,
    Regime::even_delta_in_0_1, Regime::odd_delta_eq_1,    Regime::even_delta_eq_1,
    Regime::odd_delta_gt_1,    Regime::even_delta_gt_1,
};

Json map_json(const AffineMap& m) {
  return Json{{"scale", m.scale() + 0.0}, {"shift", m.shift() + 0.0}};
}

AffineMap map_from(const Json& j) {
  return AffineMap(j.at("scale").get<double>(), j.at("shift").get<double>());
}

std::string g6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string scalar_text(const Json& v) {
  if (v.is_number_float()) return g6(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : ",") + scalar_text(e);
    return s;
  }
  return v.dump();
}

void render_object(std::ostringstream& out, const Json& obj, const std::string& indent) {
  for (const auto& [key, value] : obj.items()) {
    if (value.is_object()) {
      out << indent << key << ":\n";
      render_object(out, value, indent + "  ");
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << indent << key << ":\n";
      for (const auto& e : value) {
        out << indent << "  -";
        for (const auto& [k, v] : e.items()) out << " " << k << "=" << scalar_text(v);
        out << "\n";
      }
    } else {
      out << indent << key << ": " << scalar_text(value) << "\n";
    }
  }
}

std::string map_text(const AffineMap& m) {
  const double t = m.shift();
  return g6(m.scale()) + "*y " + (t < 0.0 ? "- " : "+ ") + g6(std::abs(t));
}

}  // namespace

std::optional<Regime> parse_regime(std::string_view name) {
  for (Regime r : kAllRegimes) {
    if (to_string(r) == name) return r;
  }
  return std::nullopt;
}

std::optional<IntervalKind> parse_interval_kind(std::string_view name) {
  for (IntervalKind k : {IntervalKind::open, IntervalKind::half_open, IntervalKind::exact_point}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

bool operator==(const OutputEnvelope& a, const OutputEnvelope& b) {
  return a.input == b.input && a.pipeline == b.pipeline && a.classification == b.classification &&
         a.roots == b.roots && a.warnings == b.warnings && a.details == b.details;
}

Json to_json(const OutputEnvelope& env) {
  Json j;
  j["input"] = env.input;

  Json pipeline = Json::array();
  for (const auto& step : env.pipeline) {
    Json params = Json::object();
    for (const auto& [k, v] : step.params) params[k] = v;
    pipeline.push_back(Json{{"form", step.form},
                            {"params", params},
                            {"map", map_json(step.map)},
                            {"to_input", map_json(step.to_input)}});
  }
  j["pipeline"] = pipeline;

  if (env.classification) {
    const Classification& c = *env.classification;
    Json intervals = Json::array();
    for (const auto& iv : c.intervals) {
      intervals.push_back(Json{{"lo", iv.lo},
                               {"hi", iv.hi},
                               {"kind", std::string(to_string(iv.kind))},
                               {"multiplicity", iv.multiplicity}});
    }
    j["classification"] = Json{{"regime", std::string(to_string(c.regime))},
                               {"count", c.count()},
                               {"boundary_snapped", c.boundary_snapped},
                               {"intervals", intervals}};
  } else {
    j["classification"] = nullptr;
  }

  Json roots = Json::array();
  for (const auto& r : env.roots) {
    Json e{{"value", r.value},
           {"residual", r.residual},
           {"multiplicity", r.multiplicity},
           {"interval", Json::array({r.lo, r.hi})},
           {"method", r.method},
           {"iterations", r.iterations}};
    if (r.error) e["error"] = *r.error;
    roots.push_back(e);
  }
  j["roots"] = roots;
  j["warnings"] = env.warnings;
  j["details"] = env.details;
  return j;
}

OutputEnvelope envelope_from_json(const Json& j) {
  try {
    OutputEnvelope env;
    env.input = j.at("input");
    for (const auto& s : j.at("pipeline")) {
      PipelineStep step;
      step.form = s.at("form").get<std::string>();
      for (const auto& [k, v] : s.at("params").items()) step.params.emplace_back(k, v.get<double>());
      step.map = map_from(s.at("map"));
      step.to_input = map_from(s.at("to_input"));
      env.pipeline.push_back(std::move(step));
    }
    const Json& c = j.at("classification");
    if (!c.is_null()) {
      Classification cls;
      const auto regime = parse_regime(c.at("regime").get<std::string>());
      if (!regime) throw InputError("unknown regime " + c.at("regime").dump());
      cls.regime = *regime;
      cls.boundary_snapped = c.at("boundary_snapped").get<bool>();
      for (const auto& iv : c.at("intervals")) {
        const auto kind = parse_interval_kind(iv.at("kind").get<std::string>());
        if (!kind) throw InputError("unknown interval kind " + iv.at("kind").dump());
        cls.intervals.push_back({iv.at("lo").get<double>(), iv.at("hi").get<double>(), *kind,
                                 iv.at("multiplicity").get<int>()});
      }
      env.classification = std::move(cls);
    }
    for (const auto& r : j.at("roots")) {
      RootEntry e;
      e.value = r.at("value").get<double>();
      e.residual = r.at("residual").get<double>();
      e.multiplicity = r.at("multiplicity").get<int>();
      e.lo = r.at("interval").at(0).get<double>();
      e.hi = r.at("interval").at(1).get<double>();
      e.method = r.at("method").get<std::string>();
      e.iterations = r.at("iterations").get<int>();
      if (r.contains("error")) e.error = r.at("error").get<std::string>();
      env.roots.push_back(std::move(e));
    }
    env.warnings = j.at("warnings").get<std::vector<std::string>>();
    if (j.contains("details")) env.details = j.at("details");
    return env;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed envelope: ") + e.what());
  }
}

std::string render_human(const OutputEnvelope& env) {
  std::ostringstream out;
  out << "input:";
  for (const auto& [k, v] : env.input.items()) out << " " << k << "=" << scalar_text(v);
  out << "\n";

  if (!env.pipeline.empty()) {
    out << "pipeline:\n";
    for (const auto& step : env.pipeline) {
      out << "  " << step.form;
      for (const auto& [k, v] : step.params) out << " " << k << "=" << g6(v);
      out << "  [map: " << map_text(step.map) << "; to input: " << map_text(step.to_input)
          << "]\n";
    }
  }

  if (env.classification) {
    const Classification& c = *env.classification;
    out << "classification: " << to_string(c.regime) << ", " << c.count() << " distinct real root"
        << (c.count() == 1 ? "" : "s") << (c.boundary_snapped ? " (boundary snapped)" : "")
        << "\n";
    for (const auto& iv : c.intervals) {
      out << "  ";
      switch (iv.kind) {
        case IntervalKind::exact_point: out << "exactly " << g6(iv.lo); break;
        case IntervalKind::half_open: out << "[" << g6(iv.lo) << ", " << g6(iv.hi) << ")"; break;
        case IntervalKind::open: out << "(" << g6(iv.lo) << ", " << g6(iv.hi) << ")"; break;
      }
      out << "  multiplicity " << iv.multiplicity << "\n";
    }
  }

  if (!env.roots.empty()) {
    out << "roots:\n";
    for (const auto& r : env.roots) {
      out << "  " << g6(r.value) << "  residual " << g6(r.residual) << "  multiplicity "
          << r.multiplicity << "  interval [" << g6(r.lo) << ", " << g6(r.hi) << "]  method "
          << r.method << "  iterations " << r.iterations;
      if (r.error) out << "  error: " << *r.error;
      out << "\n";
    }
  }

  if (!env.details.empty()) render_object(out, env.details, "");

  for (const auto& w : env.warnings) out << "warning: " << w << "\n";
  return out.str();
}

}  // namespace tusi::cli
