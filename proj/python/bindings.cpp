#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tusi/classify.hpp"
#include "tusi/cli.hpp"
#include "tusi/closed_form.hpp"
#include "tusi/error.hpp"
#include "tusi/forms.hpp"
#include "tusi/geometry.hpp"
#include "tusi/iterative.hpp"
#include "tusi/solve.hpp"

namespace py = pybind11;
using namespace tusi;

namespace {

std::vector<double> coeffs(const Polynomial& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

template <class Form>
void bind_reduction(py::module_& m, const char* name) {
  py::class_<Reduction<Form>>(m, name)
      .def_readonly("form", &Reduction<Form>::form)
      .def_readonly("map", &Reduction<Form>::map)
      .def_readonly("boundary_snapped", &Reduction<Form>::boundary_snapped);
}

void bind_forms(py::module_& m) {
  py::class_<AffineMap>(m, "AffineMap")
      .def(py::init<>())
      .def(py::init<double, double>(), py::arg("scale"), py::arg("shift"))
      .def_property_readonly("scale", &AffineMap::scale)
      .def_property_readonly("shift", &AffineMap::shift)
      .def("apply", &AffineMap::apply)
      .def("invert", &AffineMap::invert)
      .def("inverse", &AffineMap::inverse)
      .def("then", &AffineMap::then)
      .def(py::self == py::self)
      .def("__repr__", [](const AffineMap& a) {
        std::ostringstream s;
        s << "AffineMap(" << a.scale() << ", " << a.shift() << ")";
        return s.str();
      });

  py::class_<GeneralCubic>(m, "GeneralCubic")
      .def(py::init<double, double, double, double>(), py::arg("a3"), py::arg("a2"),
           py::arg("a1"), py::arg("a0"))
      .def_property_readonly("coeffs", [](const GeneralCubic& c) { return coeffs(c.polynomial()); });
  py::class_<ReducedForm>(m, "ReducedForm")
      .def(py::init<double, double>(), py::arg("p"), py::arg("q"))
      .def_property_readonly("p", &ReducedForm::p)
      .def_property_readonly("q", &ReducedForm::q);
  py::class_<NormalForm>(m, "NormalForm")
      .def(py::init<int, double>(), py::arg("sign"), py::arg("q"))
      .def_property_readonly("sign", &NormalForm::sign)
      .def_property_readonly("q", &NormalForm::q);
  py::class_<TusiForm>(m, "TusiForm")
      .def(py::init<double>(), py::arg("delta"))
      .def_property_readonly("delta", &TusiForm::delta)
      .def_property_readonly("constant", &TusiForm::constant);
  py::class_<TusiGeneralForm>(m, "TusiGeneralForm")
      .def(py::init<double, double>(), py::arg("b"), py::arg("c"))
      .def_property_readonly("b", &TusiGeneralForm::b)
      .def_property_readonly("c", &TusiGeneralForm::c)
      .def_property_readonly("delta", &TusiGeneralForm::delta);
  py::class_<QuadraticTusiForm>(m, "QuadraticTusiForm")
      .def(py::init<double, double>(), py::arg("b"), py::arg("c"))
      .def_static("from_delta", &QuadraticTusiForm::from_delta)
      .def_property_readonly("b", &QuadraticTusiForm::b)
      .def_property_readonly("c", &QuadraticTusiForm::c)
      .def_property_readonly("delta", &QuadraticTusiForm::delta);
  py::class_<GeneralizedTusiForm>(m, "GeneralizedTusiForm")
      .def(py::init<int, double>(), py::arg("n"), py::arg("delta"))
      .def_property_readonly("n", &GeneralizedTusiForm::n)
      .def_property_readonly("delta", &GeneralizedTusiForm::delta);

  bind_reduction<ReducedForm>(m, "ReducedReduction");
  bind_reduction<NormalForm>(m, "NormalReduction");
  bind_reduction<TusiForm>(m, "TusiReduction");
  py::class_<TusiGeneralReduction>(m, "TusiGeneralReduction")
      .def_readonly("form", &TusiGeneralReduction::form)
      .def_readonly("reflection", &TusiGeneralReduction::reflection)
      .def_readonly("tusi", &TusiGeneralReduction::tusi)
      .def_readonly("map", &TusiGeneralReduction::map);

  m.def("reduce_general", &reduce_general);
  m.def("normalize", &normalize);
  m.def("reduced_to_tusi", &reduced_to_tusi);
  m.def("tusi_to_reduced", &tusi_to_reduced);
  m.def("general_to_tusi_general", &general_to_tusi_general);
  m.def("phi", &phi);
  m.def("phi_n", &phi_n, py::arg("n"), py::arg("alpha"));
}

void bind_classify(py::module_& m) {
  py::enum_<IntervalKind>(m, "IntervalKind")
      .value("open", IntervalKind::open)
      .value("half_open", IntervalKind::half_open)
      .value("exact_point", IntervalKind::exact_point);

  py::enum_<Regime> regime(m, "Regime");
  for (Regime r : {Regime::delta_gt_1, Regime::delta_eq_1, Regime::delta_in_0_1,
                   Regime::delta_eq_0, Regime::delta_lt_0, Regime::p_positive_single,
                   Regime::p_zero_single, Regime::p_zero_triple, Regime::quadratic_none,
                   Regime::quadratic_double, Regime::quadratic_two, Regime::odd_delta_lt_0,
                   Regime::even_delta_lt_0, Regime::any_delta_eq_0, Regime::odd_delta_in_0_1,
                   Regime::even_delta_in_0_1, Regime::odd_delta_eq_1, Regime::even_delta_eq_1,
                   Regime::odd_delta_gt_1, Regime::even_delta_gt_1}) {
    regime.value(std::string(to_string(r)).c_str(), r);
  }

  py::class_<RootInterval>(m, "RootInterval")
      .def_readonly("lo", &RootInterval::lo)
      .def_readonly("hi", &RootInterval::hi)
      .def_readonly("kind", &RootInterval::kind)
      .def_readonly("multiplicity", &RootInterval::multiplicity)
      .def("contains", &RootInterval::contains);
  py::class_<Classification>(m, "Classification")
      .def_readonly("intervals", &Classification::intervals)
      .def_readonly("regime", &Classification::regime)
      .def_readonly("boundary_snapped", &Classification::boundary_snapped)
      .def_property_readonly("count", &Classification::count);
  py::class_<Discriminant>(m, "Discriminant")
      .def_readonly("delta_cap", &Discriminant::delta_cap)
      .def_readonly("delta_tusi", &Discriminant::delta_tusi)
      .def_readonly("sign", &Discriminant::sign)
      .def_readonly("boundary_snapped", &Discriminant::boundary_snapped);
  py::class_<Maximizer>(m, "Maximizer")
      .def_readonly("alpha_star", &Maximizer::alpha_star)
      .def_readonly("phi_star", &Maximizer::phi_star);

  m.def("discriminant", &discriminant);
  m.def("classify_tusi", &classify_tusi);
  m.def("classify_tusi_general", &classify_tusi_general);
  m.def("classify_reduced", &classify_reduced);
  m.def("classify_quadratic", &classify_quadratic);
  m.def("classify_generalized", &classify_generalized);
  m.def("maximizer", &maximizer);
}

void bind_solvers(py::module_& m) {
  py::class_<ClosedFormTrace>(m, "ClosedFormTrace")
      .def_readonly("s", &ClosedFormTrace::s)
      .def_readonly("cube_args", &ClosedFormTrace::cube_args)
      .def_readonly("root", &ClosedFormTrace::root);
  m.def("cardano_normal", &cardano_normal);
  m.def("cardano_reduced", &cardano_reduced);
  m.def("quadratic_roots", &quadratic_roots);

  py::enum_<Method>(m, "Method")
      .value("auto", Method::automatic)
      .value("bisection", Method::bisection)
      .value("newton", Method::newton)
      .value("chord", Method::chord)
      .value("cardano", Method::cardano);
  py::enum_<ChordStep>(m, "ChordStep")
      .value("exact_root", ChordStep::exact_root)
      .value("newton_midpoint", ChordStep::newton_midpoint);

  py::class_<SolveOptions>(m, "SolveOptions")
      .def(py::init([](double tol, int max_iter, Method method, ChordStep chord_step) {
             return SolveOptions{tol, max_iter, method, chord_step};
           }),
           py::arg("tol") = 1e-12, py::arg("max_iter") = 200, py::arg("method") = Method::automatic,
           py::arg("chord_step") = ChordStep::exact_root)
      .def_readwrite("tol", &SolveOptions::tol)
      .def_readwrite("max_iter", &SolveOptions::max_iter)
      .def_readwrite("method", &SolveOptions::method)
      .def_readwrite("chord_step", &SolveOptions::chord_step);

  py::class_<IterationResult>(m, "IterationResult")
      .def_readonly("root", &IterationResult::root)
      .def_readonly("iterations", &IterationResult::iterations);
  m.def("khayyam_chord_solve",
        [](const NormalForm& f, const SolveOptions& o) { return khayyam_chord_solve(f, o); },
        py::arg("form"), py::arg("options") = SolveOptions{});
  m.def("chord_initial_bracket", &chord_initial_bracket);
  m.def("lookup_roots", [](double delta, int resolution) {
    return lookup_table(resolution).approximate_roots(delta);
  }, py::arg("delta"), py::arg("resolution"));

  py::class_<PipelineStep>(m, "PipelineStep")
      .def_readonly("form", &PipelineStep::form)
      .def_readonly("params", &PipelineStep::params)
      .def_readonly("map", &PipelineStep::map)
      .def_readonly("to_input", &PipelineStep::to_input);
  py::class_<RootEntry>(m, "RootEntry")
      .def_readonly("value", &RootEntry::value)
      .def_readonly("residual", &RootEntry::residual)
      .def_readonly("multiplicity", &RootEntry::multiplicity)
      .def_readonly("lo", &RootEntry::lo)
      .def_readonly("hi", &RootEntry::hi)
      .def_readonly("method", &RootEntry::method)
      .def_readonly("iterations", &RootEntry::iterations)
      .def_readonly("error", &RootEntry::error);
  py::class_<RootReport>(m, "RootReport")
      .def_readonly("pipeline", &RootReport::pipeline)
      .def_readonly("classification", &RootReport::classification)
      .def_readonly("roots", &RootReport::roots)
      .def_readonly("warnings", &RootReport::warnings);

  const SolveOptions defaults{};
  m.def("solve", py::overload_cast<const GeneralCubic&, const SolveOptions&>(&solve), py::arg("form"),
        py::arg("options") = defaults);
  m.def("solve", py::overload_cast<const ReducedForm&, const SolveOptions&>(&solve), py::arg("form"),
        py::arg("options") = defaults);
  m.def("solve", py::overload_cast<const TusiForm&, const SolveOptions&>(&solve), py::arg("form"),
        py::arg("options") = defaults);
  m.def("solve", py::overload_cast<const GeneralizedTusiForm&, const SolveOptions&>(&solve),
        py::arg("form"), py::arg("options") = defaults);
  m.def("solve", py::overload_cast<const QuadraticTusiForm&, const SolveOptions&>(&solve),
        py::arg("form"), py::arg("options") = defaults);
}

void bind_geometry(py::module_& m) {
  py::enum_<ConicKind>(m, "ConicKind")
      .value("circle", ConicKind::circle)
      .value("hyperbola", ConicKind::hyperbola);
  py::class_<ConicSystem>(m, "ConicSystem")
      .def_readonly("kind", &ConicSystem::kind)
      .def_readonly("center_x", &ConicSystem::center_x)
      .def_readonly("param", &ConicSystem::param)
      .def_readonly("q_value", &ConicSystem::q_value)
      .def_readonly("reflected", &ConicSystem::reflected)
      .def_readonly("degenerate", &ConicSystem::degenerate)
      .def("residual", &ConicSystem::residual);
  py::class_<IntersectionPoint>(m, "IntersectionPoint")
      .def_readonly("x", &IntersectionPoint::x)
      .def_readonly("y", &IntersectionPoint::y)
      .def_readonly("multiplicity", &IntersectionPoint::multiplicity);
  py::class_<ViewWindow>(m, "ViewWindow")
      .def(py::init([](double xmin, double xmax, double ymin, double ymax) {
             return ViewWindow{xmin, xmax, ymin, ymax};
           }),
           py::arg("xmin") = -1.5, py::arg("xmax") = 1.5, py::arg("ymin") = -1.5,
           py::arg("ymax") = 1.5);

  m.def("build_conic", &build_conic);
  m.def("intersect_with_parabola", &intersect_with_parabola);
  m.def("emit_svg", &emit_svg, py::arg("conic"), py::arg("window") = ViewWindow{});
  m.def("emit_tusi_split_svg", &emit_tusi_split_svg);
  m.def("emit_phi_family_svg", &emit_phi_family_svg);
}

}  // namespace

PYBIND11_MODULE(_tusi, m) {
  m.doc() = "Tusi-form cubic classification and solvers";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<RegimeError>(m, "RegimeError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception<DerivativeVanishes>(m, "DerivativeVanishes", PyExc_RuntimeError);

  bind_forms(m);
  bind_classify(m);
  bind_solvers(m);
  bind_geometry(m);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
