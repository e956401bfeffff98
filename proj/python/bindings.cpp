#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chronoscale/corpus.hpp"
#include "chronoscale/delta_calculus.hpp"
#include "chronoscale/error.hpp"
#include "chronoscale/expr.hpp"
#include "chronoscale/harness.hpp"
#include "chronoscale/inequality.hpp"
#include "chronoscale/report.hpp"
#include "chronoscale/timescale.hpp"

namespace py = pybind11;
using namespace chronoscale;

namespace {

using RectTuple = std::tuple<double, double, double, double>;

VerifyOptions make_options(const std::string& anchor) {
  VerifyOptions opts;
  opts.anchor = parse_corner_anchor(anchor);
  return opts;
}

TimeScalePair make_pair(const std::string& ts1, const std::string& ts2) {
  return TimeScalePair{parse_timescale(ts1), parse_timescale(ts2)};
}

Rectangle make_rect(const TimeScalePair& pair, const RectTuple& r) {
  return make_rectangle(pair, std::get<0>(r), std::get<1>(r), std::get<2>(r), std::get<3>(r));
}

py::dict result_dict(const InequalityResult& r) {
  py::dict d;
  d["theorem"] = to_string(r.theorem);
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["margin"] = r.margin;
  d["pass"] = r.pass;
  d["timescale1"] = r.timescale1;
  d["timescale2"] = r.timescale2;
  d["rect"] = py::make_tuple(r.rect.a, r.rect.b, r.rect.c, r.rect.d);
  d["f"] = r.f;
  d["g"] = r.g;
  d["notes"] = r.notes;
  return d;
}

}  // namespace

PYBIND11_MODULE(_chronoscale, m) {
  m.doc() = "Time-scale calculus engine and inequality verifier";

  py::register_exception<Error>(m, "ChronoscaleError", PyExc_ValueError);

  py::class_<TimeScale>(m, "TimeScale")
      .def(py::init([](const std::string& text) { return parse_timescale(text); }), py::arg("descriptor"))
      .def_property_readonly("descriptor", &TimeScale::descriptor)
      .def_property_readonly("min", &TimeScale::min)
      .def_property_readonly("max", &TimeScale::max)
      .def("segments",
           [](const TimeScale& ts) {
             std::vector<std::pair<double, double>> out;
             for (const Segment& s : ts.segments()) {
               out.emplace_back(s.lo, s.hi);
             }
             return out;
           })
      .def("contains", &TimeScale::contains, py::arg("t"))
      .def("sigma", &TimeScale::sigma, py::arg("t"))
      .def("rho", &TimeScale::rho, py::arg("t"))
      .def("graininess", &TimeScale::graininess, py::arg("t"))
      .def("__repr__", [](const TimeScale& ts) { return "TimeScale('" + ts.descriptor() + "')"; });

  m.def(
      "delta_integral_1d",
      [](const std::string& ts, const std::function<double(double)>& h, double a, double b) {
        return delta_integral_1d(parse_timescale(ts), h, a, b);
      },
      py::arg("timescale"), py::arg("h"), py::arg("a"), py::arg("b"),
      "Delta integral of h over [a, b) on the time scale.");

  m.def(
      "delta_integral_2d",
      [](const std::string& ts1, const std::string& ts2, const std::function<double(double, double)>& F,
         const RectTuple& rect) {
        const TimeScalePair pair = make_pair(ts1, ts2);
        return delta_integral_2d(pair, F, make_rect(pair, rect));
      },
      py::arg("ts1"), py::arg("ts2"), py::arg("F"), py::arg("rect"),
      "Iterated delta integral of F(x, y) over [a, b) x [c, d).");

  m.def(
      "mixed_delta",
      [](const std::string& f, const std::string& ts1, const std::string& ts2, double x, double y) {
        return mixed_delta(resolve_function(f), make_pair(ts1, ts2), x, y);
      },
      py::arg("f"), py::arg("ts1"), py::arg("ts2"), py::arg("x"), py::arg("y"),
      "Mixed delta partial derivative of an expression or corpus label at (x, y).");

  m.def(
      "verify",
      [](const std::string& theorem, const std::string& f, const std::string& ts1, const std::string& ts2,
         const RectTuple& rect, const std::optional<std::string>& g, const std::string& anchor) {
        const TimeScalePair pair = make_pair(ts1, ts2);
        const BivariateFunction ff = resolve_function(f);
        const BivariateFunction gg = g ? resolve_function(*g) : ff;
        return result_dict(verify(parse_theorem_id(theorem), ff, gg, pair, make_rect(pair, rect), make_options(anchor)));
      },
      py::arg("theorem"), py::arg("f"), py::arg("ts1"), py::arg("ts2"), py::arg("rect"), py::arg("g") = py::none(),
      py::arg("anchor") = "jump", "Run one identity or inequality check and return the result as a dict.");

  m.def(
      "run_campaign",
      [](int trials, std::uint64_t seed, const std::vector<std::string>& theorems,
         const std::vector<std::string>& functions, int threads, const std::string& anchor) {
        CampaignConfig cfg;
        cfg.trials = trials;
        cfg.seed = seed;
        cfg.theorems.clear();
        for (const std::string& id : theorems) {
          cfg.theorems.push_back(parse_theorem_id(id));
        }
        cfg.functions = functions;
        cfg.threads = threads;
        cfg.options = make_options(anchor);
        cfg.validate();
        VerificationReport report;
        {
          py::gil_scoped_release release;
          report = run_campaign(cfg);
        }
        return report_to_json(report);
      },
      py::arg("trials") = 100, py::arg("seed") = 1, py::arg("theorems") = std::vector<std::string>{"thm21"},
      py::arg("functions") = std::vector<std::string>{}, py::arg("threads") = 0, py::arg("anchor") = "jump",
      "Run a seeded campaign and return the JSON report text.");

  m.def("parse_expr", [](const std::string& text) { return print_expr(parse_expr(text)); }, py::arg("text"),
        "Parse an expression in x and y and return its canonical printed form.");
  m.def("eval_expr", [](const std::string& text, double x, double y) { return eval_expr(parse_expr(text), x, y); },
        py::arg("text"), py::arg("x"), py::arg("y"));

  m.attr("__version__") = artifact_version();
}
