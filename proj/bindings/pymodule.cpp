#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bc/algorithms.hpp"
#include "bc/classify.hpp"
#include "bc/jsonio.hpp"
#include "bc/parser.hpp"
#include "bc/render.hpp"

namespace py = pybind11;
using namespace bc;

namespace {

struct Analysis {
    CutSet cs;
    CutSetMeta meta;
};

Analysis analyze_impl(const std::string& expression, const std::string& method,
                      const std::vector<std::string>& parameters,
                      const std::map<std::string, double>& bindings,
                      bool semialgebraic, bool classify, bool keep_denested) {
    ParseOptions po;
    po.parameters.insert(parameters.begin(), parameters.end());
    Expr e = parse(expression, po);

    AnalyzeOptions opts;
    if (method == "real")
        opts.method = Method::Real;
    else if (method == "parametric")
        opts.method = Method::Parametric;
    else if (method == "auto")
        opts.method = Method::Auto;
    else
        throw std::invalid_argument("method must be auto, real or parametric");
    opts.semialgebraic = semialgebraic;
    opts.remove_denested_branches = !keep_denested;
    opts.param_values = bindings;

    Analysis a;
    a.cs = bc_c(e, opts);
    if (classify) a.cs = classify_cutset(e, a.cs, bindings);
    a.meta = CutSetMeta{expression, "z", method, parameters};
    return a;
}

Viewport viewport_from(const std::tuple<double, double, double, double>& box,
                       double resolution) {
    Viewport vp;
    std::tie(vp.x_min, vp.x_max, vp.y_min, vp.y_max) = box;
    vp.resolution = resolution;
    if (!(vp.x_min < vp.x_max) || !(vp.y_min < vp.y_max) || !(resolution > 0))
        throw std::invalid_argument("bad viewport");
    return vp;
}

}  // namespace

PYBIND11_MODULE(branchcuts, m) {
    m.doc() = "Branch cuts of expressions in one complex variable";

    m.def(
        "analyze",
        [](const std::string& expression, const std::string& method,
           const std::vector<std::string>& parameters,
           const std::map<std::string, double>& bindings, bool semialgebraic,
           bool classify, bool keep_denested) {
            Analysis a = analyze_impl(expression, method, parameters, bindings,
                                      semialgebraic, classify, keep_denested);
            return cutset_to_json(a.cs, a.meta);
        },
        py::arg("expression"), py::arg("method") = "auto",
        py::arg("parameters") = std::vector<std::string>{},
        py::arg("bindings") = std::map<std::string, double>{},
        py::arg("semialgebraic") = false, py::arg("classify") = false,
        py::arg("keep_denested") = false,
        "Computes the branch cuts and returns the JSON document.");

    m.def(
        "cuts",
        [](const std::string& expression, const std::string& method,
           const std::vector<std::string>& parameters,
           const std::map<std::string, double>& bindings) {
            Analysis a = analyze_impl(expression, method, parameters, bindings,
                                      false, false, false);
            std::vector<std::string> lines;
            for (const auto& c : a.cs.cuts) lines.push_back(c.describe());
            return py::make_tuple(lines, a.cs.warnings);
        },
        py::arg("expression"), py::arg("method") = "auto",
        py::arg("parameters") = std::vector<std::string>{},
        py::arg("bindings") = std::map<std::string, double>{},
        "Returns (cut descriptions, warnings).");

    m.def(
        "svg",
        [](const std::string& expression, const std::string& method,
           const std::vector<std::string>& parameters,
           const std::map<std::string, double>& bindings, bool classify,
           std::tuple<double, double, double, double> box, double resolution) {
            Analysis a = analyze_impl(expression, method, parameters, bindings,
                                      false, classify, false);
            return emit_svg(a.cs, viewport_from(box, resolution), bindings);
        },
        py::arg("expression"), py::arg("method") = "auto",
        py::arg("parameters") = std::vector<std::string>{},
        py::arg("bindings") = std::map<std::string, double>{},
        py::arg("classify") = false,
        py::arg("viewport") = std::make_tuple(-4.0, 4.0, -4.0, 4.0),
        py::arg("resolution") = 100.0, "Renders the cuts as an SVG document.");

    m.def(
        "discontinuity_scan",
        [](const std::string& expression,
           std::tuple<double, double, double, double> box, double resolution,
           const std::vector<std::string>& parameters,
           const std::map<std::string, double>& bindings) {
            ParseOptions po;
            po.parameters.insert(parameters.begin(), parameters.end());
            Expr e = parse(expression, po);
            return grid_discontinuity_scan(e, viewport_from(box, resolution),
                                           bindings);
        },
        py::arg("expression"),
        py::arg("viewport") = std::make_tuple(-4.0, 4.0, -4.0, 4.0),
        py::arg("resolution") = 100.0,
        py::arg("parameters") = std::vector<std::string>{},
        py::arg("bindings") = std::map<std::string, double>{},
        "Grid scan returning midpoints of discontinuous grid edges.");

    m.def(
        "eval_point",
        [](const std::string& expression, std::complex<double> z,
           const std::vector<std::string>& parameters,
           const std::map<std::string, double>& bindings) {
            ParseOptions po;
            po.parameters.insert(parameters.begin(), parameters.end());
            return eval_numeric(parse(expression, po), z, bindings);
        },
        py::arg("expression"), py::arg("z"),
        py::arg("parameters") = std::vector<std::string>{},
        py::arg("bindings") = std::map<std::string, double>{},
        "Principal-branch numeric evaluation.");

    m.def("defining_cut_table",
          []() { return DefiningCutTable::instance().to_json(); },
          "The registered defining-cut table as JSON.");

    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<NotSupported>(m, "NotSupported");
}
