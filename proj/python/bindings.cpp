#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bgk/limits.hpp"
#include "bgk/spectrum.hpp"
#include "bgk/verify.hpp"

namespace py = pybind11;
using namespace bgk;

namespace {

Side parse_side(const std::string& s) {
    if (s == "plus") return Side::plus;
    if (s == "minus") return Side::minus;
    if (s == "pv") return Side::pv;
    throw DomainError("side must be 'plus', 'minus' or 'pv', got '" + s + "'");
}

FreeMolecularSolution fm_from(const std::array<double, 6>& c) {
    return make_fm_solution(c[0], c[1], c[2], c[3], c[4], c[5]);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Dispersion function and spectral data of the BGK equation with affine collision frequency";

    auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<RegionError>(m, "RegionError", domain.ptr());
    auto eval = py::register_exception<EvaluationError>(m, "EvaluationError", PyExc_RuntimeError);
    py::register_exception<IllConditionedContour>(m, "IllConditionedContour", eval.ptr());

    py::class_<GasParams>(m, "GasParams")
        .def_readonly("a", &GasParams::a)
        .def_readonly("alpha", &GasParams::alpha)
        .def_readonly("beta", &GasParams::beta)
        .def_readonly("r0", &GasParams::r0)
        .def_readonly("r1", &GasParams::r1)
        .def_readonly("r2", &GasParams::r2)
        .def("unbounded_cut", &GasParams::unbounded_cut)
        .def("__repr__", [](const GasParams& p) { return "GasParams(a=" + std::to_string(p.a) + ")"; });
    m.def("make_params", &make_params, py::arg("a"));
    m.def("velocity_map", &velocity_map, py::arg("params"), py::arg("mu"));
    m.def("weight", &weight, py::arg("params"), py::arg("mu"));

    py::class_<QuadratureScheme>(m, "QuadratureScheme")
        .def(py::init<const GasParams&, int>(), py::arg("params"), py::arg("nodes") = QuadratureScheme::default_nodes)
        .def_property_readonly("params", &QuadratureScheme::params)
        .def_property_readonly("nodes", &QuadratureScheme::nodes);

    m.def("moments_at", [](const QuadratureScheme& s, cplx z) { return moments_at(s, z).t; });
    m.def("moments_boundary", [](const QuadratureScheme& s, double x, const std::string& side) {
        const Side sd = parse_side(side);
        return (sd == Side::pv ? moments_pv(s, x) : moments_boundary(s, x, sd)).t;
    }, py::arg("scheme"), py::arg("x"), py::arg("side") = "plus");

    m.def("lambda_fn", &lambda_fn, py::arg("scheme"), py::arg("z"));
    m.def("lambda_boundary", [](const QuadratureScheme& s, double x, const std::string& side) {
        const Side sd = parse_side(side);
        return sd == Side::pv ? lambda_pv(s, x) : lambda_boundary(s, x, sd);
    }, py::arg("scheme"), py::arg("x"), py::arg("side") = "plus");
    m.def("dispersion_curve", [](const QuadratureScheme& s, const std::vector<double>& xs) {
        std::vector<cplx> out;
        out.reserve(xs.size());
        for (double x : xs) out.push_back(lambda_boundary(s, x, Side::plus));
        return out;
    }, py::arg("scheme"), py::arg("xs"));

    m.def("sokhotsky_jump", [](const QuadratureScheme& s, double x) {
        const SokhotskyResult r = sokhotsky_jump(s, x);
        py::dict d;
        d["lambda_plus"] = r.lambda_plus;
        d["lambda_minus"] = r.lambda_minus;
        d["jump"] = r.jump;
        d["claimed_jump"] = r.claimed_jump;
        d["mean"] = r.mean;
        d["lambda_pv"] = r.lambda_pv;
        d["ratio"] = r.ratio;
        return d;
    }, py::arg("scheme"), py::arg("x"));
    m.def("laurent_order_at_infinity", [](const QuadratureScheme& s) {
        const LaurentFit f = laurent_order_at_infinity(s);
        return py::make_tuple(f.order, f.leading_coeff);
    }, py::arg("scheme"), "(order, leading coefficient) of the zero at infinity");
    m.def("keyhole_contour", &keyhole_contour, py::arg("params"), py::arg("half_width"), py::arg("half_height"),
          py::arg("margin"));
    m.def("upper_semicircle", &upper_semicircle, py::arg("radius"), py::arg("base"), py::arg("arc_vertices") = 256);
    m.def("count_zeros", [](const QuadratureScheme& s, const Contour& c) { return count_zeros(s, c).winding; },
          py::arg("scheme"), py::arg("contour"));
    m.def("principal_symbol_zeros", &principal_symbol_zeros, py::arg("scheme"), py::arg("samples") = 2000);

    m.def("discrete_solution", &discrete_solution, py::arg("params"), py::arg("k"), py::arg("x"), py::arg("mu"));
    m.def("residual", [](const QuadratureScheme& s, const Profile& h, double x) { return residual_2_4(s, h, x); },
          py::arg("scheme"), py::arg("h"), py::arg("x"),
          "sup over the default mu-grid of the transport-equation residual of h(x, mu)");
    m.def("normalization_deviation", [](const QuadratureScheme& s, double eta) {
        return normalization_check(s, eta).deviation;
    }, py::arg("scheme"), py::arg("eta"));

    m.def("lambda_c", &lambda_c, py::arg("z"));
    m.def("lambda_c_half_plane", &lambda_c_half_plane, py::arg("z"));
    m.def("lambda_a0", &lambda_a0, py::arg("z"));

    m.def("fm_project_system", &fm_project_system);
    m.def("fm_decay_rate", &fm_decay_rate);
    m.def("fm_published_decay_rate", &fm_published_decay_rate);
    m.def("fm_general_solution", [](const std::array<double, 6>& c, double x, double v) {
        return fm_general_solution(fm_from(c), x, v);
    }, py::arg("constants"), py::arg("x"), py::arg("c"), "constants = (A0, A1, A2, A3, At1, At3)");
    m.def("fm_residual", [](const std::array<double, 6>& c, double x) { return fm_residual(fm_from(c), x); },
          py::arg("constants"), py::arg("x"));
    m.def("kernel_scaling_metric", &kernel_scaling_metric, py::arg("a"));

    m.def("spectrum_verify", [](double a, int nodes) {
        py::list out;
        for (const auto& c : spectrum_verify(a, nodes)) {
            py::dict d;
            d["check"] = c.check;
            d["status"] = c.status;
            d["value"] = c.value;
            d["tolerance"] = c.tolerance;
            d["note"] = c.note;
            out.append(d);
        }
        return out;
    }, py::arg("a"), py::arg("nodes") = QuadratureScheme::default_nodes);
}
