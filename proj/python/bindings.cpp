#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mixsing/invariants.hpp"
#include "mixsing/newton.hpp"
#include "mixsing/nondegen.hpp"
#include "mixsing/report.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace mixsing;

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

ProbeConfig make_cfg(std::uint64_t seed, int starts, int iters) {
    ProbeConfig c;
    c.seed = seed;
    c.starts = starts;
    c.iters = iters;
    c.validate();
    return c;
}

CheckMode make_mode(const std::string& m) {
    if (m == "nondeg") return CheckMode::nondeg;
    if (m == "strong") return CheckMode::strong;
    if (m == "true") return CheckMode::true_nd;
    throw std::invalid_argument("mode must be nondeg, strong or true");
}

MixedPolynomial parse_any(const py::object& f) {
    if (py::isinstance<MixedPolynomial>(f)) return f.cast<MixedPolynomial>();
    return parse(f.cast<std::string>());
}

}  // namespace

PYBIND11_MODULE(mixsing, m) {
    m.doc() = "Mixed polynomial singularities in two variables";

    static py::exception<ParseError> parse_exc(m, "ParseError", PyExc_ValueError);
    static py::exception<NonConvergence> nc_exc(m, "NonConvergence", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            py::object err = py::reinterpret_borrow<py::object>(parse_exc.ptr())(e.what());
            err.attr("position") = e.position;
            PyErr_SetObject(parse_exc.ptr(), err.ptr());
        } catch (const NonConvergence& e) {
            nc_exc(e.what());
        }
    });

    py::class_<MixedPolynomial>(m, "MixedPolynomial")
        .def(py::init([](const std::string& text, int n) { return parse(text, n); }), "text"_a, "n"_a = 0)
        .def_readonly("n", &MixedPolynomial::n)
        .def("__len__", &MixedPolynomial::size)
        .def("__str__", [](const MixedPolynomial& f) { return format(f); })
        .def("__repr__", [](const MixedPolynomial& f) { return "MixedPolynomial('" + format(f) + "')"; })
        .def("__eq__", [](const MixedPolynomial& a, const MixedPolynomial& b) { return a == b; })
        .def("__add__", [](const MixedPolynomial& a, const MixedPolynomial& b) { return a + b; })
        .def("__sub__", [](const MixedPolynomial& a, const MixedPolynomial& b) { return a - b; })
        .def("__mul__", [](const MixedPolynomial& a, const MixedPolynomial& b) { return a * b; })
        .def("__neg__", [](const MixedPolynomial& a) { return -a; })
        .def("__call__", [](const MixedPolynomial& f, const CVec& z) { return evaluate(f, z); }, "z"_a)
        .def("terms", [](const MixedPolynomial& f) {
            py::list out;
            for (const auto& t : f.terms)
                out.append(py::make_tuple(t.nu, t.mu, std::complex<double>(t.coeff.re.convert_to<double>(),
                                                                            t.coeff.im.convert_to<double>())));
            return out;
        })
        .def("rdeg", [](const MixedPolynomial& f, const IVec& P) {
            std::vector<long long> out;
            for (const auto& t : f.terms) out.push_back(rdeg(P, t));
            return out;
        }, "weight"_a)
        .def("pdeg", [](const MixedPolynomial& f, const IVec& P) {
            std::vector<long long> out;
            for (const auto& t : f.terms) out.push_back(pdeg(P, t));
            return out;
        }, "weight"_a)
        .def("conjugate", [](const MixedPolynomial& f) { return conjugate(f); })
        .def("face_function", [](const MixedPolynomial& f, const IVec& P) { return face_function(P, f); }, "weight"_a);

    m.def("parse", &parse, "text"_a, "n"_a = 0);

    m.def("newton", [](const py::object& f, std::optional<IVec> weight) {
        auto p = parse_any(f);
        return to_py(newton_report(p, weight));
    }, "f"_a, "weight"_a = py::none());

    m.def("fan", [](const py::object& f) { return to_py(fan_report(parse_any(f))); }, "f"_a);

    m.def("probe", [](const py::object& f, const std::string& mode, std::uint64_t seed, int starts, int iters,
                      std::optional<IVec> weight) {
        return to_py(probe_report(parse_any(f), make_mode(mode), make_cfg(seed, starts, iters), weight));
    }, "f"_a, "mode"_a = "nondeg", "seed"_a = 0, "starts"_a = 64, "iters"_a = 500, "weight"_a = py::none());

    m.def("lkn", [](const py::object& f, int steps, std::uint64_t seed) {
        return to_py(lkn_report(parse_any(f), steps, seed));
    }, "f"_a, "steps"_a = 2048, "seed"_a = 0);

    m.def("zeta", [](const py::object& f, int steps, std::uint64_t seed) {
        InvariantOptions opt;
        opt.steps = steps;
        opt.seed = seed;
        return to_py(zeta_report(parse_any(f), opt));
    }, "f"_a, "steps"_a = 2048, "seed"_a = 0);

    // Errors are reported inside the returned dict under "error", as the CLI does.
    m.def("analyze", [](const std::string& text, std::uint64_t seed, int starts, int iters, int steps) {
        auto f = parse(text);
        InvariantOptions opt;
        opt.steps = steps;
        opt.seed = seed;
        return to_py(analyze(text, f, make_cfg(seed, starts, iters), opt).report);
    }, "text"_a, "seed"_a = 0, "starts"_a = 64, "iters"_a = 500, "steps"_a = 2048);

    m.def("milnor_number", [](const py::object& f) { return curve_invariants(parse_any(f)).mu; }, "f"_a);
    m.def("lkn_star_binomial", &lkn_star_binomial, "a"_a, "a_pr"_a, "b"_a, "b_pr"_a);
}
