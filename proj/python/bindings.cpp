#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wildram/cli.hpp"
#include "wildram/errors.hpp"
#include "wildram/oracle.hpp"
#include "wildram/report_io.hpp"

namespace py = pybind11;
using namespace wildram;

namespace {

py::object fraction(const Rational& q) {
    static py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(q.numerator(), q.denominator());
}

py::list fractions(const std::vector<Rational>& qs) {
    py::list out;
    for (const Rational& q : qs) out.append(fraction(q));
    return out;
}

std::vector<Rational> rationals(const py::sequence& seq) {
    std::vector<Rational> out;
    for (const auto& item : seq) {
        py::object o = py::reinterpret_borrow<py::object>(item);
        if (py::isinstance<py::int_>(o)) {
            out.emplace_back(o.cast<std::int64_t>());
        } else {
            out.emplace_back(o.attr("numerator").cast<std::int64_t>(), o.attr("denominator").cast<std::int64_t>());
        }
    }
    return out;
}

// Coefficients keyed by exponent; e = 1 gives ints, e > 1 coordinate tuples.
py::dict coefficient_map(const LaurentSeries& s) {
    py::dict d;
    const FieldCtx& f = s.field();
    for (auto [k, c] : s.terms()) {
        if (f.e() == 1) d[py::int_(k)] = py::int_(f.coords(c)[0]);
        else d[py::int_(k)] = py::tuple(py::cast(f.coords(c)));
    }
    return d;
}

Command command(const std::string& name) {
    auto c = command_from_string(name);
    if (!c) throw InvalidInput("unknown command '" + name + "' (expected reduce, jumps, genus or verify)");
    return *c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Ramification filtrations of Artin-Schreier-Witt extensions in characteristic p";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
    py::register_exception<RootNotInField>(m, "RootNotInField", base.ptr());
    py::register_exception<InsufficientPrecision>(m, "InsufficientPrecision", base.ptr());
    py::register_exception<AssertionFailure>(m, "AssertionFailure", base.ptr());
    py::register_exception<ContextMismatch>(m, "ContextMismatch", base.ptr());

    py::enum_<Status>(m, "Status")
        .value("FormulaOnly", Status::FormulaOnly)
        .value("OracleConfirmed", Status::OracleConfirmed)
        .value("Undetermined", Status::Undetermined)
        .value("DiscrepancyFlag", Status::DiscrepancyFlag);

    py::class_<LaurentSeries>(m, "Series")
        .def(py::init(&parse_series_literal), py::arg("literal"),
             "Parse \"p=3 e=1; 2*t^-5 + t^-1 + O(t^20)\".")
        .def_property_readonly("p", [](const LaurentSeries& s) { return s.field().p(); })
        .def_property_readonly("e", [](const LaurentSeries& s) { return s.field().e(); })
        .def_property_readonly("prec", [](const LaurentSeries& s) -> py::object {
            if (s.is_exact()) return py::none();
            return py::int_(s.prec());
        })
        .def_property_readonly("valuation", &LaurentSeries::valuation)
        .def_property_readonly("coefficients", &coefficient_map)
        .def("__add__", [](const LaurentSeries& a, const LaurentSeries& b) { return a + b; })
        .def("__sub__", [](const LaurentSeries& a, const LaurentSeries& b) { return a - b; })
        .def("__mul__", [](const LaurentSeries& a, const LaurentSeries& b) { return a * b; })
        .def("__eq__", [](const LaurentSeries& a, const LaurentSeries& b) { return a == b; })
        .def("__str__", [](const LaurentSeries& s) { return render_series_literal(s); })
        .def("__repr__", [](const LaurentSeries& s) { return "Series('" + render_series_literal(s) + "')"; });

    py::class_<RamReport>(m, "Report")
        .def_readonly("group", &RamReport::group)
        .def_readonly("case", &RamReport::case_label)
        .def_property_readonly("upper_jumps", [](const RamReport& r) { return fractions(r.upper_jumps); })
        .def_property_readonly("lower_jumps", [](const RamReport& r) { return fractions(r.lower_jumps); })
        .def_readonly("orders", &RamReport::orders)
        .def_readonly("different_degree", &RamReport::different_degree)
        .def_readonly("genus", &RamReport::genus)
        .def_readonly("status", &RamReport::status)
        .def_readonly("notes", &RamReport::notes)
        .def_property_readonly("exit_code", [](const RamReport& r) { return exit_code(r.status); })
        .def("to_json", &report_to_json)
        .def_static("from_json", &report_from_json)
        .def("__repr__", [](const RamReport& r) { return "<Report " + r.group + ": " + r.case_label + ">"; });

    m.def(
        "reduce_as",
        [](const LaurentSeries& f) {
            const ReducedAS r = reduce_as(f);
            py::dict d;
            d["reduced"] = r.f_red;
            d["shift"] = r.shift;
            d["kind"] = to_string(r.kind);
            d["conductor"] = r.conductor();
            return d;
        },
        py::arg("f"), "Artin-Schreier normal form of f.");
    m.def(
        "reduce_witt2",
        [](const LaurentSeries& a0, const LaurentSeries& a1) {
            const ReducedWitt2 r = reduce_witt2({a0, a1});
            py::dict d;
            d["reduced"] = py::make_tuple(r.vec_red.a0, r.vec_red.a1);
            d["shift"] = py::make_tuple(r.shift.a0, r.shift.a1);
            d["kinds"] = py::make_tuple(to_string(r.kind0), to_string(r.kind1));
            d["pole_orders"] = py::make_tuple(r.n0, r.n1);
            return d;
        },
        py::arg("a0"), py::arg("a1"));
    m.def(
        "witt_add",
        [](const LaurentSeries& a0, const LaurentSeries& a1, const LaurentSeries& b0, const LaurentSeries& b1) {
            const WittVec2 s = witt_add({a0, a1}, {b0, b1});
            return py::make_tuple(s.a0, s.a1);
        },
        py::arg("a0"), py::arg("a1"), py::arg("b0"), py::arg("b1"));

    m.def(
        "jumps_as", [](const LaurentSeries& f) { return report_as(reduce_as(f)); }, py::arg("f"));
    m.def(
        "jumps_witt2", [](const LaurentSeries& a0, const LaurentSeries& a1) { return report_witt2(reduce_witt2({a0, a1})); },
        py::arg("a0"), py::arg("a1"));
    m.def("compositum_as", &compositum_p_cyclic, py::arg("f"), py::arg("g"));
    m.def(
        "compositum_witt2",
        [](const LaurentSeries& a0, const LaurentSeries& a1, const LaurentSeries& b0, const LaurentSeries& b1) {
            return compositum_p2({a0, a1}, {b0, b1});
        },
        py::arg("a0"), py::arg("a1"), py::arg("b0"), py::arg("b1"));

    m.def(
        "lower_to_upper",
        [](const py::sequence& jumps, const std::vector<std::int64_t>& orders) {
            return fractions(lower_to_upper(JumpProfile::make(Numbering::Lower, rationals(jumps), orders)).jumps);
        },
        py::arg("jumps"), py::arg("orders"));
    m.def(
        "upper_to_lower",
        [](const py::sequence& jumps, const std::vector<std::int64_t>& orders) {
            return fractions(upper_to_lower(JumpProfile::make(Numbering::Upper, rationals(jumps), orders)).jumps);
        },
        py::arg("jumps"), py::arg("orders"));

    m.def(
        "oracle_p_cyclic_jump",
        [](const LaurentSeries& f, std::int64_t prec) { return oracle_p_cyclic_jump(reduce_as(f), prec); },
        py::arg("f"), py::arg("prec") = kDefaultPrec);
    m.def(
        "oracle_p2_second_jump",
        [](const LaurentSeries& a0, const LaurentSeries& a1, std::int64_t prec) {
            return oracle_p2_second_jump(reduce_witt2({a0, a1}), prec);
        },
        py::arg("a0"), py::arg("a1"), py::arg("prec") = kDefaultPrec);

    m.def(
        "run_job",
        [](const std::string& text, const std::string& cmd, std::optional<std::int64_t> prec) {
            return run(parse_job(text), command(cmd), RunOptions{prec});
        },
        py::arg("text"), py::arg("command") = "jumps", py::arg("prec") = py::none(),
        "Parse a job file and run reduce, jumps, genus or verify.");
    m.def(
        "verification_suite",
        [](std::int64_t trials, std::uint64_t seed) {
            SuiteOptions o;
            o.trials = trials;
            o.seed = seed;
            return run_verification_suite(o);
        },
        py::arg("trials") = 100, py::arg("seed") = 1);
}
