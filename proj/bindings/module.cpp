#include <pybind11/pybind11.h>

#include <string>
#include <vector>

#include "walras/arrow_debreu.hpp"
#include "walras/config_lp.hpp"
#include "walras/demand.hpp"
#include "walras/equilibrium.hpp"
#include "walras/instance.hpp"
#include "walras/io.hpp"

namespace py = pybind11;
using namespace walras;

namespace {

// Text in, text out: instances and reports cross the boundary as the same
// JSON documents the CLI reads and writes, so nothing rational ever touches
// a Python float.

AuctionInstance load_checked(const std::string& text) {
    AuctionInstance inst = parse_instance(text);
    const ValidationReport report = validate_instance(inst);
    if (!report.ok) {
        std::string msg = "instance fails validation";
        if (!report.violations.empty())
            msg += ": " + report.violations[0].where + ": " + report.violations[0].detail;
        throw IoError(msg);
    }
    return inst;
}

std::string py_validate(const std::string& text) {
    AuctionInstance inst = parse_instance(text);
    return report_validation(inst, validate_instance(inst));
}

std::string py_canonical(const std::string& text) {
    return print_instance(load_checked(text));
}

std::string py_digest(const std::string& text) {
    return instance_digest(load_checked(text));
}

std::string py_solve(const std::string& text, const std::string& mode, int grid, int refine,
                     const std::string& eps) {
    AuctionInstance inst = load_checked(text);
    if (mode != "we" && mode != "frac") throw IoError("mode: expected \"we\" or \"frac\"");
    if (grid < 0 || refine < 0) throw IoError("grid/refine: expected nonnegative counts");
    auto q = parse_rational(eps);
    if (!q || *q < 0) throw IoError("eps: expected a nonnegative rational");
    SolveOptions options;
    options.grid_k = grid;
    options.refinements = refine;
    options.eps = *q;
    const SolveOutcome outcome =
        mode == "we" ? solve_we(inst, options) : solve_fractional_we(inst, options);
    return report_solve(inst, outcome);
}

std::string py_demand(const std::string& text, const std::string& prices_text) {
    AuctionInstance inst = load_checked(text);
    const PriceVector prices = parse_prices_arg(inst, prices_text);
    std::vector<DemandSet> demands;
    for (int i = 0; i < inst.bidder_count(); ++i) demands.push_back(demand_set(inst, i, prices));
    return report_demand(inst, prices, demands);
}

std::string py_verify(const std::string& text, const std::string& prices_text,
                      const py::object& alloc, const py::object& frac) {
    AuctionInstance inst = load_checked(text);
    const PriceVector prices = parse_prices_arg(inst, prices_text);
    if (alloc.is_none() == frac.is_none())
        throw IoError("verify needs exactly one of alloc and frac");
    const Verdict verdict =
        !alloc.is_none()
            ? verify_we(inst, prices, parse_alloc_arg(inst, alloc.cast<std::string>()))
            : verify_fractional_we(inst, prices, parse_frac_arg(inst, frac.cast<std::string>()));
    return report_verdict(inst, verdict);
}

std::string py_brute(const std::string& text, const std::string& step_text) {
    AuctionInstance inst = load_checked(text);
    auto step = parse_rational(step_text);
    if (!step || *step < 0) throw IoError("step: expected a nonnegative rational");
    return report_brute(inst, *step, brute_force_we(inst, *step));
}

std::string py_reduce(const std::string& text) {
    AuctionInstance inst = load_checked(text);
    return report_market(inst, reduce(inst));
}

std::string py_configlp(const std::string& text, const std::string& prices_text, bool dual,
                        bool solve) {
    AuctionInstance inst = load_checked(text);
    const PriceVector prices = parse_prices_arg(inst, prices_text);
    const LinearProgram lp = dual ? build_dual_lp(inst, prices) : build_induced_lp(inst, prices).lp;
    std::string out = dump_lp(lp);
    if (solve) out += dump_lp_solution(lp, solve_lp(lp));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Walrasian equilibrium toolkit";

    py::register_exception<IoError>(m, "IoError", PyExc_ValueError);

    m.def("version", [] { return std::string(tool_version); },
          "tool name and version string");
    m.def("validate", &py_validate, py::arg("instance"),
          "validation report for an instance document");
    m.def("canonical", &py_canonical, py::arg("instance"),
          "canonical serialization of a valid instance");
    m.def("digest", &py_digest, py::arg("instance"),
          "content digest of a valid instance");
    m.def("solve", &py_solve, py::arg("instance"), py::arg("mode") = "we", py::arg("grid") = 0,
          py::arg("refine") = 2, py::arg("eps") = "0",
          "equilibrium search report; mode is \"we\" or \"frac\"");
    m.def("demand", &py_demand, py::arg("instance"), py::arg("prices"),
          "per-bidder demand sets at comma-separated prices");
    m.def("verify", &py_verify, py::arg("instance"), py::arg("prices"),
          py::arg("alloc") = py::none(), py::arg("frac") = py::none(),
          "verdict for a claimed equilibrium, integral or fractional");
    m.def("brute", &py_brute, py::arg("instance"), py::arg("step"),
          "all equilibria on the price grid with the given step");
    m.def("reduce", &py_reduce, py::arg("instance"),
          "exchange-economy image of the instance");
    m.def("configlp", &py_configlp, py::arg("instance"), py::arg("prices"),
          py::arg("dual") = false, py::arg("solve") = false,
          "assignment LP (or its dual) at the given prices, as text");
}
