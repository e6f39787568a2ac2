#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "walras/arrow_debreu.hpp"
#include "walras/config_lp.hpp"
#include "walras/demand.hpp"
#include "walras/equilibrium.hpp"
#include "walras/instance.hpp"
#include "walras/io.hpp"

namespace {

using namespace walras;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Parses and validates; commands other than `validate` refuse to run on
/// a structurally broken instance.
AuctionInstance load_checked(const std::string& path) {
    AuctionInstance inst = parse_instance(slurp(path));
    const ValidationReport report = validate_instance(inst);
    if (!report.ok) {
        std::cerr << report_validation(inst, report);
        throw IoError(path + ": instance fails validation");
    }
    return inst;
}

Rational parse_nonneg(const std::string& text, const std::string& what) {
    auto q = parse_rational(text);
    if (!q || *q < 0) throw IoError(what + ": expected a nonnegative rational, got \"" + text + "\"");
    return *q;
}

int cmd_validate(const std::string& path) {
    AuctionInstance inst = parse_instance(slurp(path));
    const ValidationReport report = validate_instance(inst);
    std::cout << report_validation(inst, report);
    return report.ok ? 0 : 2;
}

int cmd_demand(const std::string& path, const std::string& prices_text) {
    AuctionInstance inst = load_checked(path);
    const PriceVector prices = parse_prices_arg(inst, prices_text);
    std::vector<DemandSet> demands;
    for (int i = 0; i < inst.bidder_count(); ++i) demands.push_back(demand_set(inst, i, prices));
    std::cout << report_demand(inst, prices, demands);
    return 0;
}

int cmd_solve(const std::string& path, int grid, int refine, const std::string& eps_text,
              const std::string& mode, const std::string& out_path) {
    AuctionInstance inst = load_checked(path);
    if (mode != "we" && mode != "frac") throw IoError("mode: expected \"we\" or \"frac\"");
    SolveOptions options;
    options.grid_k = grid;
    options.refinements = refine;
    options.eps = parse_nonneg(eps_text, "eps");
    if (grid < 0 || refine < 0) throw IoError("grid/refine: expected nonnegative counts");

    const SolveOutcome outcome =
        mode == "we" ? solve_we(inst, options) : solve_fractional_we(inst, options);
    const std::string report = report_solve(inst, outcome);
    if (out_path.empty()) {
        std::cout << report;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw IoError("cannot write " + out_path);
        out << report;
    }
    const bool positive = mode == "we" ? outcome.status == SolveStatus::we_found
                                       : outcome.status == SolveStatus::frac_only;
    return positive ? 0 : 1;
}

int cmd_configlp(const std::string& path, const std::string& prices_text, bool dual, bool solve) {
    AuctionInstance inst = load_checked(path);
    const PriceVector prices = parse_prices_arg(inst, prices_text);
    const LinearProgram lp =
        dual ? build_dual_lp(inst, prices) : build_induced_lp(inst, prices).lp;
    std::cout << dump_lp(lp);
    if (solve) std::cout << dump_lp_solution(lp, solve_lp(lp));
    return 0;
}

int cmd_reduce(const std::string& path) {
    AuctionInstance inst = load_checked(path);
    std::cout << report_market(inst, reduce(inst));
    return 0;
}

int cmd_verify(const std::string& path, const std::string& prices_text,
               const std::string& alloc_text, bool alloc_given, const std::string& frac_text,
               bool frac_given) {
    AuctionInstance inst = load_checked(path);
    const PriceVector prices = parse_prices_arg(inst, prices_text);
    if (alloc_given == frac_given)
        throw IoError("verify needs exactly one of --alloc and --frac");
    const Verdict verdict = alloc_given
                                ? verify_we(inst, prices, parse_alloc_arg(inst, alloc_text))
                                : verify_fractional_we(inst, prices, parse_frac_arg(inst, frac_text));
    std::cout << report_verdict(inst, verdict);
    return verdict.ok ? 0 : 1;
}

int cmd_brute(const std::string& path, const std::string& step_text) {
    AuctionInstance inst = load_checked(path);
    const Rational step = parse_nonneg(step_text, "step");
    const auto found = brute_force_we(inst, step);
    std::cout << report_brute(inst, step, found);
    return found.empty() ? 1 : 0;
}

int run(int argc, char** argv) {
    CLI::App app{"exact Walrasian equilibrium toolkit"};
    app.set_version_flag("--version", std::string(tool_version));
    app.require_subcommand(1);

    std::string path, prices_text, alloc_text, frac_text, eps_text = "0", mode = "we";
    std::string out_path, step_text;
    int grid = 0, refine = 2;
    bool dual = false, solve_flag = false;

    CLI::App* validate = app.add_subcommand("validate", "check an instance file");
    validate->add_option("path", path, "instance file")->required();

    CLI::App* demand = app.add_subcommand("demand", "demand sets at given prices");
    demand->add_option("path", path, "instance file")->required();
    demand->add_option("--prices", prices_text, "comma-separated per-item prices")->required();

    CLI::App* solve = app.add_subcommand("solve", "search for an equilibrium");
    solve->add_option("path", path, "instance file")->required();
    solve->add_option("--grid", grid, "grid points per axis (0 = default)");
    solve->add_option("--refine", refine, "local refinement rounds");
    solve->add_option("--eps", eps_text, "near-miss reporting bound");
    solve->add_option("--mode", mode, "we | frac");
    solve->add_option("--out", out_path, "write the report here instead of stdout");

    CLI::App* configlp = app.add_subcommand("configlp", "dump the assignment LP at prices");
    configlp->add_option("path", path, "instance file")->required();
    configlp->add_option("--prices", prices_text, "comma-separated per-item prices")->required();
    configlp->add_flag("--dual", dual, "dump the dual instead");
    configlp->add_flag("--solve", solve_flag, "also solve and print the solution");

    CLI::App* reduce = app.add_subcommand("reduce", "print the exchange-economy image");
    reduce->add_option("path", path, "instance file")->required();

    CLI::App* verify = app.add_subcommand("verify", "check a claimed equilibrium");
    verify->add_option("path", path, "instance file")->required();
    verify->add_option("--prices", prices_text, "comma-separated per-item prices")->required();
    CLI::Option* alloc_opt = verify->add_option("--alloc", alloc_text, "bidder:item+item,...");
    CLI::Option* frac_opt = verify->add_option("--frac", frac_text, "bidder:items=weight,...");

    CLI::App* brute = app.add_subcommand("brute", "enumerate all grid equilibria");
    brute->add_option("path", path, "instance file")->required();
    brute->add_option("--step", step_text, "price grid step; must divide the cap")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (validate->parsed()) return cmd_validate(path);
    if (demand->parsed()) return cmd_demand(path, prices_text);
    if (solve->parsed()) return cmd_solve(path, grid, refine, eps_text, mode, out_path);
    if (configlp->parsed()) return cmd_configlp(path, prices_text, dual, solve_flag);
    if (reduce->parsed()) return cmd_reduce(path);
    if (verify->parsed())
        return cmd_verify(path, prices_text, alloc_text, alloc_opt->count() > 0, frac_text,
                          frac_opt->count() > 0);
    if (brute->parsed()) return cmd_brute(path, step_text);
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
