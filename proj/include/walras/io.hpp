#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "walras/arrow_debreu.hpp"
#include "walras/demand.hpp"
#include "walras/equilibrium.hpp"
#include "walras/instance.hpp"
#include "walras/lp.hpp"

namespace walras {

inline constexpr const char* tool_version = "walras 0.1.0";

/// Malformed documents and malformed CLI arguments raise this; the
/// message is meant for the terminal.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Instance documents are JSON: items, price_cap, bidders with a utility
/// object of kind quasilinear | unit_demand | tabulated_pwl. Rationals
/// are strings like "3" or "-5/2"; bundles are rendered as the compact
/// JSON array of their sorted item names (the empty bundle "[]", with
/// "empty" accepted as an alias on input). Unknown keys are rejected.
AuctionInstance parse_instance(const std::string& text);

/// Canonical serialization: fixed key order, every bundle listed, all
/// rationals as strings. parse_instance inverts it exactly.
std::string print_instance(const AuctionInstance& inst);

/// FNV-1a 64 over the canonical serialization, rendered "fnv1a64:<hex>".
/// Stable across platforms and reruns.
std::string instance_digest(const AuctionInstance& inst);

/// Report documents: exact rational strings, stable key order, a tool
/// version and the instance digest; never floating point.
std::string report_solve(const AuctionInstance& inst, const SolveOutcome& outcome);
std::string report_verdict(const AuctionInstance& inst, const Verdict& verdict);
std::string report_demand(const AuctionInstance& inst, const PriceVector& prices,
                          const std::vector<DemandSet>& demands);
std::string report_brute(const AuctionInstance& inst, const Rational& step,
                         const std::vector<std::pair<PriceVector, IntegralAllocation>>& found);
std::string report_market(const AuctionInstance& inst, const AdMarket& market);
std::string report_validation(const AuctionInstance& inst, const ValidationReport& report);

/// Textual LP dump: objective line, then one "label: term + term REL rhs"
/// line per row, exact coefficients.
std::string dump_lp(const LinearProgram& lp);
std::string dump_lp_solution(const LinearProgram& lp, const LpSolution& sol);

/// "1,1/2" -> per-item prices. Requires one value per item, each within
/// [0, price_cap].
PriceVector parse_prices_arg(const AuctionInstance& inst, const std::string& text);

/// "1:a+b,2:b" -> one bundle per named bidder; unmentioned bidders get
/// the empty bundle; "1:" names an explicitly empty bundle.
IntegralAllocation parse_alloc_arg(const AuctionInstance& inst, const std::string& text);

/// "1:a+b=1/2,1:=1/2" -> weights per (bidder, bundle); repeated keys
/// accumulate.
FractionalAllocation parse_frac_arg(const AuctionInstance& inst, const std::string& text);

}  // namespace walras
