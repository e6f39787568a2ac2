#pragma once

#include <optional>
#include <vector>

#include "walras/demand.hpp"
#include "walras/instance.hpp"
#include "walras/lp.hpp"

namespace walras {

/// Price-adjusted bundle value: the value a quasilinear proxy would need
/// so that its surplus at these prices matches the bidder's true utility,
/// u_i(S, price(S)) + price(S). For quasilinear bidders the payment
/// cancels and this is just v_i(S); for the empty bundle it is u_i({},0).
Rational equivalent_ql_value(const AuctionInstance& inst, int bidder, const Bundle& bundle,
                             const PriceVector& pstar);

/// Assignment LP over (bidder, bundle) columns built at a price vector.
/// Rows: one per bidder (total weight at most 1), then one per item
/// (total mass at most 1). Columns are bidder-major over the canonical
/// bundle order, empty bundle included; the objective coefficient of
/// column (i, S) is equivalent_ql_value(i, S, at_prices).
struct InducedLp {
    PriceVector at_prices;
    LinearProgram lp;
};

InducedLp build_induced_lp(const AuctionInstance& inst, const PriceVector& pstar);

/// Covering dual of the induced LP: minimize sum(u) + sum(p) subject to
/// u_i + sum_{j in S} p_j >= equivalent value of (i, S) for every pair,
/// all variables nonnegative. Columns: bidder utilities then item prices.
LinearProgram build_dual_lp(const AuctionInstance& inst, const PriceVector& pstar);

/// Certificate that (max utilities, prices) is a feasible dual point.
/// gap = sum(max_utilities) + sum(prices) - lp_optimum, always >= 0; it
/// is 0 exactly when the prices support a fractional equilibrium.
struct GapCertificate {
    PriceVector prices;
    std::vector<Rational> max_utilities;
    Rational lp_optimum;
    Rational gap;
};

GapCertificate duality_gap(const AuctionInstance& inst, const PriceVector& prices);

/// duality_gap plus the optimal primal point it was scored against, for
/// callers that turn LP optima into allocations.
struct GapEvaluation {
    GapCertificate cert;
    LpSolution lp_solution;
};

GapEvaluation evaluate_gap(const AuctionInstance& inst, const PriceVector& prices);

/// Reads a primal point of the induced LP into per-bidder weights and
/// tops each bidder up to total weight 1 on the empty bundle.
FractionalAllocation lp_fractional_allocation(const AuctionInstance& inst, const LpSolution& sol);

/// Best integral point of the induced LP, by exhaustive enumeration of
/// all (n+1)^m item assignments. The allocation is present only when the
/// best integral value ties the LP optimum exactly; ties between
/// assignments go to the earliest in counter order (item 0 least
/// significant digit, 0 = unsold, i+1 = bidder i).
struct IntegralOptimum {
    std::optional<IntegralAllocation> allocation;
    Rational best_integral_value;
    Rational lp_optimum;
};

IntegralOptimum integral_optimum(const AuctionInstance& inst, const PriceVector& prices);

}  // namespace walras
