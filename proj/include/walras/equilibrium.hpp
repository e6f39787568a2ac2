#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "walras/config_lp.hpp"

namespace walras {

/// One failed equilibrium condition. condition is one of "feasibility",
/// "satisfaction", "clearance", "distribution"; subject names the bidder
/// or item at fault.
struct VerdictViolation {
    std::string condition;
    std::string subject;
    std::string detail;
};

struct Verdict {
    bool ok = true;
    std::vector<VerdictViolation> violations;
};

/// Equilibrium check for one bundle per bidder: bundles are item-disjoint,
/// every bidder's bundle attains their maximum utility at these prices,
/// and every positively priced item is sold.
Verdict verify_we(const AuctionInstance& inst, const PriceVector& prices,
                  const IntegralAllocation& alloc);

/// Equilibrium check for distribution weights: each bidder's weights are
/// nonnegative and sum to exactly 1, every supported bundle attains the
/// bidder's maximum utility, per-item mass is at most 1, and positively
/// priced items have mass exactly 1.
Verdict verify_fractional_we(const AuctionInstance& inst, const PriceVector& prices,
                             const FractionalAllocation& frac);

struct SolveOptions {
    int grid_k = 0;        // points per axis; 0 picks a default by item count
    int refinements = 2;   // local subdivision rounds around the best cells
    Rational eps = 0;      // reporting bound for near-misses; never a claim
    bool tatonnement = false;  // extra rounds of the dual-reprice iteration
};

enum class SolveStatus {
    we_found,
    no_we_conclusive,
    no_we_at_visited_prices,
    frac_only,
    not_found,
};

std::string to_string(SolveStatus s);

struct SolveOutcome {
    SolveStatus status = SolveStatus::not_found;
    PriceVector prices;
    std::optional<FractionalAllocation> frac;
    std::optional<IntegralAllocation> integral;
    Rational gap = 0;  // duality gap at `prices`
    long long visited = 0;
    std::string conclusiveness_reason;
};

/// Everything the zero-gap price search saw: all exactly-zero prices in
/// lexicographic order, the best price (smallest gap, ties to the
/// lexicographically smallest vector) and the number of distinct price
/// vectors whose gap was evaluated.
struct GapSearchResult {
    std::vector<PriceVector> zeros;
    PriceVector best_prices;
    Rational best_gap = 0;
    long long visited = 0;
};

/// Drives the duality gap to zero over [0, price_cap]^m: dual-optimum
/// seeding, a uniform grid, local refinement, exact single-axis descent
/// (gap restricted to a line is concave between utility breakpoints, so
/// line zeros can only sit on the breakpoints themselves), and a final
/// structure-pinning feasibility solve around the best near-miss.
GapSearchResult search_zero_gap(const AuctionInstance& inst, const SolveOptions& options = {});

/// Fractional-equilibrium search. On success returns frac_only with the
/// lexicographically smallest zero-gap price and a verified allocation
/// read off the assignment LP optimum; otherwise not_found with the best
/// gap seen.
SolveOutcome solve_fractional_we(const AuctionInstance& inst, const SolveOptions& options = {});

/// Integral-equilibrium search: tries the exhaustive integral optimum at
/// every zero-gap price the fractional search retained. A zero-gap price
/// whose assignment LP admits an optimal integral point is an equilibrium
/// (and conversely every equilibrium arises this way), so for quasilinear
/// bidders, whose LP ignores prices, a single zero-gap failure decides
/// non-existence conclusively.
SolveOutcome solve_we(const AuctionInstance& inst, const SolveOptions& options = {});

/// Ground-truth oracle: checks every grid price vector against every
/// item-to-bidder assignment and returns all pairs that verify. grid_step
/// must divide price_cap; the total enumeration is capped at 10^7 pairs.
std::vector<std::pair<PriceVector, IntegralAllocation>> brute_force_we(
    const AuctionInstance& inst, const Rational& grid_step);

}  // namespace walras
