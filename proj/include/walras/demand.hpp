#pragma once

#include <vector>

#include "walras/instance.hpp"

namespace walras {

/// All utility-maximizing bundles of one bidder at given prices, in
/// canonical bundle order, together with the attained maximum. The empty
/// bundle always competes (at payment 0), so the set is never empty and
/// max_utility >= u(empty, 0).
struct DemandSet {
    int bidder = 0;
    PriceVector prices;
    std::vector<Bundle> bundles;
    Rational max_utility;
};

/// Full enumeration over the 2^m bundles with exact comparisons.
/// Preconditions: validated instance, prices within [0, cap].
DemandSet demand_set(const AuctionInstance& inst, int bidder, const PriceVector& prices);

/// The maximum alone, same enumeration.
Rational max_utility(const AuctionInstance& inst, int bidder, const PriceVector& prices);

}  // namespace walras
