#include "walras/demand.hpp"

#include <stdexcept>

namespace walras {

DemandSet demand_set(const AuctionInstance& inst, int bidder, const PriceVector& prices) {
    if (static_cast<int>(prices.prices.size()) != inst.item_count()) {
        throw std::invalid_argument("demand_set: price dimension mismatch");
    }
    DemandSet out;
    out.bidder = bidder;
    out.prices = prices;
    bool first = true;
    for (const Bundle& b : enumerate_bundles(inst.item_count())) {
        Rational u = evaluate_utility(inst, bidder, b, bundle_price(b, prices));
        if (first || u > out.max_utility) {
            out.max_utility = u;
            out.bundles.clear();
            out.bundles.push_back(b);
            first = false;
        } else if (u == out.max_utility) {
            out.bundles.push_back(b);
        }
    }
    return out;
}

Rational max_utility(const AuctionInstance& inst, int bidder, const PriceVector& prices) {
    return demand_set(inst, bidder, prices).max_utility;
}

}  // namespace walras
