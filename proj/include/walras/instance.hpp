#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "walras/bundle.hpp"
#include "walras/rational.hpp"
#include "walras/utility.hpp"

namespace walras {

struct Bidder {
    std::string name;
    UtilityFunction utility;
    bool operator==(const Bidder&) const = default;
};

/// A combinatorial auction at desk scale: named items, bidders with one
/// utility function each, and the price box [0, price_cap] per item.
struct AuctionInstance {
    std::vector<std::string> items;
    std::vector<Bidder> bidders;
    Rational price_cap;

    int item_count() const { return static_cast<int>(items.size()); }
    int bidder_count() const { return static_cast<int>(bidders.size()); }
    /// Largest payment any bundle can incur inside the price box.
    Rational payment_horizon() const { return Rational(item_count()) * price_cap; }
    std::optional<int> item_index(const std::string& name) const;
    std::optional<int> bidder_index(const std::string& name) const;

    bool operator==(const AuctionInstance&) const = default;
};

/// True when every bidder's utility is quasilinear-kind.
bool is_quasilinear_instance(const AuctionInstance& inst);

struct Violation {
    std::string where;
    std::string detail;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

/// Checks every structural invariant: unique names, nonempty item/bidder
/// lists, positive cap, per-kind value conditions, curve shapes, horizon
/// coverage and bundle-inclusion dominance. All downstream operations
/// assume a validated instance.
ValidationReport validate_instance(const AuctionInstance& inst);

/// Per-item prices, index-aligned with instance items.
struct PriceVector {
    std::vector<Rational> prices;
    bool operator==(const PriceVector&) const = default;
    auto operator<=>(const PriceVector&) const = default;
};

/// Sum of prices over the bundle's items. Dimension mismatch throws.
Rational bundle_price(const Bundle& bundle, const PriceVector& prices);

/// Braced item-name list, e.g. "{a,b}" or "{}".
std::string bundle_text(const Bundle& b, const std::vector<std::string>& items);

/// Exact utility of a bidder for (bundle, payment). The payment must lie
/// in [0, m * price_cap]; outside that validated horizon std::domain_error
/// is thrown.
Rational evaluate_utility(const AuctionInstance& inst, int bidder, const Bundle& bundle,
                          const Rational& payment);

namespace detail {
/// evaluate_utility without the horizon cap. Quasilinear kinds extend in
/// closed form to any nonnegative payment; PWL curves still throw beyond
/// their last breakpoint. Used by the exchange-economy reduction, where
/// budgets can exceed the auction's price box.
Rational evaluate_utility_extended(const AuctionInstance& inst, int bidder, const Bundle& bundle,
                                   const Rational& payment);
}  // namespace detail

/// One bundle per bidder (possibly empty), index-aligned with bidders.
struct IntegralAllocation {
    std::vector<Bundle> assignment;
    bool operator==(const IntegralAllocation&) const = default;
};

/// Sparse distribution weights keyed by (bidder index, bundle bits).
struct FractionalAllocation {
    std::map<std::pair<int, std::uint64_t>, Rational> weights;
    bool operator==(const FractionalAllocation&) const = default;
};

}  // namespace walras
