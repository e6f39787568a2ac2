#pragma once

#include <utility>
#include <vector>

#include "walras/equilibrium.hpp"
#include "walras/instance.hpp"

namespace walras {

/// Exchange economy wrapping an auction: one indivisible commodity per
/// item plus a divisible money commodity (always last). Buyers keep their
/// auction utilities, read at payment Z/n minus held money; the seller
/// cares only about money. Buyers start with money Z/n and no items; the
/// seller starts with every item and no money. Z is sized so that every
/// bundle at in-cap prices stays strictly inside every buyer's budget.
struct AdMarket {
    AuctionInstance instance;
    int commodity_count = 0;  // item count + 1
    int agent_count = 0;      // bidder count + 1, seller last
    Rational z;
    std::vector<std::vector<Rational>> endowments;  // per agent, commodity-indexed

    bool is_seller(int agent) const { return agent == agent_count - 1; }

    /// Buyer: auction utility at payment Z/n - money. Seller: money.
    Rational agent_utility(int agent, const Bundle& items, const Rational& money) const;
};

AdMarket reduce(const AuctionInstance& inst);

/// One agent's holdings: an integral set of items and nonnegative money.
struct AdAllocation {
    Bundle items;
    Rational money;
    bool operator==(const AdAllocation&) const = default;
};

/// Utility maximizers over the agent's budget set at these commodity
/// prices, canonical bundle order. The money price must be positive
/// (money demand is insatiable at price zero); beyond that, buyers take
/// the full budget residual as money, and the seller, indifferent over
/// zero-priced items, is canonicalized to hold none.
std::vector<AdAllocation> ad_demand_set(const AdMarket& market, int agent,
                                        const std::vector<Rational>& ptilde);

/// Market-equilibrium check: every agent's holding maximizes their
/// utility in their budget set (the seller may additionally hold any
/// zero-priced items), and every positively priced commodity clears
/// exactly against total endowment.
Verdict verify_gme(const AdMarket& market, const std::vector<Rational>& ptilde,
                   const std::vector<AdAllocation>& allocs);

struct GmeImage {
    AdMarket market;
    std::vector<Rational> ptilde;
    std::vector<AdAllocation> allocs;
};

/// Auction equilibrium to market equilibrium: money is the numeraire,
/// item prices carry over, each buyer pays their bundle price out of the
/// money endowment, and the seller collects all trade money. Throws
/// std::invalid_argument unless (prices, alloc) verifies as an
/// equilibrium; the image is asserted to verify as a GME.
GmeImage we_to_gme(const AuctionInstance& inst, const PriceVector& prices,
                   const IntegralAllocation& alloc);

/// Market equilibrium back to auction equilibrium: prices renormalized by
/// the money price, buyer item parts copied. Throws std::invalid_argument
/// if the money price is zero or the input fails verify_gme; the result
/// is asserted to verify. Composing with we_to_gme is the identity.
std::pair<PriceVector, IntegralAllocation> gme_to_we(const AdMarket& market,
                                                     const std::vector<Rational>& ptilde,
                                                     const std::vector<AdAllocation>& allocs);

/// Candidate fixed point of the market correspondence: prices and an
/// aggregate demand vector, both commodity-indexed.
struct FixedPointCandidate {
    std::vector<Rational> ptilde;
    std::vector<Rational> d;
};

struct FixedPointReport {
    bool is_fixed = false;
    bool f_ok = false;
    bool d_ok = false;
};

/// f_ok: the prices maximize revenue on excess demand, which pins demand
/// at or under supply (1,...,1,Z) with zero price on slack commodities.
/// d_ok: the aggregate vector is a convex combination of per-agent demand
/// choices, decided by an exact feasibility solve. Fixed point: both.
FixedPointReport check_fixed_point(const AuctionInstance& inst, const FixedPointCandidate& cand);

}  // namespace walras
