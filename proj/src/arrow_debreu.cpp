#include "walras/arrow_debreu.hpp"

#include <stdexcept>

#include "walras/lp.hpp"

namespace walras {

Rational AdMarket::agent_utility(int agent, const Bundle& items, const Rational& money) const {
    if (agent < 0 || agent >= agent_count) throw std::out_of_range("agent index");
    if (is_seller(agent)) return money;
    const Rational payment = z / (agent_count - 1) - money;
    return detail::evaluate_utility_extended(instance, agent, items, payment);
}

AdMarket reduce(const AuctionInstance& inst) {
    const int n = inst.bidder_count();
    const int m = inst.item_count();
    AdMarket mk;
    mk.instance = inst;
    mk.commodity_count = m + 1;
    mk.agent_count = n + 1;

    // Z/n must exceed any bundle price inside the cap box, so that every
    // buyer can afford every bundle they might demand; the extra n*m*cap
    // over the classic sum-of-full-values bound buys exactly that.
    mk.z = 1;
    for (int i = 0; i < n; ++i) {
        mk.z += evaluate_utility(inst, i, Bundle::full(m), Rational(0));
    }
    mk.z += Rational(n) * Rational(m) * inst.price_cap;

    for (int i = 0; i < n; ++i) {
        std::vector<Rational> e(static_cast<std::size_t>(m + 1), Rational(0));
        e.back() = mk.z / n;
        mk.endowments.push_back(std::move(e));
    }
    std::vector<Rational> seller(static_cast<std::size_t>(m + 1), Rational(1));
    seller.back() = 0;
    mk.endowments.push_back(std::move(seller));
    return mk;
}

namespace {

void check_ptilde(const AdMarket& market, const std::vector<Rational>& ptilde) {
    if (static_cast<int>(ptilde.size()) != market.commodity_count) {
        throw std::invalid_argument("commodity price vector has wrong dimension");
    }
    for (const Rational& p : ptilde) {
        if (p < 0) throw std::invalid_argument("commodity prices must be nonnegative");
    }
}

Rational budget_of(const AdMarket& market, int agent, const std::vector<Rational>& ptilde) {
    Rational b = 0;
    for (int c = 0; c < market.commodity_count; ++c) {
        b += market.endowments[static_cast<std::size_t>(agent)][static_cast<std::size_t>(c)] *
             ptilde[static_cast<std::size_t>(c)];
    }
    return b;
}

}  // namespace

std::vector<AdAllocation> ad_demand_set(const AdMarket& market, int agent,
                                        const std::vector<Rational>& ptilde) {
    check_ptilde(market, ptilde);
    if (agent < 0 || agent >= market.agent_count) throw std::out_of_range("agent index");
    const Rational& money_price = ptilde.back();
    if (money_price == 0) {
        throw std::domain_error("zero money price leaves demand unbounded");
    }
    const int m = market.commodity_count - 1;
    const Rational budget = budget_of(market, agent, ptilde);
    if (market.is_seller(agent)) {
        return {AdAllocation{Bundle::empty(m), budget / money_price}};
    }

    std::vector<AdAllocation> best;
    Rational best_utility;
    for (const Bundle& b : enumerate_bundles(m)) {
        Rational cost = 0;
        for (int j : b.items()) cost += ptilde[static_cast<std::size_t>(j)];
        if (cost > budget) continue;
        const Rational money = (budget - cost) / money_price;
        const Rational u = market.agent_utility(agent, b, money);
        if (best.empty() || u > best_utility) {
            best.clear();
            best_utility = u;
        }
        if (u == best_utility) best.push_back(AdAllocation{b, money});
    }
    return best;
}

Verdict verify_gme(const AdMarket& market, const std::vector<Rational>& ptilde,
                   const std::vector<AdAllocation>& allocs) {
    check_ptilde(market, ptilde);
    Verdict v;
    const int m = market.commodity_count - 1;
    if (static_cast<int>(allocs.size()) != market.agent_count) {
        v.ok = false;
        v.violations.push_back({"feasibility", "allocation", "one holding per agent expected"});
        return v;
    }
    for (const AdAllocation& a : allocs) {
        if (a.items.item_count() != m) {
            v.ok = false;
            v.violations.push_back(
                {"feasibility", "allocation", "items are over a different universe"});
            return v;
        }
        if (a.money < 0) {
            v.ok = false;
            v.violations.push_back({"feasibility", "allocation", "negative money holding"});
            return v;
        }
    }
    if (ptilde.back() == 0) {
        v.ok = false;
        v.violations.push_back(
            {"satisfaction", "money", "zero money price leaves demand unbounded"});
        return v;
    }

    for (int agent = 0; agent < market.agent_count; ++agent) {
        const AdAllocation& a = allocs[static_cast<std::size_t>(agent)];
        if (market.is_seller(agent)) {
            const Rational want = budget_of(market, agent, ptilde) / ptilde.back();
            if (a.money != want) {
                v.ok = false;
                v.violations.push_back({"satisfaction", "seller",
                                        "money " + to_string(a.money) +
                                            " differs from the budget optimum " +
                                            to_string(want)});
            }
            for (int j : a.items.items()) {
                if (ptilde[static_cast<std::size_t>(j)] > 0) {
                    v.ok = false;
                    v.violations.push_back({"satisfaction", "seller",
                                            "holds positively priced item " +
                                                market.instance.items[static_cast<std::size_t>(j)]});
                }
            }
            continue;
        }
        const auto demand = ad_demand_set(market, agent, ptilde);
        bool in_demand = false;
        for (const AdAllocation& d : demand) {
            if (d == a) {
                in_demand = true;
                break;
            }
        }
        if (!in_demand) {
            v.ok = false;
            v.violations.push_back(
                {"satisfaction", market.instance.bidders[static_cast<std::size_t>(agent)].name,
                 "holding is not a budget-set utility maximizer"});
        }
    }

    for (int c = 0; c < market.commodity_count; ++c) {
        if (ptilde[static_cast<std::size_t>(c)] == 0) continue;
        Rational total = 0;
        Rational endow = 0;
        for (int agent = 0; agent < market.agent_count; ++agent) {
            endow += market.endowments[static_cast<std::size_t>(agent)][static_cast<std::size_t>(c)];
            const AdAllocation& a = allocs[static_cast<std::size_t>(agent)];
            total += c < m ? Rational(a.items.contains(c) ? 1 : 0) : a.money;
        }
        if (total != endow) {
            v.ok = false;
            const std::string name =
                c < m ? market.instance.items[static_cast<std::size_t>(c)] : std::string("money");
            v.violations.push_back({"clearance", name,
                                    "allocated " + to_string(total) + " of " + to_string(endow) +
                                        " endowed"});
        }
    }
    return v;
}

GmeImage we_to_gme(const AuctionInstance& inst, const PriceVector& prices,
                   const IntegralAllocation& alloc) {
    const Verdict we = verify_we(inst, prices, alloc);
    if (!we.ok) throw std::invalid_argument("we_to_gme needs a verified equilibrium");

    GmeImage out;
    out.market = reduce(inst);
    out.ptilde = prices.prices;
    out.ptilde.push_back(Rational(1));

    const int n = inst.bidder_count();
    Rational trade = 0;
    for (int i = 0; i < n; ++i) {
        const Bundle& b = alloc.assignment[static_cast<std::size_t>(i)];
        const Rational paid = bundle_price(b, prices);
        out.allocs.push_back(AdAllocation{b, out.market.z / n - paid});
        trade += paid;
    }
    out.allocs.push_back(AdAllocation{Bundle::empty(inst.item_count()), trade});

    const Verdict gme = verify_gme(out.market, out.ptilde, out.allocs);
    if (!gme.ok) throw std::logic_error("equilibrium image failed the market check");
    return out;
}

std::pair<PriceVector, IntegralAllocation> gme_to_we(const AdMarket& market,
                                                     const std::vector<Rational>& ptilde,
                                                     const std::vector<AdAllocation>& allocs) {
    check_ptilde(market, ptilde);
    if (ptilde.back() == 0) throw std::invalid_argument("money price must be positive");
    const Verdict gme = verify_gme(market, ptilde, allocs);
    if (!gme.ok) throw std::invalid_argument("gme_to_we needs a verified market equilibrium");

    PriceVector prices;
    for (int j = 0; j < market.commodity_count - 1; ++j) {
        prices.prices.push_back(ptilde[static_cast<std::size_t>(j)] / ptilde.back());
    }
    IntegralAllocation alloc;
    for (int i = 0; i + 1 < market.agent_count; ++i) {
        alloc.assignment.push_back(allocs[static_cast<std::size_t>(i)].items);
    }
    const Verdict we = verify_we(market.instance, prices, alloc);
    if (!we.ok) throw std::logic_error("market equilibrium image failed the auction check");
    return {std::move(prices), std::move(alloc)};
}

FixedPointReport check_fixed_point(const AuctionInstance& inst, const FixedPointCandidate& cand) {
    const AdMarket market = reduce(inst);
    const int mc = market.commodity_count;
    if (static_cast<int>(cand.ptilde.size()) != mc || static_cast<int>(cand.d.size()) != mc) {
        throw std::invalid_argument("candidate vectors must be commodity-indexed");
    }
    check_ptilde(market, cand.ptilde);
    for (const Rational& x : cand.d) {
        if (x < 0) throw std::invalid_argument("demand vector must be nonnegative");
    }
    if (cand.ptilde.back() == 0) {
        throw std::invalid_argument("money price must be positive");
    }

    FixedPointReport out;

    // Revenue maximization over excess demand has a maximizer only when
    // demand is within supply, and then exactly the prices supported on
    // fully consumed commodities are optimal.
    out.f_ok = true;
    for (int c = 0; c < mc; ++c) {
        const Rational supply = c < mc - 1 ? Rational(1) : market.z;
        if (cand.d[static_cast<std::size_t>(c)] > supply) {
            out.f_ok = false;
            break;
        }
        if (cand.ptilde[static_cast<std::size_t>(c)] *
                (supply - cand.d[static_cast<std::size_t>(c)]) !=
            0) {
            out.f_ok = false;
            break;
        }
    }

    // d_ok: d is a sum of per-agent convex mixtures over demand sets.
    std::vector<std::vector<AdAllocation>> demands;
    for (int agent = 0; agent < market.agent_count; ++agent) {
        demands.push_back(ad_demand_set(market, agent, cand.ptilde));
    }
    LinearProgram lp;
    lp.sense = Sense::minimize;
    int cols = 0;
    for (const auto& d : demands) cols += static_cast<int>(d.size());
    lp.objective.assign(static_cast<std::size_t>(cols), Rational(0));
    {
        int base = 0;
        for (const auto& d : demands) {
            LpRow row;
            row.coeffs.assign(static_cast<std::size_t>(cols), Rational(0));
            for (std::size_t k = 0; k < d.size(); ++k) {
                row.coeffs[static_cast<std::size_t>(base) + k] = 1;
            }
            row.rel = Relation::eq;
            row.rhs = 1;
            lp.rows.push_back(std::move(row));
            base += static_cast<int>(d.size());
        }
    }
    for (int c = 0; c < mc; ++c) {
        LpRow row;
        row.coeffs.assign(static_cast<std::size_t>(cols), Rational(0));
        int base = 0;
        for (const auto& d : demands) {
            for (std::size_t k = 0; k < d.size(); ++k) {
                row.coeffs[static_cast<std::size_t>(base) + k] =
                    c < mc - 1 ? Rational(d[k].items.contains(c) ? 1 : 0) : d[k].money;
            }
            base += static_cast<int>(d.size());
        }
        row.rel = Relation::eq;
        row.rhs = cand.d[static_cast<std::size_t>(c)];
        lp.rows.push_back(std::move(row));
    }
    out.d_ok = find_feasible_point(lp).point.has_value();
    out.is_fixed = out.f_ok && out.d_ok;
    return out;
}

}  // namespace walras
