#include "walras/config_lp.hpp"

#include <stdexcept>

namespace walras {

Rational equivalent_ql_value(const AuctionInstance& inst, int bidder, const Bundle& bundle,
                             const PriceVector& pstar) {
    const Rational paid = bundle_price(bundle, pstar);
    return detail::evaluate_utility_extended(inst, bidder, bundle, paid) + paid;
}

InducedLp build_induced_lp(const AuctionInstance& inst, const PriceVector& pstar) {
    const int n = inst.bidder_count();
    const int m = inst.item_count();
    const auto bundles = enumerate_bundles(m);
    const int per_bidder = static_cast<int>(bundles.size());

    InducedLp out;
    out.at_prices = pstar;
    LinearProgram& lp = out.lp;
    lp.sense = Sense::maximize;
    lp.objective.reserve(static_cast<std::size_t>(n * per_bidder));
    for (int i = 0; i < n; ++i) {
        for (const Bundle& s : bundles) {
            lp.objective.push_back(equivalent_ql_value(inst, i, s, pstar));
            lp.column_labels.push_back("x:" + inst.bidders[static_cast<std::size_t>(i)].name +
                                       ":" + bundle_text(s, inst.items));
        }
    }
    for (int i = 0; i < n; ++i) {
        LpRow row;
        row.coeffs.assign(lp.objective.size(), Rational(0));
        for (int c = 0; c < per_bidder; ++c) {
            row.coeffs[static_cast<std::size_t>(i * per_bidder + c)] = 1;
        }
        row.rel = Relation::le;
        row.rhs = 1;
        row.label = "bidder:" + inst.bidders[static_cast<std::size_t>(i)].name;
        lp.rows.push_back(std::move(row));
    }
    for (int j = 0; j < m; ++j) {
        LpRow row;
        row.coeffs.assign(lp.objective.size(), Rational(0));
        for (int i = 0; i < n; ++i) {
            for (int c = 0; c < per_bidder; ++c) {
                if (bundles[static_cast<std::size_t>(c)].contains(j)) {
                    row.coeffs[static_cast<std::size_t>(i * per_bidder + c)] = 1;
                }
            }
        }
        row.rel = Relation::le;
        row.rhs = 1;
        row.label = "item:" + inst.items[static_cast<std::size_t>(j)];
        lp.rows.push_back(std::move(row));
    }
    return out;
}

LinearProgram build_dual_lp(const AuctionInstance& inst, const PriceVector& pstar) {
    const int n = inst.bidder_count();
    const int m = inst.item_count();
    const auto bundles = enumerate_bundles(m);

    LinearProgram lp;
    lp.sense = Sense::minimize;
    lp.objective.assign(static_cast<std::size_t>(n + m), Rational(1));
    for (int i = 0; i < n; ++i) {
        lp.column_labels.push_back("u:" + inst.bidders[static_cast<std::size_t>(i)].name);
    }
    for (int j = 0; j < m; ++j) {
        lp.column_labels.push_back("p:" + inst.items[static_cast<std::size_t>(j)]);
    }
    for (int i = 0; i < n; ++i) {
        for (const Bundle& s : bundles) {
            LpRow row;
            row.coeffs.assign(static_cast<std::size_t>(n + m), Rational(0));
            row.coeffs[static_cast<std::size_t>(i)] = 1;
            for (int j : s.items()) row.coeffs[static_cast<std::size_t>(n + j)] = 1;
            row.rel = Relation::ge;
            row.rhs = equivalent_ql_value(inst, i, s, pstar);
            row.label = "cover:" + inst.bidders[static_cast<std::size_t>(i)].name + ":" +
                        bundle_text(s, inst.items);
            lp.rows.push_back(std::move(row));
        }
    }
    return lp;
}

GapEvaluation evaluate_gap(const AuctionInstance& inst, const PriceVector& prices) {
    GapEvaluation out;
    out.cert.prices = prices;
    Rational dual_value = 0;
    for (int i = 0; i < inst.bidder_count(); ++i) {
        out.cert.max_utilities.push_back(max_utility(inst, i, prices));
        dual_value += out.cert.max_utilities.back();
    }
    for (const Rational& p : prices.prices) dual_value += p;

    out.lp_solution = solve_lp(build_induced_lp(inst, prices).lp);
    if (out.lp_solution.status != LpStatus::optimal) {
        throw std::logic_error("induced assignment LP must have an optimum");
    }
    out.cert.lp_optimum = out.lp_solution.objective_value;
    out.cert.gap = dual_value - out.cert.lp_optimum;
    if (out.cert.gap < 0) {
        // (max utilities, prices) is dual-feasible, so weak duality makes
        // the gap nonnegative; a negative value means solver breakage.
        throw std::logic_error("negative duality gap");
    }
    return out;
}

GapCertificate duality_gap(const AuctionInstance& inst, const PriceVector& prices) {
    return evaluate_gap(inst, prices).cert;
}

FractionalAllocation lp_fractional_allocation(const AuctionInstance& inst, const LpSolution& sol) {
    const int n = inst.bidder_count();
    const int per_bidder = 1 << inst.item_count();
    if (sol.primal.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(per_bidder)) {
        throw std::invalid_argument("lp_fractional_allocation: point has wrong width");
    }
    FractionalAllocation frac;
    for (int i = 0; i < n; ++i) {
        Rational total = 0;
        for (int c = 0; c < per_bidder; ++c) {
            const Rational& w = sol.primal[static_cast<std::size_t>(i * per_bidder + c)];
            if (w != 0) {
                frac.weights[{i, static_cast<std::uint64_t>(c)}] += w;
                total += w;
            }
        }
        if (total != 1) frac.weights[{i, 0}] += Rational(1) - total;
        if (frac.weights.count({i, 0}) && frac.weights[{i, 0}] == 0) frac.weights.erase({i, 0});
    }
    return frac;
}

IntegralOptimum integral_optimum(const AuctionInstance& inst, const PriceVector& prices) {
    const int n = inst.bidder_count();
    const int m = inst.item_count();

    IntegralOptimum out;
    const auto eval = evaluate_gap(inst, prices);
    out.lp_optimum = eval.cert.lp_optimum;

    std::vector<int> assign(static_cast<std::size_t>(m), 0);  // 0 unsold, i+1 bidder i
    bool have_best = false;
    Rational best;
    std::vector<int> best_assign;
    for (;;) {
        std::vector<std::uint64_t> bits(static_cast<std::size_t>(n), 0);
        for (int j = 0; j < m; ++j) {
            if (assign[static_cast<std::size_t>(j)] > 0) {
                bits[static_cast<std::size_t>(assign[static_cast<std::size_t>(j)] - 1)] |=
                    std::uint64_t{1} << j;
            }
        }
        Rational value = 0;
        for (int i = 0; i < n; ++i) {
            value += equivalent_ql_value(inst, i, Bundle(bits[static_cast<std::size_t>(i)], m),
                                         prices);
        }
        if (!have_best || value > best) {
            have_best = true;
            best = value;
            best_assign = assign;
        }
        int j = 0;
        while (j < m && assign[static_cast<std::size_t>(j)] == n) {
            assign[static_cast<std::size_t>(j)] = 0;
            ++j;
        }
        if (j == m) break;
        ++assign[static_cast<std::size_t>(j)];
    }

    out.best_integral_value = best;
    if (best > out.lp_optimum) throw std::logic_error("integral point above LP optimum");
    if (best == out.lp_optimum) {
        IntegralAllocation alloc;
        std::vector<std::uint64_t> bits(static_cast<std::size_t>(n), 0);
        for (int j = 0; j < m; ++j) {
            if (best_assign[static_cast<std::size_t>(j)] > 0) {
                bits[static_cast<std::size_t>(best_assign[static_cast<std::size_t>(j)] - 1)] |=
                    std::uint64_t{1} << j;
            }
        }
        for (int i = 0; i < n; ++i) {
            alloc.assignment.emplace_back(bits[static_cast<std::size_t>(i)], m);
        }
        out.allocation = std::move(alloc);
    }
    return out;
}

}  // namespace walras
