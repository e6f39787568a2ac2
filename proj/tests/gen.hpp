#pragma once

// Seeded random-instance generators shared by the acceptance gate and the
// unit suites. Everything draws through pick() so a fixed seed pins the
// whole instance stream.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "walras/instance.hpp"

namespace walras::testgen {

using Rng = std::mt19937_64;

inline long pick(Rng& rng, long n) { return long(rng() % (unsigned long long)n); }

inline std::vector<std::string> item_names(int m) {
    std::vector<std::string> names;
    for (int j = 0; j < m; ++j) names.push_back(std::string(1, char('a' + j)));
    return names;
}

/// Random monotone bundle values: each bundle gets the best one-smaller
/// value plus a step in [0, step_max].
inline std::vector<Rational> monotone_values(Rng& rng, int m, long step_max) {
    std::vector<Rational> v(std::size_t(1) << m, Rational(0));
    for (std::uint64_t s = 1; s < (std::uint64_t(1) << m); ++s) {
        Rational base = 0;
        for (int j = 0; j < m; ++j)
            if (s & (std::uint64_t(1) << j)) base = std::max(base, v[s & ~(std::uint64_t(1) << j)]);
        v[s] = base + pick(rng, step_max + 1);
    }
    return v;
}

inline Rational max_value(const AuctionInstance& inst) {
    Rational vmax = 0;
    for (const Bidder& bidder : inst.bidders) {
        if (const auto* ql = std::get_if<QuasilinearUtility>(&bidder.utility)) {
            for (const auto& q : ql->bundle_values) vmax = std::max(vmax, q);
        } else if (const auto* ud = std::get_if<UnitDemandUtility>(&bidder.utility)) {
            for (const auto& q : ud->item_values) vmax = std::max(vmax, q);
        } else {
            for (const auto& [bits, curve] : std::get<TabulatedPwlUtility>(bidder.utility).curves)
                vmax = std::max(vmax, curve.points.front().second);
        }
    }
    return vmax;
}

inline AuctionInstance gen_ql(Rng& rng, int m, int n) {
    AuctionInstance inst;
    inst.items = item_names(m);
    for (int i = 0; i < n; ++i)
        inst.bidders.push_back({std::to_string(i + 1), QuasilinearUtility{monotone_values(rng, m, 3)}});
    inst.price_cap = max_value(inst) + 1;
    return inst;
}

inline AuctionInstance gen_ud(Rng& rng, int m, int n, long vmax) {
    AuctionInstance inst;
    inst.items = item_names(m);
    for (int i = 0; i < n; ++i) {
        UnitDemandUtility u;
        for (int j = 0; j < m; ++j) u.item_values.push_back(pick(rng, vmax + 1));
        inst.bidders.push_back({std::to_string(i + 1), u});
    }
    inst.price_cap = max_value(inst) + 1;
    return inst;
}

/// Non-quasilinear bidders: monotone bundle values minus a shared convex-
/// free piecewise money disutility with random integer slopes.
inline AuctionInstance gen_pwl(Rng& rng, int m, int n) {
    AuctionInstance inst;
    inst.items = item_names(m);
    std::vector<std::vector<Rational>> values;
    Rational vmax = 0;
    for (int i = 0; i < n; ++i) {
        values.push_back(monotone_values(rng, m, 3));
        for (const auto& q : values.back()) vmax = std::max(vmax, q);
    }
    inst.price_cap = vmax + 1;
    const Rational horizon = Rational(m) * inst.price_cap;
    for (int i = 0; i < n; ++i) {
        const int segments = 1 + int(pick(rng, 3));
        std::vector<Rational> cuts{0}, disutil{0};
        for (int k = 1; k <= segments; ++k) {
            cuts.push_back(horizon * k / segments);
            disutil.push_back(disutil.back() + (1 + pick(rng, 3)) * (cuts[k] - cuts[k - 1]));
        }
        TabulatedPwlUtility u;
        for (std::uint64_t s = 0; s < (std::uint64_t(1) << m); ++s) {
            PwlCurve curve;
            for (int k = 0; k <= segments; ++k)
                curve.points.emplace_back(cuts[k], values[i][s] - disutil[k]);
            u.curves[s] = curve;
        }
        inst.bidders.push_back({std::to_string(i + 1), u});
    }
    return inst;
}

inline AuctionInstance gen_any(Rng& rng, int kind, int m, int n) {
    switch (kind) {
        case 0: return gen_ql(rng, m, n);
        case 1: return gen_ud(rng, m, n, 8);
        default: return gen_pwl(rng, m, n);
    }
}

inline PriceVector quarter_grid_price(Rng& rng, const AuctionInstance& inst) {
    const long cap4 = long(Rational(4 * inst.price_cap).get_num().get_si());
    PriceVector p;
    for (int j = 0; j < inst.item_count(); ++j)
        p.prices.push_back(Rational(pick(rng, cap4 + 1)) / 4);
    return p;
}

}  // namespace walras::testgen
