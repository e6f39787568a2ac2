#pragma once

// Hand-built copies of the shipped fixture instances, so unit suites can
// exercise the library without touching the filesystem. test_io checks
// that parsing the fixture files yields exactly these objects.

#include <string>
#include <utility>
#include <vector>

#include "walras/instance.hpp"

namespace walras::testfx {

inline AuctionInstance ql_ud() {
    AuctionInstance inst;
    inst.items = {"a", "b"};
    inst.bidders.push_back({"1", UnitDemandUtility{{2, 1}}});
    inst.bidders.push_back({"2", UnitDemandUtility{{1, 2}}});
    inst.price_cap = 4;
    return inst;
}

inline AuctionInstance ql_nowe() {
    AuctionInstance inst;
    inst.items = {"a", "b"};
    inst.bidders.push_back({"1", QuasilinearUtility{{0, 0, 0, 3}}});
    inst.bidders.push_back({"2", QuasilinearUtility{{0, 2, 2, 2}}});
    inst.price_cap = 4;
    return inst;
}

inline AuctionInstance nql_2() {
    AuctionInstance inst;
    inst.items = {"a", "b"};
    inst.price_cap = 5;
    // one bidder: values 0/4/4/8, shared money disutility with slope 1 on
    // [0,4] and slope 3 on [4,10]
    TabulatedPwlUtility u;
    const Rational values[4] = {0, 4, 4, 8};
    for (std::uint64_t s = 0; s < 4; ++s) {
        PwlCurve curve;
        curve.points = {{0, values[s]}, {4, values[s] - 4}, {10, values[s] - 22}};
        u.curves[s] = std::move(curve);
    }
    inst.bidders.push_back({"1", std::move(u)});
    return inst;
}

/// One item "g", one quasilinear bidder valuing it at `value`.
inline AuctionInstance single_item(long value = 5, long cap = 6) {
    AuctionInstance inst;
    inst.items = {"g"};
    inst.bidders.push_back({"1", QuasilinearUtility{{0, Rational(value)}}});
    inst.price_cap = cap;
    return inst;
}

inline PriceVector at(std::vector<Rational> prices) { return {std::move(prices)}; }

}  // namespace walras::testfx
