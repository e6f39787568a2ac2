#pragma once

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include "walras/pwl.hpp"
#include "walras/rational.hpp"

namespace walras {

/// u(S, c) = value(S) - c. Values are dense over the 2^m canonical bundle
/// order; validation requires value(empty) = 0, all values >= 0 and
/// monotonicity under bundle inclusion.
struct QuasilinearUtility {
    std::vector<Rational> bundle_values;
    bool operator==(const QuasilinearUtility&) const = default;
};

/// u(S, c) = max over items in S of item_values - c, with the empty max 0.
struct UnitDemandUtility {
    std::vector<Rational> item_values;
    bool operator==(const UnitDemandUtility&) const = default;
};

/// One payment curve per bundle, keyed by bundle bits. Validation requires
/// a curve for every bundle, each reaching the instance payment horizon,
/// and pointwise dominance along bundle inclusion.
struct TabulatedPwlUtility {
    std::map<std::uint64_t, PwlCurve> curves;
    bool operator==(const TabulatedPwlUtility&) const = default;
};

using UtilityFunction = std::variant<QuasilinearUtility, UnitDemandUtility, TabulatedPwlUtility>;

/// True for the kinds whose utility is value(S) - payment. For these the
/// induced configuration LP does not depend on the price vector, which
/// upgrades a failed integral search at one zero-gap price into a global
/// non-existence verdict.
bool is_quasilinear_kind(const UtilityFunction& u);

}  // namespace walras
