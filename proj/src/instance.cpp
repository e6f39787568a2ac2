#include "walras/instance.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace walras {

std::string bundle_text(const Bundle& b, const std::vector<std::string>& items) {
    std::string out = "{";
    bool first = true;
    for (int j : b.items()) {
        if (!first) out += ",";
        out += items[static_cast<std::size_t>(j)];
        first = false;
    }
    out += "}";
    return out;
}

namespace {

Rational unit_demand_value(const UnitDemandUtility& u, const Bundle& bundle) {
    Rational best = 0;
    for (int j : bundle.items()) {
        const Rational& v = u.item_values[static_cast<std::size_t>(j)];
        if (v > best) best = v;
    }
    return best;
}

Rational evaluate_impl(const AuctionInstance& inst, int bidder, const Bundle& bundle,
                       const Rational& payment, bool horizon_checked) {
    if (bidder < 0 || bidder >= inst.bidder_count()) {
        throw std::out_of_range("evaluate_utility: bidder index");
    }
    if (bundle.item_count() != inst.item_count()) {
        throw std::invalid_argument("evaluate_utility: bundle from a different item universe");
    }
    if (payment < 0) throw std::domain_error("evaluate_utility: negative payment");
    if (horizon_checked && payment > inst.payment_horizon()) {
        throw std::domain_error("evaluate_utility: payment outside validated horizon");
    }
    const UtilityFunction& u = inst.bidders[static_cast<std::size_t>(bidder)].utility;
    if (const auto* ql = std::get_if<QuasilinearUtility>(&u)) {
        return ql->bundle_values.at(bundle.key()) - payment;
    }
    if (const auto* ud = std::get_if<UnitDemandUtility>(&u)) {
        return unit_demand_value(*ud, bundle) - payment;
    }
    const auto& pwl = std::get<TabulatedPwlUtility>(u);
    auto it = pwl.curves.find(bundle.key());
    if (it == pwl.curves.end()) throw std::logic_error("evaluate_utility: instance not validated (missing curve)");
    return it->second.evaluate(payment);
}

}  // namespace

bool is_quasilinear_kind(const UtilityFunction& u) {
    return !std::holds_alternative<TabulatedPwlUtility>(u);
}

bool is_quasilinear_instance(const AuctionInstance& inst) {
    return std::all_of(inst.bidders.begin(), inst.bidders.end(),
                       [](const Bidder& b) { return is_quasilinear_kind(b.utility); });
}

std::optional<int> AuctionInstance::item_index(const std::string& name) const {
    for (std::size_t j = 0; j < items.size(); ++j) {
        if (items[j] == name) return static_cast<int>(j);
    }
    return std::nullopt;
}

std::optional<int> AuctionInstance::bidder_index(const std::string& name) const {
    for (std::size_t i = 0; i < bidders.size(); ++i) {
        if (bidders[i].name == name) return static_cast<int>(i);
    }
    return std::nullopt;
}

ValidationReport validate_instance(const AuctionInstance& inst) {
    ValidationReport report;
    auto flag = [&](std::string where, std::string detail) {
        report.ok = false;
        report.violations.push_back({std::move(where), std::move(detail)});
    };

    if (inst.items.empty()) flag("instance", "no items");
    if (inst.items.size() > 20) flag("instance", "item count above desk scale");
    if (inst.bidders.empty()) flag("instance", "no bidders");
    {
        std::set<std::string> seen;
        for (const auto& it : inst.items) {
            if (it.empty()) flag("instance", "empty item name");
            if (!seen.insert(it).second) flag("instance", "duplicate item name '" + it + "'");
        }
    }
    {
        std::set<std::string> seen;
        for (const auto& b : inst.bidders) {
            if (b.name.empty()) flag("instance", "empty bidder name");
            if (!seen.insert(b.name).second) flag("instance", "duplicate bidder name '" + b.name + "'");
        }
    }
    if (inst.price_cap <= 0) flag("instance", "price_cap must be positive");
    if (!report.ok) return report;  // structure too broken for per-bidder checks

    const int m = inst.item_count();
    const auto bundles = enumerate_bundles(m);
    const Rational horizon = inst.payment_horizon();

    for (const auto& bidder : inst.bidders) {
        const std::string who = "bidder '" + bidder.name + "'";
        if (const auto* ql = std::get_if<QuasilinearUtility>(&bidder.utility)) {
            if (ql->bundle_values.size() != bundles.size()) {
                flag(who, "bundle value table has wrong size");
                continue;
            }
            if (ql->bundle_values[0] != 0) flag(who, "value of the empty bundle must be 0");
            for (const auto& b : bundles) {
                const Rational& v = ql->bundle_values[b.key()];
                if (v < 0) flag(who + " bundle " + bundle_text(b, inst.items), "negative bundle value");
                for (int j = 0; j < m; ++j) {
                    if (b.contains(j)) continue;
                    const Rational& w = ql->bundle_values[b.with(j).key()];
                    if (w < v) {
                        flag(who, "bundle values not monotone under inclusion: v" +
                                      bundle_text(b, inst.items) + " > v" +
                                      bundle_text(b.with(j), inst.items));
                    }
                }
            }
        } else if (const auto* ud = std::get_if<UnitDemandUtility>(&bidder.utility)) {
            if (ud->item_values.size() != static_cast<std::size_t>(m)) {
                flag(who, "item value table has wrong size");
                continue;
            }
            for (int j = 0; j < m; ++j) {
                if (ud->item_values[static_cast<std::size_t>(j)] < 0) {
                    flag(who + " item '" + inst.items[static_cast<std::size_t>(j)] + "'",
                         "negative item value");
                }
            }
        } else {
            const auto& pwl = std::get<TabulatedPwlUtility>(bidder.utility);
            bool complete = true;
            for (const auto& b : bundles) {
                auto it = pwl.curves.find(b.key());
                if (it == pwl.curves.end()) {
                    flag(who, "missing curve for bundle " + bundle_text(b, inst.items));
                    complete = false;
                    continue;
                }
                const std::string where = who + " curve " + bundle_text(b, inst.items);
                auto shape = it->second.shape_violations();
                for (auto& s : shape) flag(where, s);
                if (!shape.empty()) {
                    complete = false;
                    continue;
                }
                if (it->second.last_payment() < horizon) {
                    flag(where, "curve ends before the payment horizon");
                    complete = false;
                }
            }
            if (!complete) continue;
            if (pwl.curves.at(0).evaluate(0) < 0) {
                flag(who, "utility of the empty bundle at payment 0 is negative");
            }
            // Dominance along covering pairs; piecewise linearity makes the
            // breakpoint union (clamped to the horizon) a sufficient probe set.
            for (const auto& b : bundles) {
                for (int j = 0; j < m; ++j) {
                    if (b.contains(j)) continue;
                    const Bundle bigger = b.with(j);
                    const PwlCurve& lo = pwl.curves.at(b.key());
                    const PwlCurve& hi = pwl.curves.at(bigger.key());
                    std::set<Rational> probes;
                    probes.insert(horizon);
                    for (const auto& [c, v] : lo.points) {
                        if (c <= horizon) probes.insert(c);
                    }
                    for (const auto& [c, v] : hi.points) {
                        if (c <= horizon) probes.insert(c);
                    }
                    for (const auto& c : probes) {
                        if (hi.evaluate(c) < lo.evaluate(c)) {
                            flag(who, "curves not monotone under inclusion: " +
                                          bundle_text(bigger, inst.items) + " below " +
                                          bundle_text(b, inst.items) + " at payment " +
                                          to_string(c));
                            break;
                        }
                    }
                }
            }
        }
    }
    return report;
}

Rational bundle_price(const Bundle& bundle, const PriceVector& prices) {
    if (bundle.item_count() != static_cast<int>(prices.prices.size())) {
        throw std::invalid_argument("bundle_price: dimension mismatch");
    }
    Rational total = 0;
    for (int j : bundle.items()) total += prices.prices[static_cast<std::size_t>(j)];
    return total;
}

Rational evaluate_utility(const AuctionInstance& inst, int bidder, const Bundle& bundle,
                          const Rational& payment) {
    return evaluate_impl(inst, bidder, bundle, payment, true);
}

namespace detail {

Rational evaluate_utility_extended(const AuctionInstance& inst, int bidder, const Bundle& bundle,
                                   const Rational& payment) {
    return evaluate_impl(inst, bidder, bundle, payment, false);
}

}  // namespace detail

}  // namespace walras
