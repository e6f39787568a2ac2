#include "walras/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <sstream>

namespace walras {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw IoError(where + ": " + what);
}

void expect_object(const Json& node, const std::string& where) {
    if (!node.is_object()) fail(where, "expected an object");
}

void expect_keys(const Json& obj, std::initializer_list<const char*> allowed,
                 const std::string& where) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* k : allowed)
            if (item.key() == k) known = true;
        if (!known) fail(where, "unknown key \"" + item.key() + "\"");
    }
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(where, std::string("missing key \"") + key + "\"");
    return *it;
}

Rational read_rational(const Json& node, const std::string& where) {
    if (!node.is_string()) fail(where, "expected a rational string");
    auto q = parse_rational(node.get<std::string>());
    if (!q) fail(where, "malformed rational \"" + node.get<std::string>() + "\"");
    return *q;
}

std::vector<std::string> sorted_bundle_names(const Bundle& b,
                                             const std::vector<std::string>& items) {
    std::vector<std::string> names;
    for (int j : b.items()) names.push_back(items[j]);
    std::sort(names.begin(), names.end());
    return names;
}

/// Compact JSON array of the bundle's sorted item names; doubles as the
/// object key for per-bundle maps. The empty bundle renders as "[]".
std::string bundle_key(const Bundle& b, const std::vector<std::string>& items) {
    return Json(sorted_bundle_names(b, items)).dump();
}

Json bundle_array(const Bundle& b, const std::vector<std::string>& items) {
    return Json(sorted_bundle_names(b, items));
}

Bundle read_bundle_names(const Json& node, const AuctionInstance& inst, const std::string& where) {
    if (!node.is_array()) fail(where, "expected an array of item names");
    Bundle b = Bundle::empty(inst.item_count());
    for (const auto& elem : node) {
        if (!elem.is_string()) fail(where, "expected an item name");
        auto idx = inst.item_index(elem.get<std::string>());
        if (!idx) fail(where, "unknown item \"" + elem.get<std::string>() + "\"");
        if (b.contains(*idx)) fail(where, "duplicate item \"" + elem.get<std::string>() + "\"");
        b = b.with(*idx);
    }
    return b;
}

/// Inverts bundle_key. "empty" is accepted as an alias for "[]" on input
/// only; output always uses the array rendering.
Bundle read_bundle_key(const std::string& key, const AuctionInstance& inst,
                       const std::string& where) {
    if (key == "empty") return Bundle::empty(inst.item_count());
    Json arr;
    try {
        arr = Json::parse(key);
    } catch (const Json::exception&) {
        fail(where, "bad bundle key \"" + key + "\"");
    }
    return read_bundle_names(arr, inst, where + " key \"" + key + "\"");
}

UtilityFunction read_utility(const Json& node, const AuctionInstance& inst,
                             const std::string& where) {
    expect_object(node, where);
    const Json& kind_node = require(node, "kind", where);
    if (!kind_node.is_string()) fail(where, "utility kind must be a string");
    const std::string kind = kind_node.get<std::string>();
    const int m = inst.item_count();

    if (kind == "quasilinear") {
        expect_keys(node, {"kind", "values"}, where);
        const Json& values = require(node, "values", where);
        expect_object(values, where + ".values");
        QuasilinearUtility u;
        u.bundle_values.assign(std::size_t(1) << m, Rational(0));
        for (const auto& item : values.items()) {
            Bundle b = read_bundle_key(item.key(), inst, where + ".values");
            u.bundle_values[b.key()] = read_rational(item.value(), where + ".values");
        }
        return u;
    }
    if (kind == "unit_demand") {
        expect_keys(node, {"kind", "values"}, where);
        const Json& values = require(node, "values", where);
        expect_object(values, where + ".values");
        UnitDemandUtility u;
        u.item_values.assign(m, Rational(0));
        for (const auto& item : values.items()) {
            auto idx = inst.item_index(item.key());
            if (!idx) fail(where + ".values", "unknown item \"" + item.key() + "\"");
            u.item_values[*idx] = read_rational(item.value(), where + ".values");
        }
        return u;
    }
    if (kind == "tabulated_pwl") {
        expect_keys(node, {"kind", "curves"}, where);
        const Json& curves = require(node, "curves", where);
        expect_object(curves, where + ".curves");
        TabulatedPwlUtility u;
        for (const auto& item : curves.items()) {
            Bundle b = read_bundle_key(item.key(), inst, where + ".curves");
            const std::string at = where + ".curves[" + item.key() + "]";
            if (!item.value().is_array()) fail(at, "expected an array of breakpoints");
            PwlCurve curve;
            for (const auto& pt : item.value()) {
                if (!pt.is_array() || pt.size() != 2)
                    fail(at, "each breakpoint must be a [payment, utility] pair");
                curve.points.emplace_back(read_rational(pt[0], at), read_rational(pt[1], at));
            }
            u.curves[b.key()] = std::move(curve);
        }
        return u;
    }
    fail(where, "unknown utility kind \"" + kind + "\"");
}

Json write_utility(const UtilityFunction& u, const AuctionInstance& inst) {
    Json node;
    const auto bundles = enumerate_bundles(inst.item_count());
    if (const auto* ql = std::get_if<QuasilinearUtility>(&u)) {
        node["kind"] = "quasilinear";
        Json values = Json::object();
        for (const Bundle& b : bundles)
            values[bundle_key(b, inst.items)] = to_string(ql->bundle_values[b.key()]);
        node["values"] = std::move(values);
    } else if (const auto* ud = std::get_if<UnitDemandUtility>(&u)) {
        node["kind"] = "unit_demand";
        Json values = Json::object();
        for (int j = 0; j < inst.item_count(); ++j)
            values[inst.items[j]] = to_string(ud->item_values[j]);
        node["values"] = std::move(values);
    } else {
        const auto& pwl = std::get<TabulatedPwlUtility>(u);
        node["kind"] = "tabulated_pwl";
        Json curves = Json::object();
        for (const Bundle& b : bundles) {
            auto it = pwl.curves.find(b.key());
            if (it == pwl.curves.end()) continue;
            Json pts = Json::array();
            for (const auto& [payment, value] : it->second.points)
                pts.push_back(Json::array({to_string(payment), to_string(value)}));
            curves[bundle_key(b, inst.items)] = std::move(pts);
        }
        node["curves"] = std::move(curves);
    }
    return node;
}

Json prices_node(const AuctionInstance& inst, const PriceVector& prices) {
    Json node = Json::object();
    for (int j = 0; j < inst.item_count(); ++j) node[inst.items[j]] = to_string(prices.prices[j]);
    return node;
}

Json allocation_node(const AuctionInstance& inst, const IntegralAllocation& alloc) {
    Json node = Json::object();
    for (int i = 0; i < inst.bidder_count(); ++i)
        node[inst.bidders[i].name] = bundle_array(alloc.assignment[i], inst.items);
    return node;
}

Json fractional_node(const AuctionInstance& inst, const FractionalAllocation& frac) {
    Json node = Json::object();
    for (int i = 0; i < inst.bidder_count(); ++i) node[inst.bidders[i].name] = Json::object();
    for (const auto& [key, weight] : frac.weights) {
        Bundle b(key.second, inst.item_count());
        node[inst.bidders[key.first].name][bundle_key(b, inst.items)] = to_string(weight);
    }
    return node;
}

Json violations_node(const std::vector<VerdictViolation>& violations) {
    Json arr = Json::array();
    for (const auto& v : violations)
        arr.push_back(Json{{"condition", v.condition}, {"subject", v.subject}, {"detail", v.detail}});
    return arr;
}

std::string finish(const Json& doc) { return doc.dump(2) + "\n"; }

Json report_header(const AuctionInstance& inst) {
    Json doc;
    doc["tool"] = tool_version;
    doc["instance_digest"] = instance_digest(inst);
    return doc;
}

std::string relation_text(Relation rel) {
    switch (rel) {
        case Relation::le: return "<=";
        case Relation::eq: return "=";
        case Relation::ge: return ">=";
    }
    return "?";
}

std::string term_list(const std::vector<Rational>& coeffs, const LinearProgram& lp) {
    std::string out;
    for (int j = 0; j < int(coeffs.size()); ++j) {
        if (coeffs[j] == 0) continue;
        if (!out.empty()) out += " + ";
        out += to_string(coeffs[j]);
        out += ' ';
        out += j < int(lp.column_labels.size()) ? lp.column_labels[j] : "x" + std::to_string(j);
    }
    return out.empty() ? "0" : out;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

int read_bidder_name(const AuctionInstance& inst, const std::string& name,
                     const std::string& where) {
    auto idx = inst.bidder_index(name);
    if (!idx) fail(where, "unknown bidder \"" + name + "\"");
    return *idx;
}

Bundle read_item_list(const AuctionInstance& inst, const std::string& text,
                      const std::string& where) {
    Bundle b = Bundle::empty(inst.item_count());
    if (text.empty()) return b;
    for (const std::string& name : split(text, '+')) {
        auto idx = inst.item_index(name);
        if (!idx) fail(where, "unknown item \"" + name + "\"");
        if (b.contains(*idx)) fail(where, "duplicate item \"" + name + "\"");
        b = b.with(*idx);
    }
    return b;
}

}  // namespace

AuctionInstance parse_instance(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::exception& e) {
        fail("instance", std::string("JSON parse error: ") + e.what());
    }
    expect_object(doc, "instance");
    expect_keys(doc, {"items", "price_cap", "bidders"}, "instance");

    AuctionInstance inst;
    const Json& items = require(doc, "items", "instance");
    if (!items.is_array()) fail("instance.items", "expected an array of names");
    for (const auto& elem : items) {
        if (!elem.is_string()) fail("instance.items", "expected an item name");
        inst.items.push_back(elem.get<std::string>());
    }
    if (inst.items.size() > 20) fail("instance.items", "too many items");

    inst.price_cap = read_rational(require(doc, "price_cap", "instance"), "instance.price_cap");

    const Json& bidders = require(doc, "bidders", "instance");
    if (!bidders.is_array()) fail("instance.bidders", "expected an array of bidders");
    for (const auto& node : bidders) {
        const std::string where = "instance.bidders[" + std::to_string(inst.bidders.size()) + "]";
        expect_object(node, where);
        expect_keys(node, {"name", "utility"}, where);
        Bidder bidder;
        const Json& name = require(node, "name", where);
        if (!name.is_string()) fail(where, "bidder name must be a string");
        bidder.name = name.get<std::string>();
        bidder.utility = read_utility(require(node, "utility", where), inst, where + ".utility");
        inst.bidders.push_back(std::move(bidder));
    }
    return inst;
}

std::string print_instance(const AuctionInstance& inst) {
    Json doc;
    doc["items"] = inst.items;
    doc["price_cap"] = to_string(inst.price_cap);
    Json bidders = Json::array();
    for (const Bidder& b : inst.bidders) {
        Json node;
        node["name"] = b.name;
        node["utility"] = write_utility(b.utility, inst);
        bidders.push_back(std::move(node));
    }
    doc["bidders"] = std::move(bidders);
    return finish(doc);
}

std::string instance_digest(const AuctionInstance& inst) {
    const std::string canon = print_instance(inst);
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

std::string report_solve(const AuctionInstance& inst, const SolveOutcome& outcome) {
    Json doc = report_header(inst);
    doc["status"] = to_string(outcome.status);
    doc["prices"] = prices_node(inst, outcome.prices);
    doc["gap"] = to_string(outcome.gap);
    doc["visited"] = outcome.visited;
    doc["conclusiveness_reason"] = outcome.conclusiveness_reason;
    if (outcome.integral) doc["allocation"] = allocation_node(inst, *outcome.integral);
    if (outcome.frac) doc["fractional"] = fractional_node(inst, *outcome.frac);
    return finish(doc);
}

std::string report_verdict(const AuctionInstance& inst, const Verdict& verdict) {
    Json doc = report_header(inst);
    doc["ok"] = verdict.ok;
    doc["violations"] = violations_node(verdict.violations);
    return finish(doc);
}

std::string report_demand(const AuctionInstance& inst, const PriceVector& prices,
                          const std::vector<DemandSet>& demands) {
    Json doc = report_header(inst);
    doc["prices"] = prices_node(inst, prices);
    Json per_bidder = Json::object();
    for (const DemandSet& d : demands) {
        Json node;
        Json bundles = Json::array();
        for (const Bundle& b : d.bundles) bundles.push_back(bundle_array(b, inst.items));
        node["bundles"] = std::move(bundles);
        node["max_utility"] = to_string(d.max_utility);
        per_bidder[inst.bidders[d.bidder].name] = std::move(node);
    }
    doc["demand"] = std::move(per_bidder);
    return finish(doc);
}

std::string report_brute(const AuctionInstance& inst, const Rational& step,
                         const std::vector<std::pair<PriceVector, IntegralAllocation>>& found) {
    Json doc = report_header(inst);
    doc["step"] = to_string(step);
    doc["count"] = found.size();
    Json list = Json::array();
    for (const auto& [prices, alloc] : found) {
        Json node;
        node["prices"] = prices_node(inst, prices);
        node["allocation"] = allocation_node(inst, alloc);
        list.push_back(std::move(node));
    }
    doc["equilibria"] = std::move(list);
    return finish(doc);
}

std::string report_market(const AuctionInstance& inst, const AdMarket& market) {
    Json doc = report_header(inst);
    doc["M"] = market.commodity_count;
    doc["N"] = market.agent_count;
    doc["Z"] = to_string(market.z);
    Json endowments = Json::array();
    for (const auto& row : market.endowments) {
        Json vec = Json::array();
        for (const Rational& q : row) vec.push_back(to_string(q));
        endowments.push_back(std::move(vec));
    }
    doc["endowments"] = std::move(endowments);
    return finish(doc);
}

std::string report_validation(const AuctionInstance& inst, const ValidationReport& report) {
    Json doc = report_header(inst);
    doc["ok"] = report.ok;
    Json list = Json::array();
    for (const Violation& v : report.violations)
        list.push_back(Json{{"where", v.where}, {"detail", v.detail}});
    doc["violations"] = std::move(list);
    return finish(doc);
}

std::string dump_lp(const LinearProgram& lp) {
    std::string out = lp.sense == Sense::maximize ? "maximize: " : "minimize: ";
    out += term_list(lp.objective, lp);
    out += '\n';
    for (int r = 0; r < lp.row_count(); ++r) {
        const LpRow& row = lp.rows[r];
        out += row.label.empty() ? "row" + std::to_string(r) : row.label;
        out += ": ";
        out += term_list(row.coeffs, lp);
        out += ' ';
        out += relation_text(row.rel);
        out += ' ';
        out += to_string(row.rhs);
        out += '\n';
    }
    return out;
}

std::string dump_lp_solution(const LinearProgram& lp, const LpSolution& sol) {
    std::string out = "status: ";
    switch (sol.status) {
        case LpStatus::optimal: out += "optimal\n"; break;
        case LpStatus::infeasible: out += "infeasible\n"; break;
        case LpStatus::unbounded: out += "unbounded\n"; break;
    }
    if (sol.status == LpStatus::infeasible) {
        out += "infeasibility: " + to_string(sol.phase1_infeasibility) + '\n';
        return out;
    }
    if (sol.status != LpStatus::optimal) return out;
    out += "value: " + to_string(sol.objective_value) + '\n';
    for (int j = 0; j < int(sol.primal.size()); ++j) {
        if (sol.primal[j] == 0) continue;
        const std::string label =
            j < int(lp.column_labels.size()) ? lp.column_labels[j] : "x" + std::to_string(j);
        out += label + " = " + to_string(sol.primal[j]) + '\n';
    }
    for (int r = 0; r < int(sol.dual.size()); ++r) {
        if (sol.dual[r] == 0) continue;
        const std::string label = lp.rows[r].label.empty() ? "row" + std::to_string(r)
                                                           : lp.rows[r].label;
        out += "dual " + label + " = " + to_string(sol.dual[r]) + '\n';
    }
    return out;
}

PriceVector parse_prices_arg(const AuctionInstance& inst, const std::string& text) {
    const auto parts = split(text, ',');
    if (int(parts.size()) != inst.item_count())
        fail("prices", "expected " + std::to_string(inst.item_count()) + " comma-separated values");
    PriceVector p;
    for (const std::string& part : parts) {
        auto q = parse_rational(part);
        if (!q) fail("prices", "malformed rational \"" + part + "\"");
        if (*q < 0 || *q > inst.price_cap)
            fail("prices", "price " + part + " outside [0, " + to_string(inst.price_cap) + "]");
        p.prices.push_back(*q);
    }
    return p;
}

IntegralAllocation parse_alloc_arg(const AuctionInstance& inst, const std::string& text) {
    IntegralAllocation alloc;
    alloc.assignment.assign(inst.bidder_count(), Bundle::empty(inst.item_count()));
    if (text.empty()) return alloc;
    std::vector<bool> seen(inst.bidder_count(), false);
    for (const std::string& entry : split(text, ',')) {
        auto colon = entry.find(':');
        if (colon == std::string::npos) fail("alloc", "entry \"" + entry + "\" needs bidder:items");
        const int i = read_bidder_name(inst, entry.substr(0, colon), "alloc");
        if (seen[i]) fail("alloc", "bidder \"" + inst.bidders[i].name + "\" listed twice");
        seen[i] = true;
        alloc.assignment[i] = read_item_list(inst, entry.substr(colon + 1), "alloc");
    }
    return alloc;
}

FractionalAllocation parse_frac_arg(const AuctionInstance& inst, const std::string& text) {
    FractionalAllocation frac;
    if (text.empty()) return frac;
    for (const std::string& entry : split(text, ',')) {
        auto eq = entry.rfind('=');
        if (eq == std::string::npos)
            fail("frac", "entry \"" + entry + "\" needs bidder:items=weight");
        auto weight = parse_rational(entry.substr(eq + 1));
        if (!weight) fail("frac", "malformed weight in \"" + entry + "\"");
        const std::string head = entry.substr(0, eq);
        auto colon = head.find(':');
        if (colon == std::string::npos) fail("frac", "entry \"" + entry + "\" needs bidder:items");
        const int i = read_bidder_name(inst, head.substr(0, colon), "frac");
        Bundle b = read_item_list(inst, head.substr(colon + 1), "frac");
        frac.weights[{i, b.key()}] += *weight;
    }
    return frac;
}

}  // namespace walras
