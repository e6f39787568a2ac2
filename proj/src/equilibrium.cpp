#include "walras/equilibrium.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace walras {

namespace {

bool check_price_shape(const AuctionInstance& inst, const PriceVector& prices, Verdict& v) {
    if (static_cast<int>(prices.prices.size()) != inst.item_count()) {
        v.ok = false;
        v.violations.push_back({"feasibility", "prices", "price vector has wrong dimension"});
        return false;
    }
    for (int j = 0; j < inst.item_count(); ++j) {
        if (prices.prices[static_cast<std::size_t>(j)] < 0) {
            v.ok = false;
            v.violations.push_back(
                {"feasibility", inst.items[static_cast<std::size_t>(j)], "negative price"});
        }
    }
    return v.ok;
}

}  // namespace

Verdict verify_we(const AuctionInstance& inst, const PriceVector& prices,
                  const IntegralAllocation& alloc) {
    Verdict v;
    if (!check_price_shape(inst, prices, v)) return v;
    const int n = inst.bidder_count();
    const int m = inst.item_count();
    if (static_cast<int>(alloc.assignment.size()) != n) {
        v.ok = false;
        v.violations.push_back({"feasibility", "allocation", "one bundle per bidder expected"});
        return v;
    }
    std::uint64_t taken = 0;
    for (int i = 0; i < n; ++i) {
        const Bundle& b = alloc.assignment[static_cast<std::size_t>(i)];
        if (b.item_count() != m) {
            v.ok = false;
            v.violations.push_back({"feasibility", inst.bidders[static_cast<std::size_t>(i)].name,
                                    "bundle is over a different item universe"});
            return v;
        }
        if (taken & b.key()) {
            v.ok = false;
            for (int j : b.items()) {
                if (taken & (std::uint64_t{1} << j)) {
                    v.violations.push_back({"feasibility", inst.items[static_cast<std::size_t>(j)],
                                            "item allocated more than once"});
                }
            }
        }
        taken |= b.key();
    }
    for (int i = 0; i < n; ++i) {
        const Bundle& b = alloc.assignment[static_cast<std::size_t>(i)];
        const Rational got = evaluate_utility(inst, i, b, bundle_price(b, prices));
        const Rational best = max_utility(inst, i, prices);
        if (got != best) {
            v.ok = false;
            v.violations.push_back({"satisfaction", inst.bidders[static_cast<std::size_t>(i)].name,
                                    "bundle utility " + to_string(got) +
                                        " is below the attainable " + to_string(best)});
        }
    }
    for (int j = 0; j < m; ++j) {
        if (prices.prices[static_cast<std::size_t>(j)] > 0 && !(taken & (std::uint64_t{1} << j))) {
            v.ok = false;
            v.violations.push_back({"clearance", inst.items[static_cast<std::size_t>(j)],
                                    "positively priced item is unsold"});
        }
    }
    return v;
}

Verdict verify_fractional_we(const AuctionInstance& inst, const PriceVector& prices,
                             const FractionalAllocation& frac) {
    Verdict v;
    if (!check_price_shape(inst, prices, v)) return v;
    const int n = inst.bidder_count();
    const int m = inst.item_count();

    for (const auto& [key, w] : frac.weights) {
        if (key.first < 0 || key.first >= n || key.second >= (std::uint64_t{1} << m)) {
            v.ok = false;
            v.violations.push_back({"distribution", "weights", "weight key outside the instance"});
            return v;
        }
        if (w < 0) {
            v.ok = false;
            v.violations.push_back({"distribution",
                                    inst.bidders[static_cast<std::size_t>(key.first)].name,
                                    "negative weight on bundle " +
                                        bundle_text(Bundle(key.second, m), inst.items)});
        }
    }

    for (int i = 0; i < n; ++i) {
        Rational total = 0;
        for (const auto& [key, w] : frac.weights) {
            if (key.first == i) total += w;
        }
        if (total != 1) {
            v.ok = false;
            v.violations.push_back({"distribution", inst.bidders[static_cast<std::size_t>(i)].name,
                                    "weights sum to " + to_string(total) + ", expected 1"});
        }
    }

    for (const auto& [key, w] : frac.weights) {
        if (w <= 0) continue;
        const Bundle b(key.second, m);
        const Rational got = evaluate_utility(inst, key.first, b, bundle_price(b, prices));
        const Rational best = max_utility(inst, key.first, prices);
        if (got != best) {
            v.ok = false;
            v.violations.push_back({"satisfaction",
                                    inst.bidders[static_cast<std::size_t>(key.first)].name,
                                    "supported bundle " + bundle_text(b, inst.items) +
                                        " gives " + to_string(got) + ", below the attainable " +
                                        to_string(best)});
        }
    }

    for (int j = 0; j < m; ++j) {
        Rational mass = 0;
        for (const auto& [key, w] : frac.weights) {
            if (key.second & (std::uint64_t{1} << j)) mass += w;
        }
        if (mass > 1) {
            v.ok = false;
            v.violations.push_back({"feasibility", inst.items[static_cast<std::size_t>(j)],
                                    "item mass " + to_string(mass) + " exceeds 1"});
        }
        if (prices.prices[static_cast<std::size_t>(j)] > 0 && mass != 1) {
            v.ok = false;
            v.violations.push_back({"clearance", inst.items[static_cast<std::size_t>(j)],
                                    "item mass " + to_string(mass) +
                                        " at a positive price, expected exactly 1"});
        }
    }
    return v;
}

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::we_found: return "we_found";
        case SolveStatus::no_we_conclusive: return "no_we_conclusive";
        case SolveStatus::no_we_at_visited_prices: return "no_we_at_visited_prices";
        case SolveStatus::frac_only: return "frac_only";
        case SolveStatus::not_found: return "not_found";
    }
    return "unknown";
}

namespace {

// Affine view of one bidder's utility for one bundle around a reference
// price: utility(p) = alpha - beta * cost_S(p), valid while cost_S(p)
// stays inside [cost_lo, cost_hi].
struct AffineUtility {
    Rational alpha;
    Rational beta;
    Rational cost_lo;
    Rational cost_hi;
    bool bounded = false;  // quasilinear kinds hold everywhere
};

AffineUtility affine_utility_at(const AuctionInstance& inst, int bidder, const Bundle& bundle,
                                const Rational& cost) {
    const UtilityFunction& u = inst.bidders[static_cast<std::size_t>(bidder)].utility;
    AffineUtility out;
    if (const auto* ql = std::get_if<QuasilinearUtility>(&u)) {
        out.alpha = ql->bundle_values[static_cast<std::size_t>(bundle.key())];
        out.beta = 1;
        return out;
    }
    if (const auto* ud = std::get_if<UnitDemandUtility>(&u)) {
        Rational best = 0;
        for (int j : bundle.items()) {
            const Rational& v = ud->item_values[static_cast<std::size_t>(j)];
            if (v > best) best = v;
        }
        out.alpha = best;
        out.beta = 1;
        return out;
    }
    const auto& pwl = std::get<TabulatedPwlUtility>(u);
    const PwlCurve& curve = pwl.curves.at(bundle.key());
    const int seg = curve.segment_index(cost);
    const auto& [c0, u0] = curve.points[static_cast<std::size_t>(seg)];
    const auto& [c1, u1] = curve.points[static_cast<std::size_t>(seg) + 1];
    out.beta = (u0 - u1) / (c1 - c0);
    out.alpha = u0 + out.beta * c0;
    out.cost_lo = c0;
    out.cost_hi = c1;
    out.bounded = true;
    return out;
}

class Searcher {
public:
    Searcher(const AuctionInstance& inst, const SolveOptions& opts)
        : inst_(inst), opts_(opts), m_(inst.item_count()), n_(inst.bidder_count()),
          cap_(inst.price_cap) {
        if (opts.grid_k < 0 || opts.refinements < 0) {
            throw std::invalid_argument("solve options must be nonnegative");
        }
        if (opts.eps < 0) throw std::invalid_argument("eps must be nonnegative");
        grid_k_ = opts.grid_k != 0 ? std::max(opts.grid_k, 2)
                  : m_ <= 2        ? 9
                  : m_ == 3        ? 5
                                   : 3;
    }

    GapSearchResult run() {
        consider(PriceVector{std::vector<Rational>(static_cast<std::size_t>(m_), Rational(0))});
        dual_seed_stage();
        if (zeros_.empty()) grid_stage();
        if (zeros_.empty()) descent_stage(best_prices_);
        for (int r = 1; r <= opts_.refinements && zeros_.empty(); ++r) {
            refine_round(r);
            if (zeros_.empty()) descent_stage(best_prices_);
        }
        if (zeros_.empty()) snap_stage();

        GapSearchResult out;
        for (const auto& z : zeros_) out.zeros.push_back(PriceVector{z});
        out.best_prices = best_prices_;
        out.best_gap = best_gap_;
        out.visited = static_cast<long long>(cache_.size());
        return out;
    }

private:
    const AuctionInstance& inst_;
    SolveOptions opts_;
    int m_;
    int n_;
    Rational cap_;
    int grid_k_;
    std::map<std::vector<Rational>, Rational> cache_;
    std::set<std::vector<Rational>> zeros_;
    PriceVector best_prices_;
    Rational best_gap_ = -1;

    Rational consider(const PriceVector& p) {
        auto it = cache_.find(p.prices);
        if (it != cache_.end()) return it->second;
        const Rational gap = duality_gap(inst_, p).gap;
        cache_.emplace(p.prices, gap);
        if (gap == 0) zeros_.insert(p.prices);
        if (best_gap_ < 0 || gap < best_gap_ ||
            (gap == best_gap_ && p.prices < best_prices_.prices)) {
            best_gap_ = gap;
            best_prices_ = p;
        }
        return gap;
    }

    PriceVector clamped(std::vector<Rational> v) const {
        for (auto& x : v) {
            if (x < 0) x = 0;
            if (x > cap_) x = cap_;
        }
        return PriceVector{std::move(v)};
    }

    // Reprice via the covering LP: its optimal price block, clamped into
    // the box (and to the largest covering requirement, which preserves
    // dual optimality). A fixed point of the unclamped map has gap zero,
    // and for quasilinear-kind bidders the very first step lands on one.
    void dual_seed_stage() {
        const int iters = opts_.tatonnement ? 12 : 4;
        PriceVector p{std::vector<Rational>(static_cast<std::size_t>(m_), Rational(0))};
        for (int it = 0; it < iters; ++it) {
            const LinearProgram dual = build_dual_lp(inst_, p);
            const LpSolution sol = solve_lp(dual);
            if (sol.status != LpStatus::optimal) {
                throw std::logic_error("covering dual must have an optimum");
            }
            Rational vmax = 0;
            for (const auto& row : dual.rows) {
                if (row.rhs > vmax) vmax = row.rhs;
            }
            std::vector<Rational> q(static_cast<std::size_t>(m_));
            for (int j = 0; j < m_; ++j) {
                Rational x = sol.primal[static_cast<std::size_t>(n_ + j)];
                if (x > vmax) x = vmax;
                q[static_cast<std::size_t>(j)] = x;
            }
            PriceVector next = clamped(std::move(q));
            const bool repeat = cache_.count(next.prices) > 0;
            if (consider(next) == 0 || repeat) break;
            p = std::move(next);
        }
    }

    void grid_stage() {
        const Rational step = cap_ / (grid_k_ - 1);
        std::vector<int> digits(static_cast<std::size_t>(m_), 0);
        for (;;) {
            std::vector<Rational> p(static_cast<std::size_t>(m_));
            for (int j = 0; j < m_; ++j) p[static_cast<std::size_t>(j)] =
                Rational(digits[static_cast<std::size_t>(j)]) * step;
            consider(PriceVector{std::move(p)});
            int d = m_ - 1;
            while (d >= 0 && digits[static_cast<std::size_t>(d)] == grid_k_ - 1) {
                digits[static_cast<std::size_t>(d)] = 0;
                --d;
            }
            if (d < 0) break;
            ++digits[static_cast<std::size_t>(d)];
        }
    }

    std::vector<PriceVector> top_points(int count) const {
        std::vector<std::pair<Rational, std::vector<Rational>>> all;
        all.reserve(cache_.size());
        for (const auto& [p, g] : cache_) all.emplace_back(g, p);
        std::sort(all.begin(), all.end());
        std::vector<PriceVector> out;
        for (int i = 0; i < count && i < static_cast<int>(all.size()); ++i) {
            out.push_back(PriceVector{all[static_cast<std::size_t>(i)].second});
        }
        return out;
    }

    void refine_round(int round) {
        Rational step = cap_ / (grid_k_ - 1);
        for (int r = 0; r < round; ++r) step /= grid_k_;
        const int radius = grid_k_ - 1;
        const int width = 2 * radius + 1;
        const auto centers = top_points(m_ <= 2 ? 3 : 1);
        for (const auto& center : centers) {
            std::vector<int> digits(static_cast<std::size_t>(m_), 0);
            for (;;) {
                std::vector<Rational> p(static_cast<std::size_t>(m_));
                for (int j = 0; j < m_; ++j) {
                    p[static_cast<std::size_t>(j)] =
                        center.prices[static_cast<std::size_t>(j)] +
                        Rational(digits[static_cast<std::size_t>(j)] - radius) * step;
                }
                consider(clamped(std::move(p)));
                int d = m_ - 1;
                while (d >= 0 && digits[static_cast<std::size_t>(d)] == width - 1) {
                    digits[static_cast<std::size_t>(d)] = 0;
                    --d;
                }
                if (d < 0) break;
                ++digits[static_cast<std::size_t>(d)];
            }
        }
    }

    // Exact minimization of the gap along one axis. Restricted to the
    // line, every bundle's utility is piecewise affine with kinks only
    // where a bundle cost crosses a curve breakpoint; between consecutive
    // kinks and per-bidder tie crossings the gap is concave (affine dual
    // value minus convex LP optimum), so it is positive on the whole open
    // interval whenever it is positive at both ends. Checking the
    // collected candidate points therefore finds every zero on the line.
    PriceVector line_minimize(const PriceVector& base, int axis) {
        std::set<Rational> kinks{Rational(0), cap_};
        for (int i = 0; i < n_; ++i) {
            const auto* pwl =
                std::get_if<TabulatedPwlUtility>(&inst_.bidders[static_cast<std::size_t>(i)].utility);
            if (!pwl) continue;
            for (const auto& [bits, curve] : pwl->curves) {
                if (!(bits & (std::uint64_t{1} << axis))) continue;
                Rational rest = 0;
                for (int j = 0; j < m_; ++j) {
                    if (j != axis && (bits & (std::uint64_t{1} << j))) {
                        rest += base.prices[static_cast<std::size_t>(j)];
                    }
                }
                for (const auto& [c, u] : curve.points) {
                    const Rational t = c - rest;
                    if (t > 0 && t < cap_) kinks.insert(t);
                }
            }
        }

        auto utility_at = [&](int bidder, const Bundle& b, const Rational& t) {
            PriceVector p = base;
            p.prices[static_cast<std::size_t>(axis)] = t;
            return evaluate_utility(inst_, bidder, b, bundle_price(b, p));
        };

        const auto bundles = enumerate_bundles(m_);
        std::set<Rational> candidates = kinks;
        std::vector<Rational> sorted(kinks.begin(), kinks.end());
        for (std::size_t k = 0; k + 1 < sorted.size(); ++k) {
            const Rational& t1 = sorted[k];
            const Rational& t2 = sorted[k + 1];
            const Rational span = t2 - t1;
            for (int i = 0; i < n_; ++i) {
                std::vector<Rational> u1, u2;
                u1.reserve(bundles.size());
                u2.reserve(bundles.size());
                for (const Bundle& b : bundles) {
                    u1.push_back(utility_at(i, b, t1));
                    u2.push_back(utility_at(i, b, t2));
                }
                for (std::size_t a = 0; a < bundles.size(); ++a) {
                    for (std::size_t c = a + 1; c < bundles.size(); ++c) {
                        const Rational d1 = u1[a] - u1[c];
                        const Rational d2 = u2[a] - u2[c];
                        if ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) {
                            candidates.insert(t1 + d1 * span / (d1 - d2));
                        }
                    }
                }
            }
        }

        PriceVector best = base;
        Rational best_gap = consider(base);
        for (const Rational& t : candidates) {
            PriceVector p = base;
            p.prices[static_cast<std::size_t>(axis)] = t;
            const Rational g = consider(p);
            if (g < best_gap || (g == best_gap && p.prices < best.prices)) {
                best_gap = g;
                best = std::move(p);
            }
        }
        return best;
    }

    void descent_stage(const PriceVector& start) {
        if (start.prices.empty()) return;
        PriceVector cur = start;
        for (int round = 0; round < 3 && zeros_.empty(); ++round) {
            bool improved = false;
            for (int j = 0; j < m_ && zeros_.empty(); ++j) {
                PriceVector next = line_minimize(cur, j);
                if (cache_.at(next.prices) < cache_.at(cur.prices)) {
                    cur = std::move(next);
                    improved = true;
                }
            }
            if (!improved) break;
        }
    }

    // Pins the demand structure seen at the best near-miss (tied bundle
    // sets, curve segments, zero-price items) and asks an exact
    // feasibility solve for prices and weights realizing it. A feasible
    // point is then re-certified through the duality gap.
    void snap_stage() {
        if (best_prices_.prices.empty()) return;
        const PriceVector& at = best_prices_;
        const Rational g = best_gap_;
        std::vector<Rational> deltas{Rational(0)};
        if (g > 0) {
            deltas.push_back(g);
            deltas.push_back(2 * g);
        }
        Rational step = cap_ / (grid_k_ - 1);
        for (int r = 0; r < opts_.refinements; ++r) step /= grid_k_;

        for (const Rational& delta : deltas) {
            for (int zero_rule = 0; zero_rule < 2; ++zero_rule) {
                std::vector<bool> zero_price(static_cast<std::size_t>(m_), false);
                for (int j = 0; j < m_; ++j) {
                    const Rational& pj = at.prices[static_cast<std::size_t>(j)];
                    zero_price[static_cast<std::size_t>(j)] =
                        zero_rule == 0 ? pj == 0 : pj <= step;
                }
                auto point = snap_solve(at, delta, zero_price);
                if (point) {
                    if (consider(*point) == 0) return;
                }
            }
        }
    }

    std::optional<PriceVector> snap_solve(const PriceVector& at, const Rational& delta,
                                          const std::vector<bool>& zero_price) {
        const auto bundles = enumerate_bundles(m_);

        std::vector<std::vector<AffineUtility>> forms(static_cast<std::size_t>(n_));
        std::vector<std::vector<std::size_t>> tied(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            const Rational umax = max_utility(inst_, i, at);
            for (std::size_t s = 0; s < bundles.size(); ++s) {
                const Rational cost = bundle_price(bundles[s], at);
                forms[static_cast<std::size_t>(i)].push_back(
                    affine_utility_at(inst_, i, bundles[s], cost));
                const Rational u = evaluate_utility(inst_, i, bundles[s], cost);
                if (umax - u <= delta) tied[static_cast<std::size_t>(i)].push_back(s);
            }
        }

        // Columns: p_0..p_{m-1}, mu_1..mu_n, then x per tied (bidder, bundle).
        LinearProgram lp;
        lp.sense = Sense::minimize;
        int x_cols = 0;
        for (const auto& t : tied) x_cols += static_cast<int>(t.size());
        const int cols = m_ + n_ + x_cols;
        lp.objective.assign(static_cast<std::size_t>(cols), Rational(0));
        std::vector<int> x_base(static_cast<std::size_t>(n_), 0);
        {
            int next = m_ + n_;
            for (int i = 0; i < n_; ++i) {
                x_base[static_cast<std::size_t>(i)] = next;
                next += static_cast<int>(tied[static_cast<std::size_t>(i)].size());
            }
        }
        auto add_row = [&](std::vector<Rational> coeffs, Relation rel, Rational rhs) {
            lp.rows.push_back({std::move(coeffs), rel, std::move(rhs), ""});
        };
        auto zero_row = [&]() { return std::vector<Rational>(static_cast<std::size_t>(cols), Rational(0)); };

        for (int i = 0; i < n_; ++i) {
            // mu_i equals each tied bundle's utility, dominates the rest.
            for (std::size_t s = 0; s < bundles.size(); ++s) {
                const AffineUtility& f = forms[static_cast<std::size_t>(i)][s];
                auto row = zero_row();
                row[static_cast<std::size_t>(m_ + i)] = 1;
                for (int j : bundles[s].items()) row[static_cast<std::size_t>(j)] = f.beta;
                const bool is_tied =
                    std::find(tied[static_cast<std::size_t>(i)].begin(),
                              tied[static_cast<std::size_t>(i)].end(),
                              s) != tied[static_cast<std::size_t>(i)].end();
                add_row(std::move(row), is_tied ? Relation::eq : Relation::ge, f.alpha);
                if (f.bounded) {
                    auto lo = zero_row();
                    for (int j : bundles[s].items()) lo[static_cast<std::size_t>(j)] = 1;
                    auto hi = lo;
                    add_row(std::move(lo), Relation::ge, f.cost_lo);
                    add_row(std::move(hi), Relation::le, f.cost_hi);
                }
            }
            auto dist = zero_row();
            for (std::size_t t = 0; t < tied[static_cast<std::size_t>(i)].size(); ++t) {
                dist[static_cast<std::size_t>(x_base[static_cast<std::size_t>(i)] + static_cast<int>(t))] = 1;
            }
            add_row(std::move(dist), Relation::eq, Rational(1));
        }
        for (int j = 0; j < m_; ++j) {
            auto mass = zero_row();
            for (int i = 0; i < n_; ++i) {
                for (std::size_t t = 0; t < tied[static_cast<std::size_t>(i)].size(); ++t) {
                    if (bundles[tied[static_cast<std::size_t>(i)][t]].contains(j)) {
                        mass[static_cast<std::size_t>(x_base[static_cast<std::size_t>(i)] +
                                                      static_cast<int>(t))] = 1;
                    }
                }
            }
            if (zero_price[static_cast<std::size_t>(j)]) {
                add_row(std::move(mass), Relation::le, Rational(1));
                auto pin = zero_row();
                pin[static_cast<std::size_t>(j)] = 1;
                add_row(std::move(pin), Relation::eq, Rational(0));
            } else {
                add_row(std::move(mass), Relation::eq, Rational(1));
            }
            auto box = zero_row();
            box[static_cast<std::size_t>(j)] = 1;
            add_row(std::move(box), Relation::le, cap_);
        }

        const FeasiblePoint fp = find_feasible_point(lp);
        if (!fp.point) return std::nullopt;
        std::vector<Rational> p(fp.point->begin(), fp.point->begin() + m_);
        return PriceVector{std::move(p)};
    }
};

FractionalAllocation verified_extraction(const AuctionInstance& inst, const PriceVector& prices) {
    const GapEvaluation ev = evaluate_gap(inst, prices);
    if (ev.cert.gap != 0) throw std::logic_error("extraction requires a zero gap");
    FractionalAllocation frac = lp_fractional_allocation(inst, ev.lp_solution);
    const Verdict v = verify_fractional_we(inst, prices, frac);
    if (!v.ok) throw std::logic_error("zero-gap extraction failed verification");
    return frac;
}

}  // namespace

GapSearchResult search_zero_gap(const AuctionInstance& inst, const SolveOptions& options) {
    return Searcher(inst, options).run();
}

SolveOutcome solve_fractional_we(const AuctionInstance& inst, const SolveOptions& options) {
    const GapSearchResult sr = search_zero_gap(inst, options);
    SolveOutcome out;
    out.visited = sr.visited;
    if (!sr.zeros.empty()) {
        out.status = SolveStatus::frac_only;
        out.prices = sr.zeros.front();
        out.gap = 0;
        out.frac = verified_extraction(inst, out.prices);
        out.conclusiveness_reason =
            "duality gap is exactly zero; weights read off an optimal assignment LP point";
    } else {
        out.status = SolveStatus::not_found;
        out.prices = sr.best_prices;
        out.gap = sr.best_gap;
        out.conclusiveness_reason =
            options.eps > 0 && sr.best_gap <= options.eps
                ? "no exact zero found; the best gap seen is within the reporting tolerance"
                : "no zero-gap price among the visited candidates";
    }
    return out;
}

SolveOutcome solve_we(const AuctionInstance& inst, const SolveOptions& options) {
    const GapSearchResult sr = search_zero_gap(inst, options);
    SolveOutcome out;
    out.visited = sr.visited;
    for (const PriceVector& z : sr.zeros) {
        const IntegralOptimum io = integral_optimum(inst, z);
        if (!io.allocation) continue;
        const Verdict v = verify_we(inst, z, *io.allocation);
        if (!v.ok) throw std::logic_error("integral optimum at zero gap failed verification");
        out.status = SolveStatus::we_found;
        out.prices = z;
        out.integral = io.allocation;
        out.frac = verified_extraction(inst, z);
        out.gap = 0;
        out.conclusiveness_reason =
            "zero duality gap with an integral optimum of the assignment LP";
        return out;
    }
    if (!sr.zeros.empty()) {
        out.prices = sr.zeros.front();
        out.gap = 0;
        out.frac = verified_extraction(inst, out.prices);
        if (is_quasilinear_instance(inst)) {
            out.status = SolveStatus::no_we_conclusive;
            out.conclusiveness_reason =
                "quasilinear bidders make the assignment LP identical at every price, so its "
                "integral shortfall at one zero-gap price rules out equilibria everywhere";
        } else {
            out.status = SolveStatus::no_we_at_visited_prices;
            out.conclusiveness_reason =
                "no integral optimum at any visited zero-gap price; other zero-gap prices may "
                "exist";
        }
    } else {
        out.status = SolveStatus::not_found;
        out.prices = sr.best_prices;
        out.gap = sr.best_gap;
        out.conclusiveness_reason = "no zero-gap price among the visited candidates";
    }
    return out;
}

std::vector<std::pair<PriceVector, IntegralAllocation>> brute_force_we(
    const AuctionInstance& inst, const Rational& grid_step) {
    if (grid_step <= 0) throw std::invalid_argument("grid step must be positive");
    const Rational q = inst.price_cap / grid_step;
    if (q.get_den() != 1) throw std::invalid_argument("grid step must divide the price cap");
    const long points = q.get_num().get_si() + 1;
    const int n = inst.bidder_count();
    const int m = inst.item_count();
    {
        mpz_class total = 1;
        for (int j = 0; j < m; ++j) total *= points;
        for (int j = 0; j < m; ++j) total *= n + 1;
        if (total > 10000000) {
            throw std::invalid_argument("instance too large for the brute-force oracle");
        }
    }

    std::vector<std::pair<PriceVector, IntegralAllocation>> found;
    std::vector<long> digits(static_cast<std::size_t>(m), 0);
    for (;;) {
        PriceVector p;
        p.prices.resize(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j) {
            p.prices[static_cast<std::size_t>(j)] =
                Rational(digits[static_cast<std::size_t>(j)]) * grid_step;
        }
        std::vector<Rational> umax(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) umax[static_cast<std::size_t>(i)] = max_utility(inst, i, p);

        std::vector<int> assign(static_cast<std::size_t>(m), 0);
        for (;;) {
            std::vector<std::uint64_t> bits(static_cast<std::size_t>(n), 0);
            for (int j = 0; j < m; ++j) {
                if (assign[static_cast<std::size_t>(j)] > 0) {
                    bits[static_cast<std::size_t>(assign[static_cast<std::size_t>(j)] - 1)] |=
                        std::uint64_t{1} << j;
                }
            }
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
                const Bundle b(bits[static_cast<std::size_t>(i)], m);
                ok = evaluate_utility(inst, i, b, bundle_price(b, p)) ==
                     umax[static_cast<std::size_t>(i)];
            }
            if (ok) {
                for (int j = 0; j < m && ok; ++j) {
                    if (p.prices[static_cast<std::size_t>(j)] > 0 &&
                        assign[static_cast<std::size_t>(j)] == 0) {
                        ok = false;
                    }
                }
            }
            if (ok) {
                IntegralAllocation alloc;
                for (int i = 0; i < n; ++i) {
                    alloc.assignment.emplace_back(bits[static_cast<std::size_t>(i)], m);
                }
                found.emplace_back(p, std::move(alloc));
            }
            int j = 0;
            while (j < m && assign[static_cast<std::size_t>(j)] == n) {
                assign[static_cast<std::size_t>(j)] = 0;
                ++j;
            }
            if (j == m) break;
            ++assign[static_cast<std::size_t>(j)];
        }

        int d = m - 1;
        while (d >= 0 && digits[static_cast<std::size_t>(d)] == points - 1) {
            digits[static_cast<std::size_t>(d)] = 0;
            --d;
        }
        if (d < 0) break;
        ++digits[static_cast<std::size_t>(d)];
    }
    return found;
}

}  // namespace walras
