#include "walras/pwl.hpp"

#include <stdexcept>

namespace walras {

Rational PwlCurve::evaluate(const Rational& payment) const {
    std::size_t k = segment_index(payment);
    const auto& [c0, u0] = points[k];
    const auto& [c1, u1] = points[k + 1];
    // Linear interpolation; c1 > c0 by the shape invariant.
    return u0 + (u1 - u0) * (payment - c0) / (c1 - c0);
}

std::size_t PwlCurve::segment_index(const Rational& payment) const {
    if (points.size() < 2) throw std::logic_error("pwl curve: not validated");
    if (payment < points.front().first || payment > points.back().first) {
        throw std::domain_error("pwl curve: payment outside validated horizon");
    }
    // Left-preferring scan; curves are short at desk scale.
    for (std::size_t k = points.size() - 1; k-- > 0;) {
        if (payment >= points[k].first) {
            if (payment == points[k].first && k > 0) return k - 1;
            return k;
        }
    }
    return 0;
}

std::vector<std::string> PwlCurve::shape_violations() const {
    std::vector<std::string> out;
    if (points.size() < 2) {
        out.push_back("fewer than two breakpoints");
        return out;
    }
    if (points.front().first != 0) out.push_back("first breakpoint payment is not 0");
    for (std::size_t k = 0; k + 1 < points.size(); ++k) {
        if (points[k + 1].first <= points[k].first) {
            out.push_back("breakpoint payments not strictly increasing");
            break;
        }
    }
    for (std::size_t k = 0; k + 1 < points.size(); ++k) {
        if (points[k + 1].second >= points[k].second) {
            out.push_back("utilities not strictly decreasing");
            break;
        }
    }
    return out;
}

}  // namespace walras
