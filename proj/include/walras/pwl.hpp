#pragma once

#include <string>
#include <utility>
#include <vector>

#include "walras/rational.hpp"

namespace walras {

/// Piecewise-linear utility-of-payment curve: breakpoints (payment, utility)
/// with strictly increasing payments starting at 0 and strictly decreasing
/// utilities. Evaluation interpolates linearly between adjacent breakpoints
/// and is undefined outside [0, last payment].
struct PwlCurve {
    std::vector<std::pair<Rational, Rational>> points;

    bool operator==(const PwlCurve&) const = default;

    const Rational& last_payment() const { return points.back().first; }

    /// Exact interpolated value. Throws std::domain_error outside the
    /// breakpoint span.
    Rational evaluate(const Rational& payment) const;

    /// Index of the segment [points[k], points[k+1]] containing `payment`,
    /// preferring the left segment at interior breakpoints. Throws like
    /// evaluate() outside the span.
    std::size_t segment_index(const Rational& payment) const;

    /// Local shape violations (independent of any instance): at least two
    /// breakpoints, first payment 0, payments strictly increasing,
    /// utilities strictly decreasing. Empty when well formed.
    std::vector<std::string> shape_violations() const;
};

}  // namespace walras
