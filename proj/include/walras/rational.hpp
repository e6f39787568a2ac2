#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace walras {

/// Exact rational scalar backed by GMP. Every quantity in the solve and
/// verify paths is one of these; no floating point exists anywhere below
/// the CLI surface.
using Rational = mpq_class;

/// Parses "a", "-a" or "a/b" (b a positive integer). Lowest-terms
/// normalization is applied after parsing. Returns nullopt for anything
/// malformed, including a zero denominator.
std::optional<Rational> parse_rational(const std::string& text);

/// Canonical rendering: "a" when the denominator is 1, else "a/b" in
/// lowest terms with b > 0.
std::string to_string(const Rational& q);

}  // namespace walras
