#pragma once

#include <string>

#include "thompson/element.hpp"

namespace thompson::cli {

/// Decimal text of r rounded half-up at `digits` places, trailing zeros
/// trimmed. Exact whenever the denominator divides 10^digits.
std::string decimal(const Rational& r, int digits = 12);

/// SVG drawing of the graph of f on the unit square, with one polyline vertex
/// per breakpoint. The exact breakpoints are kept in a data-breaks attribute.
std::string render_svg(const PLElement& f);

}  // namespace thompson::cli
