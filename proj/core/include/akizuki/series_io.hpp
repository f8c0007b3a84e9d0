#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "akizuki/laurent_tail.hpp"
#include "akizuki/series.hpp"

namespace akizuki {

// Canonical printing: ascending exponents, zero terms omitted, "0" for zero.
// Example: "-t^6 - 2*t^10", "t^-2 + 2*t^-1".
std::string format_series(const TruncatedSeries& s);
std::string format_tail(const LaurentTail& tail);

// Literal grammar: <term> (("+"|"-") <term>)* with <term> one of
// <coeff>, <coeff>*t^<exp>, <coeff>*t, t^<exp>, t (the '*' may be omitted).
// <coeff> is an integer or p/q. A leading sign is allowed.
//
// parse_series reduces modulo t^precision; negative exponents are rejected.
TruncatedSeries parse_series(std::string_view text, Field field, std::size_t precision);
// Only negative exponents may carry nonzero coefficients.
LaurentTail parse_tail(std::string_view text, Field field);

}  // namespace akizuki
