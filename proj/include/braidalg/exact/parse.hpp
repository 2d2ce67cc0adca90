#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "braidalg/exact/ratfunc.hpp"

namespace braidalg::exact {

/// Parses an arithmetic expression over integers and symbols with + - * / ^
/// and parentheses, e.g. "(x + 1)/(2*y^2) - 3/4". Every symbol must belong
/// to `ring`. Throws UsageError on malformed input and MathError on a
/// division by the zero function.
RatFunc parse_ratfunc(std::string_view text, const Ring& ring);

/// Symbols occurring in an expression, in order of first appearance.
std::vector<std::string> symbols_in(std::string_view text);

}  // namespace braidalg::exact
