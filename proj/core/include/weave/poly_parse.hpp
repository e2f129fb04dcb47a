#pragma once

#include <string_view>

#include "weave/multi_poly.hpp"

namespace weave {

/// Parses expressions such as "x2^2 - 2*p1*x1*x2 + 3/2*(x1 - 1)^2" over the
/// given table. Supports + - * ^ (non-negative integer powers), parentheses
/// and rational literals. Throws InputError on malformed text.
MultiPoly parse_poly(std::string_view text, const VarTablePtr& vars);

}  // namespace weave
