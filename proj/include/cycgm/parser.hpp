#pragma once

#include <string>

#include "cycgm/polyx.hpp"

namespace cycgm {

/// Parses "+", "-", "*", "^" expressions over integers, rationals p/q,
/// variable names and parentheses. No implicit multiplication; "/" only
/// joins two integer literals. Throws ParseError with a character offset.
MultiPoly parse_poly(const std::string& src, const VarTablePtr& table);

/// Same grammar, result split along powers of x.
PolyInX parse_poly_in_x(const std::string& src, const VarTablePtr& table);

}  // namespace cycgm
