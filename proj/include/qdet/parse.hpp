#pragma once

#include "qdet/point.hpp"

namespace qdet {

// Exact expression parser over +, -, *, /, ^, parentheses, integer literals
// and the variables q, v (= q^{1/2}) and a/al/alpha.  Division requires an
// alpha-free divisor or an exact polynomial quotient.
AlphaPoly<RatFuncQ> parse_alpha_expr(const std::string& text);

// Same grammar restricted to alpha-free expressions.
RatFuncQ parse_q_expr(const std::string& text);

// PointSpec grammar: "alpha=<rational>" | "alpha=<ratfunc-in-q>" |
// "alpha=root:<alpha-poly>".
AlgebraicPoint<RatFuncQ> parse_point(const std::string& text);

}  // namespace qdet
