#pragma once

#include <string>
#include <vector>

#include "homres/polynomial.hpp"

namespace homres {

/// Parses the shared ASCII polynomial grammar: variables `x1..xN`, `*` explicit
/// or juxtaposition, `^` powers (commutative only), integer/rational
/// coefficients.  E.g. `x1^2 - 3/2*x2*x3`; word case: `x1 x2 - x2 x1`.
Polynomial parse_polynomial(const std::string& text, const Ring& ring);

/// One polynomial per non-empty, non-`#` line.
std::vector<Polynomial> parse_polynomial_lines(const std::string& text, const Ring& ring);

}  // namespace homres
