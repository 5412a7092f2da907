#pragma once

#include <string>

#include "majorana/operator.hpp"

namespace majorana {

/// Renders terms sorted by (site count, lexicographic sites) as
/// `coeff * c[i]c[j]...` lines joined with " + ". Scalars render as `coeff * 1`.
/// Round-trips through parse_operator exactly (coefficients printed with 17
/// significant digits).
std::string render_operator(const MajoranaOperator& op);

/// Parses the render_operator format. Accepted coefficient forms:
/// `a`, `(a)`, `(a+bi)`, `(a-bi)` with decimal literals.
MajoranaOperator parse_operator(const std::string& text);

/// "(re+imi)" or plain real when im == 0; 17 significant digits.
std::string format_complex(Complex z);

}  // namespace majorana
