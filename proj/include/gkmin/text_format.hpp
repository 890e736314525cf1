#pragma once

#include <string_view>
#include <vector>

#include "gkmin/langlands.hpp"
#include "gkmin/permutation.hpp"
#include "gkmin/weights.hpp"

namespace gkmin {

// Text input formats. All parsers throw ParseError carrying the 0-based
// offset of the first bad character; spaces around tokens are ignored.

/// "p/q" or "p", p and q integers, q nonzero.
Rational parse_rational(std::string_view text);

/// Comma separated one-line notation, "2,3,1". Also validates bijectivity
/// (DomainError).
Permutation parse_permutation(std::string_view text);

/// Comma separated rationals.
std::vector<Rational> parse_rational_list(std::string_view text);

/// 2n comma separated rationals a_1..a_n, b_1..b_n.
WeightVector parse_weight(std::string_view text);

/// "a:b;a:b;...".
LanglandsParameter parse_parameter(std::string_view text);

} // namespace gkmin
