#ifndef QSLICE_TEXT_HPP
#define QSLICE_TEXT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qslice/polynomial.hpp"
#include "qslice/quaternion.hpp"
#include "qslice/stem.hpp"
#include "qslice/subset.hpp"

namespace qslice {

/// Parsed polynomial expression in the coordinate functions x1..xn.
///
/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := var | const | factor '^' int
///   var    := 'x' int
///   const  := quaternion literal ("2", "3/4i", "k", "1.5") or a tuple
///             "(w,x,y,z)" with rational or decimal entries
///
/// Variables inside a term must be nondecreasing; constants fold into the
/// right coefficient in written order.
struct Expression {
    std::string source;
    std::vector<OrderedMonomial> terms;
};

Expression parse_expression(std::string_view source, std::uint32_t arity);

/// Canonical form; parse(print(parse(s))) == parse(s).
std::string print_expression(const std::vector<OrderedMonomial>& terms);

/// "1+2i-3/4k" or "(1,2,0,-3/4)".
RQuat parse_quaternion_literal(std::string_view text);

/// Inverse of QPolynomial::to_string.
QPolynomial parse_polynomial(std::string_view text, std::uint32_t arity);

/// Semicolon-separated 4-tuples, e.g. "(0,1,0,0);(0,0,1,0)". Components
/// may be decimals, rationals or scientific notation.
std::vector<DQuat> parse_point_list(std::string_view text, std::uint32_t arity);

/// "{1,3}" or "{}".
SubsetIndex parse_subset(std::string_view text, std::uint32_t arity);

}  // namespace qslice

#endif
