#pragma once

#include <string_view>

#include "finalg/group_expr.hpp"
#include "finalg/ring_expr.hpp"

namespace finalg {

/// atom := C<n> | D<n> | Q8 | S<n> | Hol(<n>) | AGL1(<q>) | GL2(<q>) | SL2(<q>) | UC(<q>)
/// expr := term ('x' term)* ; term := atom | '(' expr ')'
/// Whitespace is ignored. Parameters are validated here (D needs an even order,
/// AGL1/GL2/SL2 a prime power, UC an odd prime power). Throws ParseError.
GroupExpr parse_group_expr(std::string_view text);

/// atom := Z<n> | F<q> | M(<k>,<ring>) | U(<k>,<ring>) | TP(<ring>,<k>)
///       | GR(<t>,<group-expr>) | End(<d1>,...,<dr>)
/// expr := term ('x' term)* ; term := atom | '(' expr ')'
RingExpr parse_ring_expr(std::string_view text);

}  // namespace finalg
