#pragma once

#include <string_view>

#include "brk/multipoly.hpp"

namespace brkfq {

/// Parses literals such as "t1^2 + 2*t1*t2 - 3": terms of the form
/// c*v1^e1*... joined by + or -, where each variable is `prefix` followed by
/// an index in 1..arity. Coefficients are reduced mod q. Throws ParseError.
MultiPoly parse_poly(std::string_view text, const FieldSpec& spec, std::size_t arity,
                     char prefix = 't');

}  // namespace brkfq
