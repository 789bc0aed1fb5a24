#pragma once

#include <disres/ratfun.hpp>

#include <string_view>

namespace disres::cli {

/// Parses an expression in one variable into a normalized rational function.
///
/// Grammar: integer literals, the variable, parentheses, unary minus, + - * /
/// and ^ with a literal integer exponent (negative allowed). Juxtaposition
/// before "(" or an identifier multiplies, so "2x(x+1)" is accepted. The
/// Unicode minus sign and middle dot are read as - and *.
///
/// Throws SyntaxError (with byte offset), Error(UnknownVariable) and
/// Error(ZeroDenominator).
RatFun parse_ratfun(std::string_view text, std::string_view var = "x");

}  // namespace disres::cli
