#pragma once

#include "adq/radical.hpp"

#include <memory>
#include <string_view>
#include <variant>

namespace adq {

/// Expression tree produced by the parser.
///
/// Grammar (whitespace insignificant, no implicit multiplication):
///   expr   := ["+"|"-"] term (("+"|"-") term)*
///   term   := factor (("*"|"/") factor)*
///   factor := atom ("^" NAT)?
///   atom   := RATIONAL | LETTER | "(" expr ")" | "sqrt" "(" expr ")"
/// RATIONAL is an unsigned decimal literal (digits, optional fraction
/// digits); "1/2" is division and means the same value. The optional
/// leading sign on expr lets every canonical printout reparse.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { literal, variable, add, sub, mul, div, pow, sqrt };
    Kind kind;
    Rational value;      // literal
    VarId var = '\0';    // variable
    ExprPtr lhs, rhs;    // binary nodes; pow uses lhs + exponent
    unsigned exponent = 0;

    static ExprPtr literal(Rational v);
    static ExprPtr variable(VarId v);
    static ExprPtr binary(Kind k, ExprPtr l, ExprPtr r);
    static ExprPtr power(ExprPtr base, unsigned e);
    static ExprPtr sqrt(ExprPtr arg);
};

/// Recursive-descent parse; ParseError carries 1-based line/column of
/// the first offending token.
ExprPtr parse_expr(std::string_view text);

/// Expand and collect into a canonical quotient of radical sums.
/// Unsupported shapes (nested radicals, more than two distinct
/// radicands on a side) raise UnsupportedError.
RationalForm to_canonical(const ExprPtr& e);

/// Convenience: parse then canonicalize.
RationalForm canonical_form(std::string_view text);

}  // namespace adq
