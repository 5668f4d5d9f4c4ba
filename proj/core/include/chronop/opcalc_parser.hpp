// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

#include "chronop/opcalc.hpp"

namespace chronop::opcalc {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses the expression grammar used by the command line tool and the
/// test suites. Whitespace-insensitive.
///
///   expr    :=  ['-'] term (('+'|'-') term)*
///   term    :=  factor (('*'|'/') factor)*      '/' divides by a scalar
///   factor  :=  rational | 'i' | ident | '(' expr ')'
///             | '[' expr ',' expr ']'           commutator sugar
///             | '{' expr ',' expr '}'           anticommutator sugar
///   rational:=  digits ['/' digits]
///
/// Identifiers are the generator names (t, x1, p1, p0, alpha1, alpha2,
/// alpha3, beta, theta1, T, H) plus "unit" for the identity operator.
/// The result is unnormalized; commutator/anticommutator sugar expands
/// to a*b -+ b*a verbatim.
///
/// Throws ParseError on malformed input, UnknownGenerator on an
/// unrecognized identifier.
OperatorExpression parse_expression(const std::string& text);

}  // namespace chronop::opcalc
