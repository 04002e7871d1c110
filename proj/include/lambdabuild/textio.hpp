#pragma once

#include <string>
#include <string_view>

#include "lambdabuild/axioms.hpp"
#include "lambdabuild/lambdaspaces.hpp"
#include "lambdabuild/ordgroup.hpp"
#include "lambdabuild/unipotent.hpp"

namespace lambdabuild {

// series := ["+"|"-"] term (("+"|"-") term)*
// term   := rat | rat "*" mono | mono
// mono   := "X" ("^" ("(" rat ")" | int))?
// rat    := "-"? digits ("/" digits)?
// Blanks between tokens are ignored. All failures raise ParseError.
PuiseuxSeries parse_series(std::string_view text);
Rational parse_rational(std::string_view text);

// "3/2", "z:3", "z3:4/9", "lex:(1,5)"
LambdaValue parse_lambda(std::string_view text);

// JSON array of rows, each a list of series strings (numbers are accepted too).
Mat parse_matrix(std::string_view text);
std::string format_matrix(const Mat& m);

// "(i,j):<series>" with 1-based indices.
RootGroupElement parse_root_group(std::string_view text);

// "(a, b, ...)" or "a,b,..." of rationals.
ApartmentPoint parse_point(std::string_view text);

// "(base, height)" with Z[1/3] literals.
CTPoint parse_ctpoint(std::string_view text);

// "(x, y)" with series coordinates.
HPoint parse_hpoint(std::string_view text);

}  // namespace lambdabuild
