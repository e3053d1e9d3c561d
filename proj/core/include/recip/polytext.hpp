#ifndef RECIP_POLYTEXT_HPP
#define RECIP_POLYTEXT_HPP

#include <string>

#include "recip/intpoly.hpp"

namespace recip {

// Interchange text format for polynomials: comma-separated ascending
// coefficients, so "1,3,1" is 1 + 3x + x^2.  Whitespace around entries is
// ignored; entries are arbitrary-precision signed decimal integers.
// Trailing zero coefficients are legal on input and trimmed on parse.
IntPoly parse_poly(const std::string& text);  // ShapeError on malformed input
std::string format_poly(const IntPoly& p);    // inverse of parse_poly; "0" for zero

}  // namespace recip

#endif
