#ifndef RECIP_RECIPROCAL_HPP
#define RECIP_RECIPROCAL_HPP

#include "recip/intpoly.hpp"

namespace recip {

// A reciprocal (palindromic) polynomial f of even degree 2n determines a
// unique g with deg g <= n and f(x) = x^n * g(x + 1/x), and conversely.
// SymPair carries both halves of that correspondence.
struct SymPair {
  IntPoly f;  // palindromic, degree 2n when deg g = n
  IntPoly g;  // the symmetrized polynomial in u = x + 1/x
  int n = 0;  // half-degree parameter (f lives in degree 2n)
};

// True iff coefficients satisfy a_i = a_{d-i} for d = deg f.  The zero
// polynomial counts as reciprocal.
bool is_reciprocal(const IntPoly& f);

// f must be reciprocal of even degree 2n (n inferred from deg f / 2).
// Accepts any palindromic f of even degree; ShapeError otherwise.
SymPair symmetrize(const IntPoly& f);

// Inverse direction: f = x^n * g(x + 1/x) for deg g <= n; ShapeError if
// deg g > n.  The result has degree n + deg g (so exactly 2n iff deg g = n).
SymPair expand(const IntPoly& g, int n);

// (1+x)^(2n) * f((1-x)/(1+x)) for f of even degree 2n.  A polynomial f of
// even degree is reciprocal iff its image here is even (only even powers),
// which downstream code uses as a cross-check.
IntPoly cayley(const IntPoly& f);

}  // namespace recip

#endif
