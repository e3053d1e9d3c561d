#ifndef RECIP_HEIGHTS_HPP
#define RECIP_HEIGHTS_HPP

#include "recip/intpoly.hpp"

namespace recip {

// Height data of a nonzero integer polynomial.
//
//   naive       max |a_i|
//   content     gcd of the coefficients
//   projective  height of [a_d : ... : a_0] = naive / content
//   affine      height of (a_d, ..., a_0) as an affine point; for an integer
//               vector this is max(naive, 1) = naive, kept as a separate
//               field because callers of the projective one care about the
//               distinction
//   mahler          |lc| * prod max(1, |root|), numerically
//   mahler_rel_err  certified relative error bound for the mahler field
struct HeightReport {
  mpz_class naive;
  mpz_class content;
  mpq_class projective;
  mpq_class affine;
  double mahler = 0.0;
  double mahler_rel_err = 0.0;
};

HeightReport heights(const IntPoly& P);  // DomainError on the zero polynomial

// Just the Mahler measure (and optionally its relative error bound).
double mahler_measure(const IntPoly& P, double* rel_err = nullptr);

}  // namespace recip

#endif
