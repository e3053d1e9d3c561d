#ifndef RECIP_ROOTS_HPP
#define RECIP_ROOTS_HPP

#include <complex>
#include <vector>

#include "recip/intpoly.hpp"

namespace recip {

struct RootEstimate {
  std::complex<long double> z;
  long double abs_error;  // conservative absolute error radius
  int multiplicity;
};

// All complex roots of P (degree >= 1).  Multiple roots are handled by
// exact squarefree decomposition first, so every Aberth run sees simple,
// well-separated roots; estimates are Newton-polished in long double.
// Deterministic.  DomainError for degree < 1.
std::vector<RootEstimate> complex_roots(const IntPoly& P);

}  // namespace recip

#endif
