#pragma once

#include <gmpxx.h>

#include <vector>

#include "recip/intpoly.hpp"

namespace recip {

struct RatFactor {
  IntPoly factor;  // primitive, positive leading coefficient, irreducible over Q
  int multiplicity = 1;
};

struct Factorization {
  mpz_class content;  // signed scalar so that content * prod factor^mult == input
  std::vector<RatFactor> factors;
};

// Complete factorization into irreducibles over Q for desk-scale inputs
// (degree <= 14).  Squarefree split is exact; each squarefree part is either
// certified irreducible by a mod-p shape argument or split by reconstructing
// integer factors from conjugation-closed subsets of its complex roots, with
// every candidate confirmed by exact division before it is accepted.
Factorization factor_rational(const IntPoly& f);

// True iff the primitive part of f is irreducible over Q (degree >= 1).
bool is_irreducible_q(const IntPoly& f);

}  // namespace recip
