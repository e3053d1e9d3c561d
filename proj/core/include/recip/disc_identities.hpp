#pragma once

#include <functional>
#include <vector>

#include "recip/intpoly.hpp"
#include "recip/reciprocal.hpp"

namespace recip {

// disc f for a symmetrized pair, computed on the g side:
//   disc f = g(2) * g(-2) * (disc g)^2.
// Exact, and equal to the resultant-based discriminant of the expanded f.
// Requires deg g = n (nonzero leading coefficient of f).
mpz_class disc_f_via_g(const SymPair& pair);

// The "double discriminant" of the coefficient family
//   g(u) = b_n u^n + ... + b_1 u + b_0:
// treat  h(b0) = g(2) * g(-2) * disc_u(g)  as a univariate polynomial in the
// constant coefficient (the remaining b_1..b_n frozen at the given integers)
// and return  R = b_n * disc_{b0}(h).
//
// b holds (b_1, ..., b_n) in that order, n = b.size() >= 2, and b_n must be
// nonzero so that h attains its generic b0-degree n+1 (this makes the
// interpolated polynomial agree with the formal one).
mpz_class double_disc_R(const std::vector<mpz_class>& b);

// Factorization identity for R.  Both sides are evaluated exactly:
//   lhs = b_n * disc_{b0} h
//   rhs = b_n * disc_{b0}(disc_u g)
//             * (g(2) - g(-2))^2
//             * disc_u(g - g(2))^2 * disc_u(g - g(-2))^2
// and the report records whether |lhs| = |rhs| together with the relating
// sign (lhs = sign * rhs; 0 when both vanish).
struct FznRReport {
  bool matches = false;
  int sign = 0;
  mpz_class lhs;
  mpz_class rhs;
};
FznRReport fzn_R_identity_check(const std::vector<mpz_class>& b);

// One instance of the mod-p^2-for-mod-p-reasons derivative criterion.
// h and dh_last are black-box evaluators for a multivariate integer
// polynomial and its partial derivative in the last variable.  The
// hypothesis "h(c + p d) ≡ 0 mod p^2 for all integer d" is probed over the
// zero vector, the unit vectors, and all 2^n sign vectors; the conclusion is
// dh_last(c) ≡ 0 mod p.  p must be an odd prime.
using MultiEval = std::function<mpz_class(const std::vector<mpz_class>&)>;

struct PReasonsReport {
  bool hypothesis_holds = false;
  bool conclusion_holds = false;
  bool implication_holds = false;  // !hypothesis || conclusion
};
PReasonsReport p_reasons_derivative_check(const MultiEval& h,
                                          const MultiEval& dh_last,
                                          const std::vector<mpz_class>& c,
                                          unsigned long p);

}  // namespace recip
