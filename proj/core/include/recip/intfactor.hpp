#ifndef RECIP_INTFACTOR_HPP
#define RECIP_INTFACTOR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>

#include "recip/errors.hpp"

namespace recip {

struct SieveParams {
  unsigned long trial_bound = 1000000;  // trial-divide by primes below this
  int mr_rounds = 64;                   // Miller-Rabin rounds for primality
  unsigned long rho_budget = 1u << 26;  // Brent-rho iterations before giving up
};

bool is_probable_prime(const mpz_class& n, int mr_rounds = 64);

// Full factorization of |n| as prime -> exponent; DomainError for n = 0.
// ResourceError if a cofactor resists the rho budget (not expected at the
// integer sizes this library works with).
std::map<mpz_class, int> factorize(const mpz_class& n, const SieveParams& params = {});

// For nonzero D: (radical, square_multiple) = (prod_{p | D} p,
// prod_p p^ceil(v_p(D)/2)), both computed from |D| and positive.
struct RadicalPair {
  mpz_class radical;          // C
  mpz_class square_multiple;  // D'; D | D'^2 and D' has the same prime support
};
RadicalPair radical_and_square_multiple(const mpz_class& D, const SieveParams& params = {});

// Signed squarefree part: the unique squarefree s with n = s * m^2.
// squarefree_part(-8) = -2.  DomainError for n = 0.
mpz_class squarefree_part(const mpz_class& n, const SieveParams& params = {});

// Perfect-square test over Z (false for negatives, true for 0).
bool is_square_int(const mpz_class& n);

}  // namespace recip

#endif
