#ifndef RECIP_MODPOLY_HPP
#define RECIP_MODPOLY_HPP

#include <cstdint>
#include <vector>

#include "recip/intpoly.hpp"

namespace recip {

// Univariate polynomials over F_p for word-sized odd or even prime p.
// Coefficients are stored ascending, reduced to [0, p), no trailing zeros.
// These are working guts for splitting types, certificates and character
// sums; arithmetic is schoolbook, which is the right tradeoff at the small
// degrees involved.
struct FpPoly {
  std::uint64_t p = 0;
  std::vector<std::uint64_t> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  std::uint64_t lc() const { return c.back(); }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
};

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);  // DomainError if not invertible

FpPoly reduce_mod_p(const IntPoly& P, std::uint64_t p);
FpPoly fp_from(std::uint64_t p, std::vector<std::uint64_t> ascending);

FpPoly fp_add(const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b);
FpPoly fp_rem(const FpPoly& a, const FpPoly& m);           // m nonzero
FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m);
FpPoly fp_gcd(FpPoly a, FpPoly b);                          // monic or zero
FpPoly fp_monic(const FpPoly& a);
FpPoly fp_derivative(const FpPoly& a);
std::uint64_t fp_eval(const FpPoly& a, std::uint64_t x);

// x^e mod m, with e an arbitrary-precision exponent (used with e ~ p^n).
FpPoly fp_xpow_mod(const mpz_class& e, const FpPoly& m);
// a^e mod m.
FpPoly fp_powmod(const FpPoly& a, const mpz_class& e, const FpPoly& m);

// Char-p squarefree decomposition: f = lc * prod_i out[i].first^(out[i].second)
// with each factor monic squarefree, pairwise coprime; handles f = g(x^p).
std::vector<std::pair<FpPoly, int>> fp_squarefree(const FpPoly& f);

// On monic squarefree input: list of (degree d, product of all irreducible
// factors of degree d), d ascending, skipping trivial entries.
std::vector<std::pair<int, FpPoly>> fp_distinct_degree(const FpPoly& f);

// True iff f is irreducible over F_p (degree >= 1).
bool fp_irreducible(const FpPoly& f);

// All roots in F_p of f (each once, even for repeated roots).  Deterministic.
std::vector<std::uint64_t> fp_roots(const FpPoly& f);

}  // namespace recip

#endif
