#pragma once

#include <cstdint>
#include <vector>

#include "recip/modpoly.hpp"
#include "recip/splitting.hpp"

namespace recip {

// All monic irreducible polynomials of degree f over F_p, enumerated in
// coefficient-lexicographic order.  Degree 1 returns all p linear polynomials.
std::vector<FpPoly> monic_irreducibles(std::uint64_t p, int f);

// Tuple-count weights on binary n-ic forms over F_p.
//
// For a factor shape sigma = (f_1^{e_1} ... f_r^{e_r}) of degree d <= n,
// w(F) counts tuples (P_1, ..., P_r) of distinct irreducible binary forms,
// up to shape-preserving permutations, with deg P_i = f_i, each P_i either
// equal to y or monic in x, and P_1^{e_1} ... P_r^{e_r} dividing F.
//
// Forms are encoded by their coefficient vector (c_0, ..., c_n) with
// F = sum_i c_i x^i y^{n-i}; the flat table index is sum_i c_i p^i.

// Full table of w over all p^{n+1} forms.
std::vector<std::uint32_t> w_table(std::uint64_t p, int n, const SplittingType& sigma);

// w at a single form F, given as its n+1 coefficients (each reduced mod p on
// entry).  Matches w_table at the corresponding index.
std::uint32_t w_value(std::uint64_t p, int n, const SplittingType& sigma,
                      const std::vector<std::uint64_t>& F);

// Pointed variant: sigma must be marked with a linear first part; the first
// factor is frozen to y^{e_1} and the remaining P_i are monic in x (never y).
// Tuples count permutations of parts 2..r only.
std::vector<std::uint32_t> w_pointed_table(std::uint64_t p, int n, const SplittingType& sigma);
std::uint32_t w_pointed_value(std::uint64_t p, int n, const SplittingType& sigma,
                              const std::vector<std::uint64_t>& F);

// Monic-model analogues on monic degree-n polynomials over F_p, encoded by
// the n lower coefficients (c_0, ..., c_{n-1}); index is sum_i c_i p^i.
// All P_i are monic irreducibles in x.  In the pointed variant the first
// factor is frozen to x^{e_1} and the remaining P_i must differ from x.
std::vector<std::uint32_t> w_monic_table(std::uint64_t p, int n, const SplittingType& sigma);
std::uint32_t w_monic_value(std::uint64_t p, int n, const SplittingType& sigma,
                            const std::vector<std::uint64_t>& lower_coeffs);
std::vector<std::uint32_t> w_monic_pointed_table(std::uint64_t p, int n,
                                                 const SplittingType& sigma);
std::uint32_t w_monic_pointed_value(std::uint64_t p, int n, const SplittingType& sigma,
                                    const std::vector<std::uint64_t>& lower_coeffs);

}  // namespace recip
