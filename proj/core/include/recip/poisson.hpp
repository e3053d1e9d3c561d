#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace recip {

// Numeric check of twisted Poisson summation over a finite-index sublattice
// L of Z^dim:  sum_{x in L} Psi(x) Phi(x)  against
// (1 / [Z^dim : L]) * sum_{y in L*} PsiHat(y) PhiHat(y / M),
// where Psi is periodic mod M, M is coprime to the lattice index,
// Phi(x) = exp(-pi |x|^2 / s^2) is a centered Gaussian, and
// PsiHat(y) = M^{-dim} sum over lattice representatives c of L/ML of
// Psi(c) e^{+2 pi i c.y / M}.
struct TwistedPoissonReport {
  int dim = 0;
  mpz_class lattice_index;
  std::uint64_t modulus = 1;
  long double lhs = 0;
  long double rhs = 0;
  long double residual = 0;    // |lhs - rhs|
  long double tail_bound = 0;  // crude bound on the truncated mass
};

// basis: dim rows, each a lattice generator in Z^dim (must be nonsingular).
// psi: table over (Z/M)^dim, flat index sum_i c_i M^i; Psi(x) reads the table
// at x mod M coordinate-wise.
TwistedPoissonReport twisted_poisson_check(int dim, const std::vector<std::vector<long>>& basis,
                                           std::uint64_t M, const std::vector<double>& psi,
                                           double gaussian_width);

}  // namespace recip
