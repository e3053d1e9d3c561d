#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "recip/splitting.hpp"

namespace recip {

// Exact element of Q(zeta_p), stored on the power basis 1, zeta, ..., zeta^{p-2}
// (zeta a primitive p-th root of unity, p prime).  zeta^{p-1} is reduced to
// -(1 + zeta + ... + zeta^{p-2}).
struct Cyclotomic {
  std::uint64_t p = 2;
  std::vector<mpq_class> coord;

  static Cyclotomic zero(std::uint64_t p);
  static Cyclotomic from_rational(std::uint64_t p, const mpq_class& v);
  static Cyclotomic root_power(std::uint64_t p, long t);  // zeta^t, reduced

  void add_rotated(const Cyclotomic& x, long t);  // *this += x * zeta^t
  void scale(const mpq_class& c);
  bool is_rational_value() const;
  mpq_class rational_value() const;   // throws DomainError unless rational
  std::complex<double> embed() const;  // at zeta = e^{2 pi i / p}
  bool operator==(const Cyclotomic& o) const;
};

// Exhaustive discrete Fourier transform over (F_p)^ncoords, unnormalized:
// out[g] = sum_F in[F] * zeta^{sign * <F, g>} with <F, g> = sum_i F_i g_i.
// Tables are indexed by sum_i c_i p^i.  The default sign -1 is the forward
// transform; applying it twice returns p^ncoords times the index-negated
// input.
std::vector<Cyclotomic> cyclotomic_dft(std::uint64_t p, int ncoords,
                                       const std::vector<Cyclotomic>& in, int sign = -1);
std::vector<std::complex<double>> numeric_dft(std::uint64_t p, int ncoords,
                                              const std::vector<std::complex<double>>& in,
                                              int sign = -1);

// Full transform of one tuple-count weight.  `values` holds the normalized
// transform (divided by p^ncoords) exactly when the exact budget allows;
// `shadow` is always populated numerically.
struct FourierTable {
  std::uint64_t p = 2;
  int n = 0;
  bool pointed = false;
  bool monic = false;
  int ncoords = 0;
  bool exact = false;
  std::vector<Cyclotomic> values;
  std::vector<std::complex<double>> shadow;
};
FourierTable fourier_full(std::uint64_t p, int n, const SplittingType& sigma, bool pointed,
                          bool monic);

// Membership in the annihilator of the divisibility subspace pinned by a
// marked linear factor of multiplicity e1: duals supported on the top e1
// coordinates (projective model) or the bottom e1 coordinates (monic model).
bool pointed_perp_member(int n, int e1, bool monic, const std::vector<std::uint64_t>& g);

// Decay report for one weight: the exact zero-frequency value against its
// predicted leading term, and the largest transform magnitude outside the
// leading-term support, scaled by the predicted decay power.
struct TransformCheck {
  std::uint64_t p = 2;
  int n = 0;
  int d = 0;  // degree of the factor shape
  int k = 0;  // index of the factor shape
  bool pointed = false;
  bool monic = false;
  std::uint64_t table_sum = 0;
  mpq_class zero_value;      // exact normalized transform at 0
  mpq_class main_term;       // p^{-k}/#Aut, or p^{-(k+1)}/#Aut' when pointed
  double zero_envelope = 0;  // |zero*Aut - p^{-k-j}| * p^{k+j+1}
  double off_exponent = 0;   // decay power e: off-support values are C*p^{-e}
  double max_off_support = 0;
  double envelope_constant = 0;  // max of zero_envelope and max_off * p^e
  bool support_in_subspace = true;  // pointed only: weight vanishes off the
                                    // divisibility subspace
};
TransformCheck transform_check(std::uint64_t p, int n, const SplittingType& sigma, bool pointed,
                               bool monic);

// Sublattices of the degree-<=n integer polynomial lattice cut out by
// derivative congruences at a marked point mod p.
enum class LpCase { full, marked_plus, marked_minus };

struct LatticeDescriptor {
  std::uint64_t p = 2;
  int n = 0;
  int e1 = 0;
  LpCase which = LpCase::full;
  // each row r imposes sum_j r[j] * g_j == 0 (mod p) on g = sum_j g_j u^j
  std::vector<std::vector<std::uint64_t>> congruences;
  int rank = 0;
  mpz_class index;  // p^rank
  std::vector<std::vector<mpz_class>> basis;       // rows form a Z-basis
  std::vector<std::vector<mpq_class>> dual_basis;  // rows dual to `basis`

  bool contains(const std::vector<mpz_class>& g) const;
};
LatticeDescriptor lattice_Lp(std::uint64_t p, LpCase which, int e1, int n);

// Splits the transported weight of an annotated factor shape into a scaled
// lattice indicator plus a remainder with uniformly small transform.
struct LambdaDeltaReport {
  std::uint64_t p = 2;
  int n = 0;
  int j = 0;    // 1 when a linear factor is marked, else 0
  int k = 0;    // index of the shape
  int k_case = 0;  // floor((k + j) / 2), the largest admissible target power
  mpq_class a_p;       // lattice indicator scale, <= 1
  mpq_class a_hat;     // a_p / [V(Z) : L_p], <= p^{-2 k_case}
  LatticeDescriptor lattice;
  double max_delta_hat = 0;   // max |remainder transform| over all duals
  double delta_constant = 0;  // max_delta_hat * p^{2 k_case + 1}
  bool a_p_le_one = false;
  bool a_hat_le_bound = false;
};
LambdaDeltaReport lambda_delta_split(std::uint64_t p, int n, const SplittingType& sigma);

}  // namespace recip
