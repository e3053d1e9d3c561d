#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "recip/intpoly.hpp"
#include "recip/modpoly.hpp"

namespace recip {

// One cluster of the factorization of a polynomial (or binary form) over F_p:
// an irreducible factor of degree f occurring with multiplicity e.
struct FactorShape {
  int f = 1;  // residue degree
  int e = 1;  // multiplicity
  friend bool operator==(const FactorShape&, const FactorShape&) = default;
};

// Optional marking of one linear factor pinned at an evaluation point.
enum class MarkAt { none, plus_two, minus_two };

// The multiset of (f, e) factor shapes of a reduction mod p, canonically
// ordered (descending by degree, then multiplicity).  When a marking is
// present, parts[0] is the marked linear cluster (f = 1 by construction) and
// is exempt from the canonical sort.  `degenerate` flags a reduction that
// vanished identically; every numeric accessor refuses to answer for it.
struct SplittingType {
  std::vector<FactorShape> parts;
  MarkAt marked = MarkAt::none;
  bool degenerate = false;

  int degree() const;                  // sum e*f
  int index() const;                   // sum (e-1)*f; DomainError when degenerate
  bool separable() const;              // nonzero reduction, all e == 1
  std::vector<int> cycle_type() const; // descending f's; requires separable()
  std::string str() const;             // e.g. "3 1^2", marked part prefixed "@"

  // builds a canonical unmarked type from (f, e) pairs; for fixtures
  static SplittingType of(std::vector<FactorShape> shapes);

  bool operator==(const SplittingType& o) const;
  bool operator<(const SplittingType& o) const;  // total order for map keys
};

// Factor shapes of P mod p.  With a marking request, the linear factor at
// u = +2 (resp. u = -2) is pinned first when that point is actually a root;
// otherwise the result comes back unmarked.
SplittingType splitting_type_mod_p(const IntPoly& P, std::uint64_t p,
                                   MarkAt mark = MarkAt::none);

// Same, but viewing P as a binary form of the stated degree: coefficients of
// P are the x-coefficients, and any degree drop mod p is a power of the
// second variable, entering the multiset as one linear cluster of that
// multiplicity.
SplittingType form_splitting_type_mod_p(const IntPoly& P, int form_degree,
                                        std::uint64_t p);

// Automorphism count of a shape multiset: each cluster contributes a cyclic
// factor of its degree, and identical (f, e) parts may be permuted.
mpz_class aut_count(const SplittingType& sigma);

// Variant fixing the marked cluster: permutations may only move parts[1..].
// Equals aut_count when nothing is marked.
mpz_class aut_count_pinned(const SplittingType& sigma);

// Check that the index of g mod p is at most the p-adic valuation of disc g.
struct IndexValuationReport {
  enum class Status { ok, violated, skipped } status;
  int index = 0;      // left side (meaningful unless skipped)
  int valuation = 0;  // right side (meaningful unless skipped)
  bool holds() const { return status == Status::ok; }
};

// `skipped` covers the degenerate inputs the inequality does not speak to:
// g vanishing identically mod p, or disc g = 0 (infinite valuation).
IndexValuationReport index_valuation_check(const IntPoly& g, std::uint64_t p);

}  // namespace recip
