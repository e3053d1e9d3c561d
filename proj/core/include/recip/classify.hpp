#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "recip/intpoly.hpp"
#include "recip/reciprocal.hpp"
#include "recip/subgroups.hpp"

namespace recip {

enum class CertStatus { certified, refuted, undetermined };
enum class TriFlag { yes, no, not_applicable, undetermined };

std::string cert_name(CertStatus s);
std::string tri_name(TriFlag s);

// does sqrt(disc f) lie in Q, i.e. does the even-flip subgroup contain the
// Galois group?  Exact: tests whether g(2)*g(-2) is a perfect square.
bool g1_flag(const SymPair& pair);

// the twisted analogue: tests whether g(2)*g(-2)*disc(g) is a perfect square
bool g2_flag(const SymPair& pair);

// budgeted certificate that the trace polynomial has full symmetric Galois
// group: exact rational irreducibility plus witnessed cycle patterns mod
// primes (an n-cycle, a q-cycle for a per-degree prime q, a transposition);
// `prime_budget` bounds how many usable primes are examined
CertStatus sn_certificate(const IntPoly& g, long prime_budget);

// whether k*(beta^2 - 4) is a square in Q[u]/(g), k the squarefree part of
// g(2)*g(-2); only meaningful at odd n (even n reports not_applicable).
// Mod-p quadratic-residue witnesses refute; confirmation runs an inert-prime
// square root, Hensel doubling, and rational reconstruction, verified
// exactly; lift_limit bounds the doubling steps
TriFlag g3_flag(const SymPair& pair, int lift_limit);

bool reducibility_flag(const IntPoly& f);  // true iff f splits over Q

struct FingerprintReport {
  std::map<std::vector<int>, mpq_class> empirical;  // splitting type -> frequency
  long samples = 0;
  SubgroupTag best_tag = SubgroupTag::OTHER;
  double tv_distance = 0.0;
  std::vector<std::pair<SubgroupTag, double>> distances;  // census order
};

// empirical Frobenius statistics of f against the exact cycle-type
// distributions of the candidate subgroup classes (ties favor the larger
// group); n <= 4 uses the full census, n in {5,6} the named classes
FingerprintReport frobenius_fingerprint(const IntPoly& f, long prime_budget);

struct ClassifyBudgets {
  long cert_primes = 1000;
  int g3_lift_limit = 10;
  long fingerprint_primes = 0;  // 0 skips the fingerprint
};

struct GaloisFlags {
  int n = 0;
  bool separable = false;
  bool g_irreducible = false;
  CertStatus gg_full_sn = CertStatus::undetermined;
  bool in_g1 = false;
  bool in_g2 = false;
  TriFlag in_g3 = TriFlag::not_applicable;
  bool reducible_f = false;
  std::optional<FingerprintReport> fingerprint;
};

// whole pipeline for one reciprocal polynomial; throws SeparabilityError
// when disc f = 0 (the flags are only defined for separable inputs)
GaloisFlags classify(const IntPoly& f, const ClassifyBudgets& budgets);

}  // namespace recip
