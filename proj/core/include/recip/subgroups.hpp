#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "recip/wreath.hpp"

namespace recip {

// F2-subspace of bitmask vectors of length n, kept as a reduced
// row-echelon basis with pivots in descending bit positions
struct Subspace {
  int n = 0;
  std::vector<std::uint32_t> basis;

  int dim() const { return static_cast<int>(basis.size()); }
  std::uint32_t reduce(std::uint32_t v) const;  // canonical coset representative
  bool contains(std::uint32_t v) const { return reduce(v) == 0; }
  std::vector<std::uint32_t> members() const;

  bool operator==(const Subspace&) const = default;
};

Subspace make_subspace(int n, const std::vector<std::uint32_t>& gens);

// all subspaces of F2^n stable under coordinate permutations, sorted by
// dimension: {0}, the diagonal line, the even-weight hyperplane, everything
// (with the expected collapses at n <= 2); n <= 20
std::vector<Subspace> invariant_subspaces(int n);

enum class SubgroupTag { FULL, G1, G2, G3, SN_PLAIN, SN_TWISTED, EXC_2S4, OTHER };
std::string tag_name(SubgroupTag t);

// conjugacy class of subgroups of F2^n ⋊ S_n that map onto S_n
struct SubgroupClass {
  SubgroupTag tag = SubgroupTag::OTHER;
  long order = 0;
  long index = 0;       // [F2^n ⋊ S_n : H]
  int class_size = 0;   // number of conjugate copies
  std::vector<WreathElement> generators;  // generate the representative member
};

// every conjugacy class of subgroups surjecting onto S_n, via closures of
// (invariant subspace, lift of a transposition, lift of an n-cycle); n <= 4
std::vector<SubgroupClass> overgroup_census(int n);

// the literal member list for a tag's defining predicate (EXC_2S4 only at
// n = 4, taken from the census; OTHER has no defining set)
std::vector<WreathElement> tag_members(SubgroupTag t, int n);

std::vector<WreathElement> close_generators(const std::vector<WreathElement>& gens);

// exact distribution of cycle types of the 2n-point action over a subgroup
std::map<std::vector<int>, mpq_class> cycle_type_distribution(
    const std::vector<WreathElement>& members, int n);

// coefficient modules for 1-cocycles of S_n: X = F2^n with permuted
// coordinates, or its quotients by the diagonal line / even-weight hyperplane
enum class CoeffModule { full, mod_diagonal, mod_diagonal_perp };

struct CocycleCount {
  long z1 = 0;  // cocycles
  long b1 = 0;  // coboundaries
  long h1 = 0;  // classes
};

// counts determined by brute enumeration of generator images plus Cayley-graph
// consistency propagation; 2 <= n <= 5
CocycleCount cocycle_count(int n, CoeffModule m);

}  // namespace recip
