// The signed-permutation layer: wreath elements, the two point embeddings,
// stable subspaces, the overgroup census with its brute-force cross-check,
// cycle type distributions, and 1-cocycle counts.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "recip/errors.hpp"
#include "recip/rng.hpp"
#include "recip/subgroups.hpp"
#include "recip/wreath.hpp"

using namespace recip;

namespace {

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Perm random_perm(Rng& rng, int n) {
  Perm p = Perm::identity(n);
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng.uniform(0, i));
    std::swap(p.img[static_cast<size_t>(i)], p.img[static_cast<size_t>(j)]);
  }
  return p;
}

WreathElement random_element(Rng& rng, int n) {
  std::uint32_t v = static_cast<std::uint32_t>(rng.uniform(0, (1 << n) - 1));
  return WreathElement{v, random_perm(rng, n)};
}

// The full group as an indexed list with multiplication and conjugation
// tables, so subgroups become uint64_t bitmasks (supports n <= 3: 48 <= 64).
struct BruteGroup {
  int n = 0;
  std::vector<WreathElement> elems;
  std::map<WreathElement, int> index_of;
  std::vector<std::vector<int>> mult;
  std::vector<std::vector<int>> conj;
  int id_idx = 0;

  explicit BruteGroup(int nn) : n(nn) {
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    do {
      Perm s;
      s.img = img;
      for (std::uint32_t v = 0; v < (1u << n); ++v) elems.push_back({v, s});
    } while (std::next_permutation(img.begin(), img.end()));
    std::sort(elems.begin(), elems.end());
    for (size_t i = 0; i < elems.size(); ++i) index_of[elems[i]] = static_cast<int>(i);
    const int N = size();
    mult.assign(static_cast<size_t>(N), std::vector<int>(static_cast<size_t>(N)));
    conj.assign(static_cast<size_t>(N), std::vector<int>(static_cast<size_t>(N)));
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        auto gi = static_cast<size_t>(i), gj = static_cast<size_t>(j);
        mult[gi][gj] = index_of.at(multiply(elems[gi], elems[gj]));
        conj[gi][gj] =
            index_of.at(multiply(multiply(elems[gi], elems[gj]), inverse(elems[gi])));
      }
    id_idx = index_of.at(wreath_identity(n));
  }

  int size() const { return static_cast<int>(elems.size()); }

  std::uint64_t close(std::uint64_t m) const {
    m |= 1ull << id_idx;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int i = 0; i < size(); ++i) {
        if (!(m >> i & 1)) continue;
        for (int j = 0; j < size(); ++j) {
          if (!(m >> j & 1)) continue;
          int k = mult[static_cast<size_t>(i)][static_cast<size_t>(j)];
          if (!(m >> k & 1)) {
            m |= 1ull << k;
            grew = true;
          }
        }
      }
    }
    return m;
  }

  std::uint64_t conjugate_mask(int g, std::uint64_t m) const {
    std::uint64_t out = 0;
    for (int x = 0; x < size(); ++x)
      if (m >> x & 1) out |= 1ull << conj[static_cast<size_t>(g)][static_cast<size_t>(x)];
    return out;
  }

  bool surjective(std::uint64_t m) const {
    std::set<std::vector<int>> sigmas;
    for (int x = 0; x < size(); ++x)
      if (m >> x & 1) sigmas.insert(elems[static_cast<size_t>(x)].sigma.img);
    return static_cast<long>(sigmas.size()) == factorial(n);
  }

  // every subgroup, found by closing each known subgroup joined with each
  // outside element until nothing new appears (independent of the census's
  // lift-based construction)
  std::set<std::uint64_t> all_subgroups() const {
    std::set<std::uint64_t> subs;
    std::vector<std::uint64_t> work;
    std::uint64_t triv = close(0);
    subs.insert(triv);
    work.push_back(triv);
    while (!work.empty()) {
      std::uint64_t s = work.back();
      work.pop_back();
      for (int g = 0; g < size(); ++g) {
        if (s >> g & 1) continue;
        std::uint64_t c = close(s | (1ull << g));
        if (subs.insert(c).second) work.push_back(c);
      }
    }
    return subs;
  }
};

std::vector<std::uint32_t> vector_part(const std::vector<WreathElement>& members) {
  std::vector<std::uint32_t> a;
  for (const auto& e : members)
    if (e.sigma.is_identity()) a.push_back(e.v);
  std::sort(a.begin(), a.end());
  return a;
}

}  // namespace

TEST_CASE("permutation basics") {
  CHECK(Perm::identity(3).is_identity());
  CHECK(Perm::transposition(3, 0, 1).img == std::vector<int>{1, 0, 2});
  CHECK(Perm::full_cycle(3).img == std::vector<int>{1, 2, 0});
  CHECK(Perm::full_cycle(3).str() == "1,2,0");
  // compose applies the argument first
  Perm r = Perm::transposition(3, 0, 1).compose(Perm::full_cycle(3));
  CHECK(r.img == std::vector<int>{0, 2, 1});
  CHECK(Perm::full_cycle(3).inverse().img == std::vector<int>{2, 0, 1});
  CHECK(Perm::transposition(4, 1, 2).sign() == -1);
  CHECK(Perm::full_cycle(3).sign() == 1);
  CHECK(Perm::full_cycle(4).sign() == -1);
  CHECK(Perm::full_cycle(4).cycle_type() == std::vector<int>{4});
  CHECK(Perm::transposition(4, 1, 2).cycle_type() == std::vector<int>{2, 1, 1});
  CHECK(Perm::identity(3).cycle_type() == std::vector<int>{1, 1, 1});
}

TEST_CASE("wreath product law fixtures") {
  Perm id2 = Perm::identity(2);
  Perm tau = Perm::transposition(2, 0, 1);
  WreathElement a{0b01, id2};
  WreathElement aa = multiply(a, a);
  CHECK(aa == wreath_identity(2));

  WreathElement b{0b01, tau};
  WreathElement bb = multiply(b, b);
  CHECK(bb.v == 0b11);
  CHECK(bb.sigma.is_identity());

  WreathElement binv = inverse(b);
  CHECK(binv.v == 0b10);
  CHECK(multiply(b, binv) == wreath_identity(2));
  CHECK(multiply(binv, b) == wreath_identity(2));
}

TEST_CASE("wreath group axioms on random elements") {
  Rng rng(301);
  for (int trial = 0; trial < 300; ++trial) {
    int n = static_cast<int>(rng.uniform(1, 4));
    WreathElement a = random_element(rng, n);
    WreathElement b = random_element(rng, n);
    WreathElement c = random_element(rng, n);
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    CHECK(multiply(a, wreath_identity(n)) == a);
    CHECK(multiply(wreath_identity(n), a) == a);
    CHECK(multiply(a, inverse(a)) == wreath_identity(n));
    // the vector action composes the same way the permutations do
    std::uint32_t v = static_cast<std::uint32_t>(rng.uniform(0, (1 << n) - 1));
    CHECK(perm_act(a.sigma.compose(b.sigma), v) == perm_act(a.sigma, perm_act(b.sigma, v)));
  }
  // moving bit 0 through a full cycle lands on bit 1
  CHECK(perm_act(Perm::full_cycle(3), 0b001) == 0b010);
}

TEST_CASE("pair embedding fixtures") {
  Perm id2 = Perm::identity(2);
  Perm tau = Perm::transposition(2, 0, 1);
  CHECK(embed_2n({0b01, id2}).img == std::vector<int>{1, 0, 2, 3});
  CHECK(embed_2n({0b00, tau}).img == std::vector<int>{2, 3, 0, 1});
  CHECK(embed_2n({0b01, tau}).img == std::vector<int>{2, 3, 1, 0});
  CHECK(embed_3n({0b01, tau}).img == std::vector<int>{2, 3, 1, 0, 5, 4});
  CHECK(embed_3n({0b01, id2}).img == std::vector<int>{1, 0, 2, 3, 4, 5});
}

TEST_CASE("embedding sign laws hold exhaustively") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    do {
      Perm s;
      s.img = img;
      for (std::uint32_t v = 0; v < (1u << n); ++v) {
        WreathElement e{v, s};
        int s2 = embed_2n(e).sign();
        CHECK(s2 == (popcount_bits(v) % 2 == 0 ? 1 : -1));
        CHECK(embed_3n(e).sign() == s2 * s.sign());
      }
    } while (std::next_permutation(img.begin(), img.end()));
  }
}

TEST_CASE("embeddings are homomorphisms") {
  Rng rng(302);
  for (int trial = 0; trial < 300; ++trial) {
    int n = static_cast<int>(rng.uniform(1, 4));
    WreathElement a = random_element(rng, n);
    WreathElement b = random_element(rng, n);
    WreathElement ab = multiply(a, b);
    CHECK(embed_2n(ab).img == embed_2n(a).compose(embed_2n(b)).img);
    CHECK(embed_3n(ab).img == embed_3n(a).compose(embed_3n(b)).img);
  }
}

TEST_CASE("pair embedding is injective") {
  for (int n = 1; n <= 3; ++n) {
    BruteGroup G(n);
    std::set<std::vector<int>> images;
    for (const auto& e : G.elems) images.insert(embed_2n(e).img);
    CHECK(static_cast<int>(images.size()) == G.size());
  }
}

TEST_CASE("subspace reduction basics") {
  Subspace s = make_subspace(3, {0b011, 0b110});
  CHECK(s.dim() == 2);
  CHECK(s.contains(0b101));
  CHECK_FALSE(s.contains(0b111));
  CHECK(s.members().size() == 4);
  CHECK(s.reduce(0b011) == 0);
  CHECK(s.reduce(0b111) == s.reduce(0b100));
  CHECK(make_subspace(4, {}).dim() == 0);
}

TEST_CASE("permutation-stable subspaces") {
  CHECK(invariant_subspaces(1).size() == 2);
  CHECK(invariant_subspaces(2).size() == 3);
  auto inv3 = invariant_subspaces(3);
  std::vector<int> dims3;
  for (const auto& s : inv3) dims3.push_back(s.dim());
  CHECK(dims3 == std::vector<int>{0, 1, 2, 3});
  auto inv4 = invariant_subspaces(4);
  std::vector<int> dims4;
  for (const auto& s : inv4) dims4.push_back(s.dim());
  CHECK(dims4 == std::vector<int>{0, 1, 3, 4});
  // at even n the diagonal line sits inside the even-weight hyperplane
  CHECK(inv4[2].contains(0b1111));

  // brute oracle: spans of every subset of nonzero vectors, kept when stable
  // under a transposition and the full cycle (which generate all of S_n)
  for (int n = 2; n <= 4; ++n) {
    Perm t = Perm::transposition(n, 0, 1);
    Perm c = Perm::full_cycle(n);
    std::set<std::vector<std::uint32_t>> brute;
    int m = (1 << n) - 1;
    for (std::uint32_t sub = 0; sub < (1u << m); ++sub) {
      std::vector<std::uint32_t> gens;
      for (int b = 0; b < m; ++b)
        if (sub >> b & 1) gens.push_back(static_cast<std::uint32_t>(b) + 1);
      Subspace sp = make_subspace(n, gens);
      bool stable = true;
      for (std::uint32_t v : sp.members())
        if (!sp.contains(perm_act(t, v)) || !sp.contains(perm_act(c, v))) stable = false;
      if (stable) {
        auto mem = sp.members();
        std::sort(mem.begin(), mem.end());
        brute.insert(mem);
      }
    }
    auto inv = invariant_subspaces(n);
    CHECK(brute.size() == inv.size());
    for (const auto& s : inv) {
      auto mem = s.members();
      std::sort(mem.begin(), mem.end());
      CHECK(brute.count(mem) == 1);
    }
  }
}

TEST_CASE("overgroup census counts, orders and closures") {
  auto orders = [](int n) {
    std::vector<long> o;
    for (const auto& c : overgroup_census(n)) o.push_back(c.order);
    std::sort(o.begin(), o.end());
    return o;
  };
  CHECK(orders(1) == std::vector<long>{1, 2});
  CHECK(orders(2) == std::vector<long>{2, 4, 4, 8});
  CHECK(orders(3) == std::vector<long>{6, 6, 12, 24, 24, 48});
  CHECK(orders(4) == std::vector<long>{24, 24, 48, 48, 192, 192, 384});

  for (int n = 1; n <= 4; ++n) {
    long total = (1l << n) * factorial(n);
    for (const auto& cls : overgroup_census(n)) {
      CHECK(cls.order * cls.index == total);
      CHECK(cls.class_size >= 1);
      auto members = close_generators(cls.generators);
      CHECK(static_cast<long>(members.size()) == cls.order);
      std::set<std::string> sigmas;
      for (const auto& e : members) sigmas.insert(e.sigma.str());
      CHECK(static_cast<long>(sigmas.size()) == factorial(n));
    }
  }
}

TEST_CASE("census tags") {
  auto tags = [](int n) {
    std::multiset<std::string> t;
    for (const auto& c : overgroup_census(n)) t.insert(tag_name(c.tag));
    return t;
  };
  CHECK(tags(2) == std::multiset<std::string>{"FULL", "G1", "G2", "SN_PLAIN"});
  CHECK(tags(3) ==
        std::multiset<std::string>{"FULL", "G1", "G2", "G3", "SN_PLAIN", "SN_TWISTED"});
  CHECK(tags(4) == std::multiset<std::string>{"EXC_2S4", "FULL", "G1", "G2", "G3",
                                              "SN_PLAIN", "SN_TWISTED"});
}

TEST_CASE("defining member sets") {
  CHECK(tag_members(SubgroupTag::FULL, 3).size() == 48);
  CHECK(tag_members(SubgroupTag::G1, 3).size() == 24);
  CHECK(tag_members(SubgroupTag::G2, 3).size() == 24);
  CHECK(tag_members(SubgroupTag::G3, 3).size() == 12);
  CHECK(tag_members(SubgroupTag::SN_PLAIN, 3).size() == 6);
  CHECK(tag_members(SubgroupTag::SN_TWISTED, 3).size() == 6);
  // each defining set is already a group
  for (SubgroupTag t : {SubgroupTag::G1, SubgroupTag::G2, SubgroupTag::G3,
                        SubgroupTag::SN_TWISTED}) {
    auto mem = tag_members(t, 3);
    CHECK(close_generators(mem).size() == mem.size());
  }
  // the two even-vector tags collapse onto each other at n = 2
  auto g1 = tag_members(SubgroupTag::G1, 2);
  auto g3 = tag_members(SubgroupTag::G3, 2);
  std::sort(g1.begin(), g1.end());
  std::sort(g3.begin(), g3.end());
  CHECK(g1 == g3);
}

TEST_CASE("exceptional class sits inside the twisted-sign kernel") {
  auto mem = tag_members(SubgroupTag::EXC_2S4, 4);
  CHECK(mem.size() == 48);
  for (const auto& e : mem) CHECK(embed_3n(e).sign() == 1);
  // vector part is exactly the diagonal line
  CHECK(vector_part(mem) == std::vector<std::uint32_t>{0, 15});
  // yet some element carries an off-diagonal vector, so this is not the
  // plain product of the diagonal with a copy of the permutations
  bool off_diagonal = false;
  for (const auto& e : mem)
    if (e.v != 0 && e.v != 15) off_diagonal = true;
  CHECK(off_diagonal);
  CHECK_THROWS_AS(tag_members(SubgroupTag::EXC_2S4, 3), ShapeError);
}

TEST_CASE("census matches a brute-force subgroup crawl") {
  for (int n : {2, 3}) {
    BruteGroup G(n);
    auto subs = G.all_subgroups();
    // the crawl found the two extremes
    CHECK(subs.count(G.close(0)) == 1);
    std::uint64_t full = 0;
    for (int i = 0; i < G.size(); ++i) full |= 1ull << i;
    CHECK(subs.count(full) == 1);

    // conjugacy classes of the subgroups that hit every permutation
    std::map<std::uint64_t, std::pair<long, int>> classes;
    for (std::uint64_t m : subs) {
      if (!G.surjective(m)) continue;
      std::set<std::uint64_t> orbit;
      for (int g = 0; g < G.size(); ++g) orbit.insert(G.conjugate_mask(g, m));
      classes[*orbit.begin()] = {std::popcount(m), static_cast<int>(orbit.size())};
    }

    auto census = overgroup_census(n);
    CHECK(classes.size() == census.size());
    std::set<std::uint64_t> seen;
    for (const auto& cls : census) {
      auto members = close_generators(cls.generators);
      std::uint64_t m = 0;
      for (const auto& e : members) m |= 1ull << G.index_of.at(e);
      CHECK(G.close(m) == m);
      std::set<std::uint64_t> orbit;
      for (int g = 0; g < G.size(); ++g) orbit.insert(G.conjugate_mask(g, m));
      std::uint64_t canon = *orbit.begin();
      REQUIRE(classes.count(canon) == 1);
      CHECK(classes[canon].first == cls.order);
      CHECK(classes[canon].second == cls.class_size);
      CHECK(seen.insert(canon).second);
    }
    CHECK(seen.size() == classes.size());
  }
}

TEST_CASE("cycle type distributions") {
  auto full2 = cycle_type_distribution(tag_members(SubgroupTag::FULL, 2), 2);
  CHECK(full2.at({1, 1, 1, 1}) == mpq_class(1, 8));
  CHECK(full2.at({2, 1, 1}) == mpq_class(1, 4));
  CHECK(full2.at({2, 2}) == mpq_class(3, 8));
  CHECK(full2.at({4}) == mpq_class(1, 4));
  mpq_class total = 0;
  for (const auto& [type, mass] : full2) total += mass;
  CHECK(total == 1);

  auto g1 = cycle_type_distribution(tag_members(SubgroupTag::G1, 2), 2);
  CHECK(g1.at({1, 1, 1, 1}) == mpq_class(1, 4));
  CHECK(g1.at({2, 2}) == mpq_class(3, 4));
  for (const auto& [type, mass] : g1) {
    (void)mass;
    int transpositions = 0;
    for (int len : type) transpositions += len - 1;
    CHECK(transpositions % 2 == 0);  // even-sign types only
  }

  auto g3 = cycle_type_distribution(tag_members(SubgroupTag::G3, 3), 3);
  CHECK(g3.at({2, 2, 2}) == mpq_class(1, 3));
  mpq_class g3total = 0;
  for (const auto& [type, mass] : g3) g3total += mass;
  CHECK(g3total == 1);
}

TEST_CASE("cocycle counts") {
  struct Row {
    int n;
    CoeffModule m;
    long z1, b1, h1;
  };
  const Row table[] = {
      {2, CoeffModule::full, 2, 2, 1},
      {3, CoeffModule::full, 8, 4, 2},
      {4, CoeffModule::full, 16, 8, 2},
      {2, CoeffModule::mod_diagonal, 2, 1, 2},
      {3, CoeffModule::mod_diagonal, 4, 4, 1},
      {4, CoeffModule::mod_diagonal, 16, 8, 2},
      {2, CoeffModule::mod_diagonal_perp, 2, 1, 2},
      {3, CoeffModule::mod_diagonal_perp, 2, 1, 2},
      {4, CoeffModule::mod_diagonal_perp, 2, 1, 2},
  };
  for (const Row& row : table) {
    CocycleCount c = cocycle_count(row.n, row.m);
    CAPTURE(row.n);
    CHECK(c.z1 == row.z1);
    CHECK(c.b1 == row.b1);
    CHECK(c.h1 == row.h1);
    CHECK(c.h1 * c.b1 == c.z1);
  }
}

TEST_CASE("census classes partition by their vector-part intersection") {
  // grouping the census classes by H ∩ F2^n must reproduce the cocycle class
  // counts of the corresponding quotient module, one subspace at a time
  for (int n = 2; n <= 4; ++n) {
    std::map<std::vector<std::uint32_t>, long> tally;
    for (const auto& cls : overgroup_census(n))
      tally[vector_part(close_generators(cls.generators))]++;
    auto inv = invariant_subspaces(n);
    CHECK(tally.size() == inv.size());
    for (const auto& sub : inv) {
      auto mem = sub.members();
      std::sort(mem.begin(), mem.end());
      long expected = 0;
      if (sub.dim() == n)
        expected = 1;  // only the full group meets the vectors in everything
      else if (sub.dim() == 0)
        expected = cocycle_count(n, CoeffModule::full).h1;
      else if (sub.dim() == n - 1)
        expected = cocycle_count(n, CoeffModule::mod_diagonal_perp).h1;
      else
        expected = cocycle_count(n, CoeffModule::mod_diagonal).h1;
      CHECK(tally[mem] == expected);
    }
  }
}
