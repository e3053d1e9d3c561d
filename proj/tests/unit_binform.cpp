// Tuple-count weights on binary forms and monic polynomials over F_p:
// irreducible enumeration, pinned weight values, and the full table-versus-
// single-value cross-check across all four models.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "recip/binform.hpp"
#include "recip/errors.hpp"
#include "recip/modpoly.hpp"
#include "recip/splitting.hpp"

using namespace recip;

namespace {

// factor shapes of total degree <= n (the library's working range)
std::vector<SplittingType> all_shapes(int n) {
  std::vector<SplittingType> out;
  std::vector<FactorShape> partial;
  // enumerate multisets of (f, e) with nondecreasing (f, e) to avoid repeats
  auto rec = [&](auto&& self, int remaining, int min_f, int min_e_at_min_f) -> void {
    if (!partial.empty()) out.push_back(SplittingType::of(partial));
    for (int f = min_f; f <= remaining; ++f) {
      int e_start = f == min_f ? min_e_at_min_f : 1;
      for (int e = e_start; e * f <= remaining; ++e) {
        partial.push_back({f, e});
        self(self, remaining - e * f, f, e);
        partial.pop_back();
      }
    }
  };
  rec(rec, n, 1, 1);
  return out;
}

// marked variants: move one linear part to the front and pin it there
std::vector<SplittingType> marked_variants(const SplittingType& sigma) {
  std::vector<SplittingType> out;
  for (size_t i = 0; i < sigma.parts.size(); ++i) {
    if (sigma.parts[i].f != 1) continue;
    if (i > 0 && sigma.parts[i] == sigma.parts[i - 1]) continue;  // same variant
    SplittingType m;
    m.parts.push_back(sigma.parts[i]);
    for (size_t j = 0; j < sigma.parts.size(); ++j)
      if (j != i) m.parts.push_back(sigma.parts[j]);
    m.marked = MarkAt::plus_two;
    out.push_back(m);
  }
  return out;
}

std::vector<std::uint64_t> decode(std::uint64_t index, std::uint64_t p, int ncoords) {
  std::vector<std::uint64_t> c(static_cast<size_t>(ncoords));
  for (int i = 0; i < ncoords; ++i) {
    c[static_cast<size_t>(i)] = index % p;
    index /= p;
  }
  return c;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST_CASE("monic irreducible enumeration") {
  CHECK(monic_irreducibles(3, 1).size() == 3);
  CHECK(monic_irreducibles(3, 2).size() == 3);
  CHECK(monic_irreducibles(3, 3).size() == 8);
  CHECK(monic_irreducibles(5, 2).size() == 10);
  CHECK(monic_irreducibles(2, 4).size() == 3);
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    for (int f = 1; f <= 3; ++f) {
      auto polys = monic_irreducibles(p, f);
      for (size_t i = 0; i < polys.size(); ++i) {
        CHECK(polys[i].degree() == f);
        CHECK(polys[i].lc() == 1);
        CHECK(fp_irreducible(polys[i]));
        if (i > 0) CHECK(polys[i - 1].c != polys[i].c);
      }
    }
  }
}

TEST_CASE("weight fixtures on binary quadratics mod 3") {
  SplittingType lin_sq = SplittingType::of({{1, 2}});
  SplittingType quad = SplittingType::of({{2, 1}});
  SplittingType two_lin = SplittingType::of({{1, 1}, {1, 1}});

  // x^2 is divisible by exactly one repeated linear form
  CHECK(w_value(3, 2, lin_sq, {0, 0, 1}) == 1);
  // x^2 + y^2 is irreducible mod 3
  CHECK(w_value(3, 2, quad, {1, 0, 1}) == 1);
  CHECK(w_value(3, 2, lin_sq, {1, 0, 1}) == 0);
  // x * y has two distinct linear factors: one unordered tuple
  CHECK(w_value(3, 2, two_lin, {0, 1, 0}) == 1);
  // the zero form is divisible by everything
  for (const SplittingType& sigma : all_shapes(2)) CHECK(w_value(3, 2, sigma, {0, 0, 0}) >= 1);
}

TEST_CASE("pointed weight fixtures") {
  SplittingType marked_sq_lin;  // (1^2 @) (1)
  marked_sq_lin.parts = {{1, 2}, {1, 1}};
  marked_sq_lin.marked = MarkAt::plus_two;

  // y^2 * x carries the frozen y^2 and exactly one monic linear cofactor
  CHECK(w_pointed_value(3, 3, marked_sq_lin, {0, 1, 0, 0}) == 1);
  // y^3 leaves no room for a monic-in-x cofactor
  CHECK(w_pointed_value(3, 3, marked_sq_lin, {1, 0, 0, 0}) == 0);

  // any form not divisible by y has pointed weight zero
  SplittingType marked_lin;
  marked_lin.parts = {{1, 1}};
  marked_lin.marked = MarkAt::plus_two;
  CHECK(w_pointed_value(3, 2, marked_lin, {1, 1, 1}) == 0);
  CHECK(w_pointed_value(3, 2, marked_lin, {1, 1, 0}) == 1);

  // monic model: marked part is the power of x at the origin
  CHECK(w_monic_pointed_value(3, 3, marked_sq_lin, {0, 0, 1}) == 1);  // x^2 (x+1)
  CHECK(w_monic_pointed_value(3, 3, marked_sq_lin, {0, 0, 0}) == 0);  // x^3
}

TEST_CASE("weight shape validation") {
  CHECK_THROWS_AS(w_value(3, 2, SplittingType::of({{3, 1}}), {0, 0, 0}), ShapeError);
  CHECK_THROWS_AS(w_value(3, 2, SplittingType::of({{1, 1}}), {0, 0}), ShapeError);
  // pointed calls insist on a marked linear first part
  CHECK_THROWS_AS(w_pointed_value(3, 2, SplittingType::of({{1, 2}}), {0, 0, 0}), ShapeError);
  CHECK_THROWS_AS(w_monic_pointed_value(3, 2, SplittingType::of({{1, 1}}), {0, 0}), ShapeError);
}

TEST_CASE("tables match single values everywhere") {
  struct Grid {
    std::uint64_t p;
    int n;
  };
  for (const Grid& grid : {Grid{3, 2}, Grid{3, 3}, Grid{5, 2}}) {
    for (const SplittingType& sigma : all_shapes(grid.n)) {
      auto table = w_table(grid.p, grid.n, sigma);
      REQUIRE(table.size() == ipow(grid.p, grid.n + 1));
      for (std::uint64_t i = 0; i < table.size(); ++i)
        CHECK(w_value(grid.p, grid.n, sigma, decode(i, grid.p, grid.n + 1)) == table[i]);

      auto mtable = w_monic_table(grid.p, grid.n, sigma);
      REQUIRE(mtable.size() == ipow(grid.p, grid.n));
      for (std::uint64_t i = 0; i < mtable.size(); ++i)
        CHECK(w_monic_value(grid.p, grid.n, sigma, decode(i, grid.p, grid.n)) == mtable[i]);

      for (const SplittingType& marked : marked_variants(sigma)) {
        auto ptable = w_pointed_table(grid.p, grid.n, marked);
        REQUIRE(ptable.size() == ipow(grid.p, grid.n + 1));
        for (std::uint64_t i = 0; i < ptable.size(); ++i)
          CHECK(w_pointed_value(grid.p, grid.n, marked, decode(i, grid.p, grid.n + 1)) ==
                ptable[i]);

        auto mptable = w_monic_pointed_table(grid.p, grid.n, marked);
        REQUIRE(mptable.size() == ipow(grid.p, grid.n));
        for (std::uint64_t i = 0; i < mptable.size(); ++i)
          CHECK(w_monic_pointed_value(grid.p, grid.n, marked, decode(i, grid.p, grid.n)) ==
                mptable[i]);
      }
    }
  }
}

TEST_CASE("single linear factor weights average to the classical densities") {
  // the projective mean of w over all forms is (p+1)/p; the monic mean is 1
  for (std::uint64_t p : {3ull, 5ull}) {
    for (int n = 2; n <= 3; ++n) {
      SplittingType lin = SplittingType::of({{1, 1}});
      auto table = w_table(p, n, lin);
      std::uint64_t sum = 0;
      for (std::uint64_t v : table) sum += v;
      CHECK(sum == (p + 1) * ipow(p, n));
      auto mtable = w_monic_table(p, n, lin);
      std::uint64_t msum = 0;
      for (std::uint64_t v : mtable) msum += v;
      CHECK(msum == ipow(p, n));
    }
  }
}
