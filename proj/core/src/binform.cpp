#include "recip/binform.hpp"

#include <cassert>
#include <functional>
#include <map>

#include "recip/errors.hpp"

namespace recip {

std::vector<FpPoly> monic_irreducibles(std::uint64_t p, int f) {
  if (p < 2) throw ShapeError("modulus must be at least 2");
  if (f < 1) throw ShapeError("irreducible enumeration needs degree >= 1");
  std::uint64_t count = 1;
  for (int i = 0; i < f; ++i) {
    count *= p;
    if (count > 10'000'000ULL) throw ResourceError("irreducible enumeration budget exceeded");
  }
  std::vector<FpPoly> out;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<std::uint64_t> c(static_cast<size_t>(f) + 1, 0);
    std::uint64_t t = idx;
    for (int i = 0; i < f; ++i) {
      c[static_cast<size_t>(i)] = t % p;
      t /= p;
    }
    c[static_cast<size_t>(f)] = 1;
    FpPoly q = fp_from(p, c);
    if (f == 1 || fp_irreducible(q)) out.push_back(std::move(q));
  }
  return out;
}

namespace {

struct TupleClass {
  int f = 0;
  int e = 0;
  int mult = 0;
};

struct PrimeEntry {
  bool is_y = false;
  FpPoly q;
};

void check_sigma(const SplittingType& sigma, int n, bool pointed) {
  if (sigma.degenerate || sigma.parts.empty())
    throw ShapeError("tuple counts need a nondegenerate nonempty type");
  for (const FactorShape& part : sigma.parts)
    if (part.f < 1 || part.e < 1) throw ShapeError("type parts need positive degree and exponent");
  if (sigma.degree() > n) throw ShapeError("factor shape degree exceeds the ambient degree");
  if (pointed) {
    if (sigma.marked == MarkAt::none) throw ShapeError("pointed counts need a marked type");
    if (sigma.parts.front().f != 1) throw ShapeError("the marked part must be linear");
  } else if (sigma.marked != MarkAt::none) {
    throw ShapeError("symmetric counts need an unmarked type");
  }
}

std::vector<TupleClass> classes_of(const SplittingType& sigma, bool skip_first) {
  std::map<std::pair<int, int>, int> tally;
  for (size_t i = skip_first ? 1 : 0; i < sigma.parts.size(); ++i)
    ++tally[{sigma.parts[i].f, sigma.parts[i].e}];
  std::vector<TupleClass> out;
  for (const auto& [key, mult] : tally) out.push_back({key.first, key.second, mult});
  return out;
}

// enumerates every admissible tuple once, tracking the y-exponent and the
// univariate product of the non-y factors
struct Engine {
  std::uint64_t p = 2;
  std::vector<TupleClass> classes;
  std::map<int, std::vector<PrimeEntry>> pool;
  std::map<int, std::vector<char>> used;
  std::function<void(int, const FpPoly&)> leaf;

  void build_pool(bool include_y, bool exclude_x) {
    for (const TupleClass& cls : classes) {
      if (pool.count(cls.f)) continue;
      std::vector<PrimeEntry>& entries = pool[cls.f];
      if (cls.f == 1 && include_y) entries.push_back({true, FpPoly{}});
      for (FpPoly& q : monic_irreducibles(p, cls.f)) {
        if (exclude_x && cls.f == 1 && q.c[0] == 0) continue;
        entries.push_back({false, std::move(q)});
      }
      used[cls.f].assign(entries.size(), 0);
    }
  }

  void run(int base_y, const FpPoly& base_h) { rec_class(0, base_y, base_h); }

  void rec_class(size_t ci, int yval, const FpPoly& h) {
    if (ci == classes.size()) {
      leaf(yval, h);
      return;
    }
    choose(ci, 0, classes[ci].mult, yval, h);
  }

  void choose(size_t ci, size_t j0, int left, int yval, const FpPoly& h) {
    if (left == 0) {
      rec_class(ci + 1, yval, h);
      return;
    }
    const TupleClass& cls = classes[ci];
    std::vector<PrimeEntry>& pl = pool[cls.f];
    std::vector<char>& us = used[cls.f];
    for (size_t j = j0; j + static_cast<size_t>(left) <= pl.size(); ++j) {
      if (us[j]) continue;
      us[j] = 1;
      if (pl[j].is_y) {
        choose(ci, j + 1, left - 1, yval + cls.e, h);
      } else {
        FpPoly h2 = h;
        for (int t = 0; t < cls.e; ++t) h2 = fp_mul(h2, pl[j].q);
        choose(ci, j + 1, left - 1, yval, h2);
      }
      us[j] = 0;
    }
  }
};

std::vector<std::uint64_t> p_powers(std::uint64_t p, int upto) {
  std::vector<std::uint64_t> pw(static_cast<size_t>(upto) + 1, 1);
  for (int i = 1; i <= upto; ++i) pw[static_cast<size_t>(i)] = pw[static_cast<size_t>(i - 1)] * p;
  return pw;
}

std::uint64_t checked_size(std::uint64_t p, int exponent) {
  std::uint64_t total = 1;
  for (int i = 0; i < exponent; ++i) {
    total *= p;
    if (total > 10'000'000ULL) throw ResourceError("transform table budget of 10^7 exceeded");
  }
  return total;
}

Engine make_engine(std::uint64_t p, const SplittingType& sigma, bool pointed, bool monic) {
  Engine eng;
  eng.p = p;
  eng.classes = classes_of(sigma, pointed);
  eng.build_pool(/*include_y=*/!monic && !pointed, /*exclude_x=*/monic && pointed);
  return eng;
}

// Accumulates every degree-n multiple of the tuple product y^yv * Hom(h).
// The cofactors are the p^{n-d+1} binary forms of degree n-d (zero included),
// so the tuple contributes once to each of its multiples and once to F = 0.
void sweep_projective_multiples(std::uint64_t p, int n, int yv, const FpPoly& h,
                                const std::vector<std::uint64_t>& pw,
                                std::vector<std::uint32_t>& w) {
  int dh = h.degree() < 0 ? 0 : h.degree();
  int d = yv + dh;
  assert(d <= n);
  int m = n - d;  // cofactor degree
  std::uint64_t cof_total = 1;
  for (int i = 0; i <= m; ++i) cof_total *= p;
  std::vector<std::uint64_t> g(static_cast<size_t>(m) + 1, 0);
  std::vector<std::uint64_t> conv(static_cast<size_t>(n - yv) + 1, 0);
  for (std::uint64_t gi = 0; gi < cof_total; ++gi) {
    std::uint64_t t = gi;
    for (int i = 0; i <= m; ++i) {
      g[static_cast<size_t>(i)] = t % p;
      t /= p;
    }
    // multiply Hom(h) (coefficients h.c, x-degree dh) by the cofactor
    std::fill(conv.begin(), conv.end(), 0);
    for (int i = 0; i <= dh; ++i) {
      std::uint64_t hi = h.c[static_cast<size_t>(i)];
      if (hi == 0) continue;
      for (int j = 0; j <= m; ++j)
        conv[static_cast<size_t>(i + j)] =
            (conv[static_cast<size_t>(i + j)] + mul_mod(hi, g[static_cast<size_t>(j)], p)) % p;
    }
    // the leading y^yv just caps the x-degree at n - yv
    std::uint64_t idx = 0;
    for (int i = 0; i <= n - yv; ++i) idx += conv[static_cast<size_t>(i)] * pw[static_cast<size_t>(i)];
    ++w[idx];
  }
}

// Accumulates every monic degree-n multiple of the monic tuple product h:
// the cofactors are the p^{n-d} monic polynomials of degree n-d.
void sweep_monic_multiples(std::uint64_t p, int n, const FpPoly& h,
                           const std::vector<std::uint64_t>& pw, std::vector<std::uint32_t>& w) {
  int d = h.degree();
  assert(d >= 0 && d <= n);
  int m = n - d;
  std::uint64_t cof_total = 1;
  for (int i = 0; i < m; ++i) cof_total *= p;
  std::vector<std::uint64_t> g(static_cast<size_t>(m) + 1, 0);
  g[static_cast<size_t>(m)] = 1;
  for (std::uint64_t gi = 0; gi < cof_total; ++gi) {
    std::uint64_t t = gi;
    for (int i = 0; i < m; ++i) {
      g[static_cast<size_t>(i)] = t % p;
      t /= p;
    }
    FpPoly prod = fp_mul(h, fp_from(p, g));
    assert(prod.degree() == n);
    std::uint64_t idx = 0;
    for (int i = 0; i < n; ++i) idx += prod.c[static_cast<size_t>(i)] * pw[static_cast<size_t>(i)];
    ++w[idx];
  }
}

std::vector<std::uint32_t> projective_table(std::uint64_t p, int n, const SplittingType& sigma,
                                            bool pointed) {
  check_sigma(sigma, n, pointed);
  std::uint64_t total = checked_size(p, n + 1);
  std::vector<std::uint64_t> pw = p_powers(p, n);
  std::vector<std::uint32_t> w(total, 0);
  Engine eng = make_engine(p, sigma, pointed, false);
  eng.leaf = [&](int yv, const FpPoly& h) { sweep_projective_multiples(p, n, yv, h, pw, w); };
  eng.run(pointed ? sigma.parts.front().e : 0, fp_from(p, {1}));
  return w;
}

std::vector<std::uint32_t> monic_table(std::uint64_t p, int n, const SplittingType& sigma,
                                       bool pointed) {
  check_sigma(sigma, n, pointed);
  std::uint64_t total = checked_size(p, n);
  std::vector<std::uint64_t> pw = p_powers(p, n);
  std::vector<std::uint32_t> w(total, 0);
  Engine eng = make_engine(p, sigma, pointed, true);
  eng.leaf = [&](int, const FpPoly& h) { sweep_monic_multiples(p, n, h, pw, w); };
  FpPoly base = fp_from(p, {1});
  if (pointed) {
    FpPoly x = fp_from(p, {0, 1});
    for (int t = 0; t < sigma.parts.front().e; ++t) base = fp_mul(base, x);
  }
  eng.run(0, base);
  return w;
}

std::uint32_t projective_value(std::uint64_t p, int n, const SplittingType& sigma, bool pointed,
                               const std::vector<std::uint64_t>& F) {
  check_sigma(sigma, n, pointed);
  if (F.size() != static_cast<size_t>(n) + 1)
    throw ShapeError("form coefficient vector must have length n + 1");
  std::vector<std::uint64_t> Fr(F);
  for (std::uint64_t& v : Fr) v %= p;
  int mF = -1;
  for (int i = 0; i <= n; ++i)
    if (Fr[static_cast<size_t>(i)] != 0) mF = i;

  std::uint32_t count = 0;
  Engine eng = make_engine(p, sigma, pointed, false);
  // F = y^{n-mF} * Hom(Fx) with Fx of degree mF; the tuple product divides F
  // exactly when its y-exponent fits and its monic part divides Fx.  Keep the
  // captures alive until run() below.
  int vyF = n - mF;
  FpPoly Fx;
  if (mF < 0) {
    eng.leaf = [&](int, const FpPoly&) { ++count; };  // everything divides zero
  } else {
    Fx = fp_from(p, std::vector<std::uint64_t>(Fr.begin(), Fr.begin() + mF + 1));
    eng.leaf = [&](int yv, const FpPoly& h) {
      if (yv > vyF) return;
      if (!fp_rem(Fx, h).is_zero()) return;
      ++count;
    };
  }
  eng.run(pointed ? sigma.parts.front().e : 0, fp_from(p, {1}));
  return count;
}

std::uint32_t monic_value(std::uint64_t p, int n, const SplittingType& sigma, bool pointed,
                          const std::vector<std::uint64_t>& lower) {
  check_sigma(sigma, n, pointed);
  if (lower.size() != static_cast<size_t>(n))
    throw ShapeError("monic encoding needs exactly the n lower coefficients");
  std::vector<std::uint64_t> Fc(lower);
  for (std::uint64_t& v : Fc) v %= p;
  Fc.push_back(1);
  FpPoly F = fp_from(p, Fc);

  std::uint32_t count = 0;
  Engine eng = make_engine(p, sigma, pointed, true);
  eng.leaf = [&](int, const FpPoly& h) {
    if (fp_rem(F, h).is_zero()) ++count;
  };
  FpPoly base = fp_from(p, {1});
  if (pointed) {
    FpPoly x = fp_from(p, {0, 1});
    for (int t = 0; t < sigma.parts.front().e; ++t) base = fp_mul(base, x);
  }
  eng.run(0, base);
  return count;
}

}  // namespace

std::vector<std::uint32_t> w_table(std::uint64_t p, int n, const SplittingType& sigma) {
  return projective_table(p, n, sigma, false);
}

std::vector<std::uint32_t> w_pointed_table(std::uint64_t p, int n, const SplittingType& sigma) {
  return projective_table(p, n, sigma, true);
}

std::uint32_t w_value(std::uint64_t p, int n, const SplittingType& sigma,
                      const std::vector<std::uint64_t>& F) {
  return projective_value(p, n, sigma, false, F);
}

std::uint32_t w_pointed_value(std::uint64_t p, int n, const SplittingType& sigma,
                              const std::vector<std::uint64_t>& F) {
  return projective_value(p, n, sigma, true, F);
}

std::vector<std::uint32_t> w_monic_table(std::uint64_t p, int n, const SplittingType& sigma) {
  return monic_table(p, n, sigma, false);
}

std::vector<std::uint32_t> w_monic_pointed_table(std::uint64_t p, int n,
                                                 const SplittingType& sigma) {
  return monic_table(p, n, sigma, true);
}

std::uint32_t w_monic_value(std::uint64_t p, int n, const SplittingType& sigma,
                            const std::vector<std::uint64_t>& lower_coeffs) {
  return monic_value(p, n, sigma, false, lower_coeffs);
}

std::uint32_t w_monic_pointed_value(std::uint64_t p, int n, const SplittingType& sigma,
                                    const std::vector<std::uint64_t>& lower_coeffs) {
  return monic_value(p, n, sigma, true, lower_coeffs);
}

}  // namespace recip
