#include "recip/modpoly.hpp"

#include <algorithm>
#include <utility>

namespace recip {

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  if (s >= p || s < a) s -= p;
  return s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw DomainError("inv_mod: not invertible");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

FpPoly reduce_mod_p(const IntPoly& P, std::uint64_t p) {
  FpPoly out;
  out.p = p;
  out.c.reserve(static_cast<size_t>(P.degree() + 1));
  mpz_class pz(static_cast<unsigned long>(p));
  for (int i = 0; i <= P.degree(); ++i) {
    mpz_class r = P.coeff(i) % pz;
    if (r < 0) r += pz;
    out.c.push_back(r.get_ui());
  }
  out.trim();
  return out;
}

FpPoly fp_from(std::uint64_t p, std::vector<std::uint64_t> ascending) {
  FpPoly out;
  out.p = p;
  out.c = std::move(ascending);
  for (auto& v : out.c) v %= p;
  out.trim();
  return out;
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b) {
  FpPoly r;
  r.p = a.p;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = add_mod(r.c[i], b.c[i], r.p);
  r.trim();
  return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b) {
  FpPoly r;
  r.p = a.p;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = sub_mod(r.c[i], b.c[i], r.p);
  r.trim();
  return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
  FpPoly r;
  r.p = a.p;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = add_mod(r.c[i + j], mul_mod(a.c[i], b.c[j], r.p), r.p);
  }
  r.trim();
  return r;
}

FpPoly fp_rem(const FpPoly& a, const FpPoly& m) {
  if (m.is_zero()) throw DomainError("fp_rem: zero modulus");
  FpPoly r = a;
  std::uint64_t inv = inv_mod(m.lc(), m.p);
  int dm = m.degree();
  while (r.degree() >= dm) {
    int k = r.degree();
    std::uint64_t q = mul_mod(r.c.back(), inv, r.p);
    for (int i = 0; i <= dm; ++i) {
      size_t idx = static_cast<size_t>(k - dm + i);
      r.c[idx] = sub_mod(r.c[idx], mul_mod(q, m.c[static_cast<size_t>(i)], r.p), r.p);
    }
    r.trim();
  }
  return r;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m) {
  return fp_rem(fp_mul(a, b), m);
}

FpPoly fp_monic(const FpPoly& a) {
  if (a.is_zero() || a.lc() == 1) return a;
  FpPoly r = a;
  std::uint64_t inv = inv_mod(a.lc(), a.p);
  for (auto& v : r.c) v = mul_mod(v, inv, r.p);
  return r;
}

FpPoly fp_gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = fp_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a);
}

FpPoly fp_derivative(const FpPoly& a) {
  FpPoly r;
  r.p = a.p;
  if (a.c.size() <= 1) return r;
  r.c.resize(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i)
    r.c[i - 1] = mul_mod(a.c[i], i % a.p, a.p);
  r.trim();
  return r;
}

std::uint64_t fp_eval(const FpPoly& a, std::uint64_t x) {
  std::uint64_t acc = 0;
  for (size_t i = a.c.size(); i-- > 0;) acc = add_mod(mul_mod(acc, x, a.p), a.c[i], a.p);
  return acc;
}

FpPoly fp_xpow_mod(const mpz_class& e, const FpPoly& m) {
  FpPoly x = fp_from(m.p, {0, 1});
  return fp_powmod(x, e, m);
}

FpPoly fp_powmod(const FpPoly& a, const mpz_class& e, const FpPoly& m) {
  if (e < 0) throw DomainError("fp_powmod: negative exponent");
  FpPoly base = fp_rem(a, m);
  FpPoly acc = fp_from(m.p, {1});
  size_t nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return acc;
  for (size_t i = nbits; i-- > 0;) {
    acc = fp_mulmod(acc, acc, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = fp_mulmod(acc, base, m);
  }
  return acc;
}

std::vector<std::pair<FpPoly, int>> fp_squarefree(const FpPoly& f0) {
  std::vector<std::pair<FpPoly, int>> out;
  FpPoly f = fp_monic(f0);
  if (f.degree() <= 0) return out;
  const std::uint64_t p = f.p;

  // classic char-p recursion: split off the separable layers, and if the
  // remainder is a p-th power g(x^p), recurse with multiplicities scaled by p
  FpPoly d = fp_derivative(f);
  if (d.is_zero()) {
    FpPoly g;
    g.p = p;
    g.c.resize(static_cast<size_t>(f.degree()) / p + 1, 0);
    for (size_t i = 0; i < g.c.size(); ++i) g.c[i] = f.c[i * p];
    for (auto& [q, m] : fp_squarefree(g)) out.emplace_back(q, m * static_cast<int>(p));
    return out;
  }

  FpPoly c = fp_gcd(f, d);
  // exact division helper (quotient of a by b, remainder known to vanish)
  auto fp_div = [](const FpPoly& a, const FpPoly& b) {
    FpPoly q;
    q.p = a.p;
    FpPoly r = a;
    std::uint64_t inv = inv_mod(b.lc(), b.p);
    int db = b.degree();
    if (r.degree() >= db) q.c.assign(static_cast<size_t>(r.degree() - db) + 1, 0);
    while (r.degree() >= db) {
      int k = r.degree();
      std::uint64_t qc = mul_mod(r.c.back(), inv, r.p);
      q.c[static_cast<size_t>(k - db)] = qc;
      for (int i = 0; i <= db; ++i) {
        size_t idx = static_cast<size_t>(k - db + i);
        r.c[idx] = sub_mod(r.c[idx], mul_mod(qc, b.c[static_cast<size_t>(i)], r.p), r.p);
      }
      r.trim();
    }
    return q;
  };

  FpPoly wpart = fp_div(f, c);  // product of factors with p ∤ multiplicity, each once
  int i = 1;
  while (wpart.degree() > 0) {
    FpPoly y = fp_gcd(wpart, c);
    FpPoly layer = fp_div(wpart, y);  // factors with multiplicity exactly i (p ∤ i)
    if (layer.degree() > 0) out.emplace_back(fp_monic(layer), i);
    wpart = y;
    c = fp_div(c, y);
    ++i;
  }
  // whatever remains of c is a p-th power
  if (c.degree() > 0) {
    FpPoly g;
    g.p = p;
    g.c.resize(static_cast<size_t>(c.degree()) / p + 1, 0);
    for (size_t k = 0; k < g.c.size(); ++k) g.c[k] = c.c[k * p];
    for (auto& [q, m] : fp_squarefree(g)) out.emplace_back(q, m * static_cast<int>(p));
  }
  return out;
}

std::vector<std::pair<int, FpPoly>> fp_distinct_degree(const FpPoly& f0) {
  std::vector<std::pair<int, FpPoly>> out;
  FpPoly f = fp_monic(f0);
  FpPoly x = fp_from(f.p, {0, 1});
  FpPoly h = x;  // x^(p^d) mod f, starting at d = 0
  int d = 0;
  while (f.degree() > 0) {
    ++d;
    if (2 * d > f.degree()) {
      out.emplace_back(f.degree(), f);
      break;
    }
    h = fp_powmod(h, mpz_class(static_cast<unsigned long>(f.p)), f);
    FpPoly g = fp_gcd(fp_sub(h, x), f);
    if (g.degree() > 0) {
      out.emplace_back(d, g);
      // divide f by g and reduce h mod the new f
      FpPoly q;
      {
        FpPoly r = f;
        std::uint64_t inv = inv_mod(g.lc(), g.p);
        int dg = g.degree();
        q.p = f.p;
        q.c.assign(static_cast<size_t>(r.degree() - dg) + 1, 0);
        while (r.degree() >= dg) {
          int k = r.degree();
          std::uint64_t qc = mul_mod(r.c.back(), inv, r.p);
          q.c[static_cast<size_t>(k - dg)] = qc;
          for (int i = 0; i <= dg; ++i) {
            size_t idx = static_cast<size_t>(k - dg + i);
            r.c[idx] = sub_mod(r.c[idx], mul_mod(qc, g.c[static_cast<size_t>(i)], r.p), r.p);
          }
          r.trim();
        }
      }
      f = q;
      h = fp_rem(h, f);
    }
  }
  return out;
}

bool fp_irreducible(const FpPoly& f) {
  int d = f.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  mpz_class p(static_cast<unsigned long>(f.p));
  // x^(p^d) == x mod f, and gcd(x^(p^(d/q)) - x, f) == 1 for prime q | d
  mpz_class pd;
  mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
  FpPoly x = fp_from(f.p, {0, 1});
  FpPoly fr = fp_xpow_mod(pd, f);
  if (!(fp_sub(fr, x).is_zero())) return false;
  for (int q = 2; q <= d; ++q) {
    if (d % q != 0) continue;
    bool isprime = true;
    for (int t = 2; t * t <= q; ++t)
      if (q % t == 0) isprime = false;
    if (!isprime) continue;
    mpz_class e;
    mpz_pow_ui(e.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d / q));
    FpPoly g = fp_gcd(fp_sub(fp_xpow_mod(e, f), x), f);
    if (g.degree() != 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> fp_roots(const FpPoly& f0) {
  std::vector<std::uint64_t> out;
  FpPoly f = fp_monic(f0);
  if (f.is_zero() || f.degree() < 1) return out;
  const std::uint64_t p = f.p;
  if (p <= 257) {  // small fields: direct scan is fastest and simplest
    for (std::uint64_t a = 0; a < p; ++a)
      if (fp_eval(f, a) == 0) out.push_back(a);
    return out;
  }
  // product of the linear factors: gcd(x^p - x, f)
  FpPoly x = fp_from(p, {0, 1});
  FpPoly xp = fp_xpow_mod(mpz_class(static_cast<unsigned long>(p)), f);
  FpPoly lin = fp_gcd(fp_sub(xp, x), f);
  // deterministic split: shift a = 0,1,2,... and peel roots with
  // gcd((x+a)^((p-1)/2) - 1, lin)
  std::vector<FpPoly> stack{lin};
  std::uint64_t shift = 0;
  while (!stack.empty()) {
    FpPoly h = stack.back();
    stack.pop_back();
    if (h.degree() == 0) continue;
    if (h.degree() == 1) {
      out.push_back(sub_mod(0, mul_mod(h.c[0], inv_mod(h.c[1], p), p), p));
      continue;
    }
    FpPoly xa = fp_from(p, {shift++, 1});
    FpPoly t = fp_powmod(xa, mpz_class(static_cast<unsigned long>((p - 1) / 2)), h);
    t = fp_sub(t, fp_from(p, {1}));
    FpPoly g = fp_gcd(t, h);
    if (g.degree() == 0 || g.degree() == h.degree()) {
      stack.push_back(h);  // unlucky shift, try the next one
      continue;
    }
    // h / g and g
    FpPoly q;
    {
      FpPoly r = h;
      std::uint64_t inv = inv_mod(g.lc(), p);
      int dg = g.degree();
      q.p = p;
      q.c.assign(static_cast<size_t>(r.degree() - dg) + 1, 0);
      while (r.degree() >= dg) {
        int k = r.degree();
        std::uint64_t qc = mul_mod(r.c.back(), inv, r.p);
        q.c[static_cast<size_t>(k - dg)] = qc;
        for (int i = 0; i <= dg; ++i) {
          size_t idx = static_cast<size_t>(k - dg + i);
          r.c[idx] = sub_mod(r.c[idx], mul_mod(qc, g.c[static_cast<size_t>(i)], r.p), r.p);
        }
        r.trim();
      }
    }
    stack.push_back(g);
    stack.push_back(q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace recip
