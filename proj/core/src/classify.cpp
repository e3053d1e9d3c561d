#include "recip/classify.hpp"

#include <algorithm>
#include <utility>

#include "recip/errors.hpp"
#include "recip/intfactor.hpp"
#include "recip/modpoly.hpp"
#include "recip/ratfactor.hpp"
#include "recip/splitting.hpp"

namespace recip {

std::string cert_name(CertStatus s) {
  switch (s) {
    case CertStatus::certified: return "certified";
    case CertStatus::refuted: return "refuted";
    case CertStatus::undetermined: return "undetermined";
  }
  return "undetermined";
}

std::string tri_name(TriFlag s) {
  switch (s) {
    case TriFlag::yes: return "yes";
    case TriFlag::no: return "no";
    case TriFlag::not_applicable: return "not_applicable";
    case TriFlag::undetermined: return "undetermined";
  }
  return "undetermined";
}

namespace {

void require_separable(const SymPair& pair, mpz_class* g2, mpz_class* gm2, mpz_class* dg) {
  const IntPoly& g = pair.g;
  if (g.degree() != pair.n) throw ShapeError("trace polynomial degree does not match n");
  *g2 = g.eval(2);
  *gm2 = g.eval(-2);
  *dg = g.degree() >= 1 ? discriminant(g) : mpz_class(1);
  if (*g2 == 0 || *gm2 == 0 || *dg == 0)
    throw SeparabilityError("flags are undefined when disc f vanishes");
}

std::uint64_t next_prime_u64(std::uint64_t p) {
  mpz_class z = p;
  mpz_nextprime(z.get_mpz_t(), z.get_mpz_t());
  return mpz_get_ui(z.get_mpz_t());
}

bool div_by(const mpz_class& v, std::uint64_t p) {
  return mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
}

}  // namespace

bool g1_flag(const SymPair& pair) {
  mpz_class g2, gm2, dg;
  require_separable(pair, &g2, &gm2, &dg);
  return is_square_int(g2 * gm2);
}

bool g2_flag(const SymPair& pair) {
  mpz_class g2, gm2, dg;
  require_separable(pair, &g2, &gm2, &dg);
  return is_square_int(g2 * gm2 * dg);
}

namespace {

// cycle-pattern witnesses: a power of the witnessed element is exactly the
// permutation shape the certificate needs
bool clean_cycle(const std::vector<int>& type, int q) {
  int hits = 0;
  for (int part : type) {
    if (part == q)
      ++hits;
    else if (part % q == 0)
      return false;
  }
  return hits == 1;
}

int certificate_q(int n) {
  if (n <= 5) return 3;
  if (n <= 7) return 5;
  for (int q = n - 3; 2 * q > n; --q) {
    if (is_probable_prime(mpz_class(q))) return q;
  }
  return 0;
}

}  // namespace

CertStatus sn_certificate(const IntPoly& g, long prime_budget) {
  int n = g.degree();
  if (n < 1) throw ShapeError("certificate needs a nonconstant polynomial");
  mpz_class dg = discriminant(g);
  if (dg == 0) return CertStatus::refuted;
  if (n == 1) return CertStatus::certified;
  if (n == 2) return is_square_int(dg) ? CertStatus::refuted : CertStatus::certified;
  if (!is_irreducible_q(g)) return CertStatus::refuted;

  int q = certificate_q(n);
  if (q == 0) return CertStatus::undetermined;
  bool want_ncycle = n >= 4, have_ncycle = false;
  bool want_qcycle = n >= 4, have_qcycle = false;
  bool have_transposition = false;

  std::uint64_t p = 2;
  for (long used = 0; used < prime_budget; p = next_prime_u64(p)) {
    if (div_by(dg, p) || div_by(g.lc(), p)) continue;
    ++used;
    std::vector<int> type = splitting_type_mod_p(g, p).cycle_type();
    if (type.size() == 1 && type.front() == n) have_ncycle = true;
    if (clean_cycle(type, q)) have_qcycle = true;
    if (clean_cycle(type, 2)) have_transposition = true;
    if ((have_ncycle || !want_ncycle) && (have_qcycle || !want_qcycle) && have_transposition)
      return CertStatus::certified;
  }
  return CertStatus::undetermined;
}

bool reducibility_flag(const IntPoly& f) {
  if (f.degree() < 1) throw ShapeError("reducibility needs a nonconstant polynomial");
  return !is_irreducible_q(f);
}

namespace {

// arithmetic in (Z/M)[u] modulo a monic integer polynomial
using ZV = std::vector<mpz_class>;

ZV zv_mul_reduce(const ZV& a, const ZV& b, const std::vector<mpz_class>& ghat,
                 const mpz_class& M) {
  int n = static_cast<int>(ghat.size()) - 1;
  std::vector<mpz_class> prod(static_cast<size_t>(2 * n - 1), mpz_class(0));
  for (int i = 0; i < n; ++i) {
    if (a[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < n; ++j)
      prod[static_cast<size_t>(i + j)] += a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
  }
  for (int i = 2 * n - 2; i >= n; --i) {
    if (prod[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < n; ++j)
      prod[static_cast<size_t>(i - n + j)] -= prod[static_cast<size_t>(i)] * ghat[static_cast<size_t>(j)];
    prod[static_cast<size_t>(i)] = 0;
  }
  ZV out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    mpz_mod(out[static_cast<size_t>(i)].get_mpz_t(), prod[static_cast<size_t>(i)].get_mpz_t(),
            M.get_mpz_t());
  return out;
}

ZV zv_scalar(const ZV& a, const mpz_class& s, const mpz_class& M) {
  ZV out(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    mpz_mod(out[i].get_mpz_t(), mpz_class(a[i] * s).get_mpz_t(), M.get_mpz_t());
  return out;
}

// quotient and remainder over F_p
std::pair<FpPoly, FpPoly> fp_divmod_local(const FpPoly& a, const FpPoly& b) {
  std::uint64_t p = a.p;
  FpPoly r = a;
  FpPoly q;
  q.p = p;
  if (r.degree() >= b.degree())
    q.c.assign(static_cast<size_t>(r.degree() - b.degree() + 1), 0);
  std::uint64_t binv = inv_mod(b.lc(), p);
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    std::uint64_t cf = mul_mod(r.lc(), binv, p);
    q.c[static_cast<size_t>(shift)] = add_mod(q.c[static_cast<size_t>(shift)], cf, p);
    for (int i = 0; i <= b.degree(); ++i)
      r.c[static_cast<size_t>(shift + i)] =
          sub_mod(r.c[static_cast<size_t>(shift + i)], mul_mod(cf, b.c[static_cast<size_t>(i)], p), p);
    r.trim();
  }
  q.trim();
  return {q, r};
}

FpPoly fp_inv_mod_poly(const FpPoly& a, const FpPoly& mod) {
  std::uint64_t p = mod.p;
  FpPoly r0 = mod, r1 = fp_rem(a, mod);
  FpPoly t0 = fp_from(p, {}), t1 = fp_from(p, {1});
  while (!r1.is_zero()) {
    auto [q, r2] = fp_divmod_local(r0, r1);
    FpPoly t2 = fp_sub(t0, fp_mul(q, t1));
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (r0.degree() != 0) throw DomainError("element not invertible modulo the given polynomial");
  std::uint64_t scale = inv_mod(r0.c[0], p);
  FpPoly out = t0;
  for (auto& v : out.c) v = mul_mod(v, scale, p);
  out.trim();
  return out;
}

// Square root of a known residue in F_p[u]/(m), q = p^deg(m).  Fast exponent
// when q == 3 mod 4, Tonelli-Shanks otherwise; for odd extension degree a
// constant nonresidue mod p stays a nonresidue in the extension, so the
// nonresidue search never leaves the prime field.  Returns zero on the
// (unreachable after an Euler check) nonsquare input.
FpPoly fp_field_sqrt(const FpPoly& a, const FpPoly& m, const mpz_class& q) {
  if (mpz_fdiv_ui(q.get_mpz_t(), 4) == 3) return fp_powmod(a, (q + 1) / 4, m);
  const std::uint64_t p = m.p;
  std::uint64_t zc = 2;
  while (pow_mod(zc, (p - 1) / 2, p) != p - 1) ++zc;
  mpz_class odd = q - 1;
  unsigned long s = mpz_scan1(odd.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(odd.get_mpz_t(), odd.get_mpz_t(), s);
  FpPoly c = fp_powmod(fp_from(p, {zc}), odd, m);
  FpPoly t = fp_powmod(a, odd, m);
  FpPoly r = fp_powmod(a, (odd + 1) / 2, m);
  auto is_one = [](const FpPoly& x) { return x.degree() == 0 && x.c[0] == 1; };
  unsigned long M = s;
  while (!is_one(t)) {
    FpPoly t2 = t;
    unsigned long i = 0;
    while (!is_one(t2)) {
      t2 = fp_mulmod(t2, t2, m);
      if (++i == M) return FpPoly{};
    }
    FpPoly b = c;
    for (unsigned long j = 0; j + i + 1 < M; ++j) b = fp_mulmod(b, b, m);
    M = i;
    c = fp_mulmod(b, b, m);
    t = fp_mulmod(t, c, m);
    r = fp_mulmod(r, b, m);
  }
  return r;
}

bool rational_reconstruct(const mpz_class& c, const mpz_class& M, mpq_class* out) {
  mpz_class bound;
  mpz_class half = M / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = M, r1 = c, s0 = 0, s1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (s1 == 0) return false;
  mpz_class num = r1, den = s1;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (cmp(den, bound) > 0) return false;
  mpz_class gg;
  mpz_gcd(gg.get_mpz_t(), den.get_mpz_t(), M.get_mpz_t());
  if (gg != 1) return false;
  mpq_class v(num);
  v /= mpq_class(den);
  *out = v;
  return true;
}

// gamma^2 == k*(u^2 - 4*bn^2) in Q[u]/(ghat), checked with exact arithmetic
bool exact_square_check(const std::vector<mpq_class>& gamma, const IntPoly& ghat,
                        const mpz_class& k, const mpz_class& bn) {
  int n = ghat.degree();
  std::vector<mpq_class> prod(static_cast<size_t>(2 * n - 1), mpq_class(0));
  for (int i = 0; i < n; ++i) {
    if (gamma[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < n; ++j)
      prod[static_cast<size_t>(i + j)] += gamma[static_cast<size_t>(i)] * gamma[static_cast<size_t>(j)];
  }
  for (int i = 2 * n - 2; i >= n; --i) {
    if (prod[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < n; ++j)
      prod[static_cast<size_t>(i - n + j)] -=
          prod[static_cast<size_t>(i)] * mpq_class(ghat.coeff(j));
    prod[static_cast<size_t>(i)] = 0;
  }
  for (int i = 0; i < n; ++i) {
    mpq_class want(0);
    if (i == 2) want = mpq_class(k);
    if (i == 0) want = mpq_class(-4 * k * bn * bn);
    if (prod[static_cast<size_t>(i)] != want) return false;
  }
  return true;
}

}  // namespace

TriFlag g3_flag(const SymPair& pair, int lift_limit) {
  int n = pair.n;
  if (n % 2 == 0) return TriFlag::not_applicable;
  mpz_class g2, gm2, dg;
  require_separable(pair, &g2, &gm2, &dg);
  const IntPoly& g = pair.g;
  mpz_class bn = g.lc();
  mpz_class k = squarefree_part(g2 * gm2);

  if (n == 1) {
    // the field is Q itself: beta = -b0/b1, and k*(beta^2 - 4) is a square
    // in Q iff the integer k*(b0^2 - 4*b1^2) is a perfect square
    mpz_class val = k * (g.coeff(0) * g.coeff(0) - 4 * bn * bn);
    return is_square_int(val) ? TriFlag::yes : TriFlag::no;
  }

  // monic model: ghat(u) = bn^(n-1) g(u/bn), beta scaled by bn, so the
  // question becomes whether k*(u^2 - 4*bn^2) is a square mod ghat
  std::vector<mpz_class> gh(static_cast<size_t>(n) + 1);
  gh[static_cast<size_t>(n)] = 1;
  mpz_class pw = 1;  // bn^(n-1-i) for the coefficient of u^i
  for (int i = n - 1; i >= 0; --i) {
    gh[static_cast<size_t>(i)] = g.coeff(i) * pw;
    pw *= bn;
  }
  IntPoly ghat{std::vector<mpz_class>(gh)};
  mpz_class dghat = discriminant(ghat);
  mpz_class bn2_4 = 4 * bn * bn;

  // residue witnesses: at a degree-one prime with root r, a global square
  // forces k*(r^2 - 4*bn^2) to be a quadratic residue
  std::uint64_t p = 2;
  int informative = 0;
  for (long scanned = 0; informative < 20 && scanned < 300; ++scanned) {
    p = next_prime_u64(p);
    if (div_by(2 * k * dghat, p)) continue;
    FpPoly gp = reduce_mod_p(ghat, p);
    std::vector<std::uint64_t> roots = fp_roots(gp);
    if (roots.empty()) continue;
    ++informative;
    std::uint64_t kp = mpz_fdiv_ui(k.get_mpz_t(), p);
    std::uint64_t c4 = mpz_fdiv_ui(bn2_4.get_mpz_t(), p);
    for (std::uint64_t r : roots) {
      std::uint64_t val = mul_mod(kp, sub_mod(mul_mod(r, r, p), c4, p), p);
      if (val == 0) continue;
      if (pow_mod(val, (p - 1) / 2, p) != 1) return TriFlag::no;
    }
  }

  // exact confirmation: square root in an inert residue field, Hensel
  // doubling, rational reconstruction, exact verification.  Any inert prime
  // will do: when disc(ghat) is minus a square every inert prime is 1 mod 4,
  // so the residue-field square root must not insist on the 3-mod-4 shortcut.
  std::uint64_t inert = 0;
  p = 2;
  for (long scanned = 0; scanned < 2000; ++scanned) {
    p = next_prime_u64(p);
    if (div_by(2 * k * dghat, p)) continue;
    FpPoly gp = reduce_mod_p(ghat, p);
    if (fp_irreducible(gp)) {
      inert = p;
      break;
    }
  }
  if (inert == 0) return TriFlag::undetermined;

  FpPoly gp = reduce_mod_p(ghat, inert);
  IntPoly target{{-bn2_4 * k, mpz_class(0), k}};
  FpPoly ap = reduce_mod_p(target, inert);
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(inert), static_cast<unsigned long>(n));
  FpPoly euler = fp_powmod(ap, (q - 1) / 2, gp);
  if (!(euler.degree() == 0 && euler.c[0] == 1)) return TriFlag::no;
  FpPoly gamma0 = fp_field_sqrt(ap, gp, q);
  if (gamma0.is_zero()) return TriFlag::undetermined;
  FpPoly x0 = fp_inv_mod_poly(gamma0, gp);

  ZV x(static_cast<size_t>(n), mpz_class(0));
  for (int i = 0; i <= x0.degree(); ++i) x[static_cast<size_t>(i)] = x0.c[static_cast<size_t>(i)];
  mpz_class M(static_cast<unsigned long>(inert));
  std::vector<mpz_class> ghz(gh.begin(), gh.end());

  for (int level = 1; level <= lift_limit; ++level) {
    M = M * M;
    ZV a(static_cast<size_t>(n), mpz_class(0));
    mpz_mod(a[0].get_mpz_t(), mpz_class(-bn2_4 * k).get_mpz_t(), M.get_mpz_t());
    mpz_mod(a[2].get_mpz_t(), k.get_mpz_t(), M.get_mpz_t());

    // Newton step for the inverse square root: x <- x (3 - a x^2) / 2
    ZV t = zv_mul_reduce(x, x, ghz, M);
    t = zv_mul_reduce(t, a, ghz, M);
    ZV u(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      mpz_class v = -t[static_cast<size_t>(i)];
      if (i == 0) v += 3;
      mpz_mod(u[static_cast<size_t>(i)].get_mpz_t(), v.get_mpz_t(), M.get_mpz_t());
    }
    x = zv_mul_reduce(x, u, ghz, M);
    x = zv_scalar(x, (M + 1) / 2, M);

    ZV gamma = zv_mul_reduce(a, x, ghz, M);
    ZV check = zv_mul_reduce(gamma, gamma, ghz, M);
    if (check != a) return TriFlag::undetermined;  // lift went off the rails

    std::vector<mpq_class> cand(static_cast<size_t>(n));
    bool all = true;
    for (int i = 0; i < n && all; ++i)
      all = rational_reconstruct(gamma[static_cast<size_t>(i)], M, &cand[static_cast<size_t>(i)]);
    if (all && exact_square_check(cand, ghat, k, bn)) return TriFlag::yes;
  }
  return TriFlag::undetermined;
}

FingerprintReport frobenius_fingerprint(const IntPoly& f, long prime_budget) {
  if (prime_budget < 1) throw ShapeError("fingerprint needs a positive prime budget");
  SymPair pair = symmetrize(f);
  int n = pair.n;
  if (n < 1) throw ShapeError("fingerprint needs degree >= 2");
  if (n > 6) throw ResourceError("fingerprint distributions capped at n = 6");
  mpz_class df = discriminant(f);
  if (df == 0) throw SeparabilityError("fingerprint of an inseparable polynomial");

  struct Candidate {
    SubgroupTag tag;
    long order;
    std::map<std::vector<int>, mpq_class> dist;
  };
  std::vector<Candidate> candidates;
  if (n <= 4) {
    for (const SubgroupClass& cls : overgroup_census(n)) {
      std::vector<WreathElement> members = close_generators(cls.generators);
      candidates.push_back({cls.tag, cls.order, cycle_type_distribution(members, n)});
    }
  } else {
    for (SubgroupTag t : {SubgroupTag::FULL, SubgroupTag::G1, SubgroupTag::G2, SubgroupTag::G3,
                          SubgroupTag::SN_PLAIN, SubgroupTag::SN_TWISTED}) {
      std::vector<WreathElement> members = tag_members(t, n);
      candidates.push_back(
          {t, static_cast<long>(members.size()), cycle_type_distribution(members, n)});
    }
  }

  FingerprintReport report;
  std::map<std::vector<int>, long> counts;
  std::uint64_t p = 1;
  for (long used = 0; used < prime_budget;) {
    p = next_prime_u64(p);
    if (div_by(df, p) || div_by(f.lc(), p)) continue;
    ++used;
    ++counts[splitting_type_mod_p(f, p).cycle_type()];
  }
  long samples = 0;
  for (const auto& [type, c] : counts) samples += c;
  report.samples = samples;
  for (const auto& [type, c] : counts) {
    mpq_class freq(c, samples);
    freq.canonicalize();
    report.empirical.emplace(type, freq);
  }

  mpq_class best_tv(-1);
  long best_order = 0;
  for (const Candidate& cand : candidates) {
    mpq_class tv(0);
    std::map<std::vector<int>, mpq_class> merged = cand.dist;
    for (const auto& [type, freq] : report.empirical) merged.emplace(type, mpq_class(0));
    for (const auto& [type, exact] : merged) {
      auto it = report.empirical.find(type);
      mpq_class emp = it == report.empirical.end() ? mpq_class(0) : it->second;
      mpq_class d = emp - (cand.dist.count(type) ? cand.dist.at(type) : mpq_class(0));
      tv += abs(d);
    }
    tv /= 2;
    report.distances.emplace_back(cand.tag, tv.get_d());
    if (best_tv < 0 || tv < best_tv || (tv == best_tv && cand.order > best_order)) {
      best_tv = tv;
      best_order = cand.order;
      report.best_tag = cand.tag;
      report.tv_distance = tv.get_d();
    }
  }
  return report;
}

GaloisFlags classify(const IntPoly& f, const ClassifyBudgets& budgets) {
  SymPair pair = symmetrize(f);
  GaloisFlags out;
  out.n = pair.n;
  mpz_class g2, gm2, dg;
  require_separable(pair, &g2, &gm2, &dg);  // throws when disc f = 0
  out.separable = true;
  out.g_irreducible = is_irreducible_q(pair.g);
  out.gg_full_sn = sn_certificate(pair.g, budgets.cert_primes);
  out.in_g1 = g1_flag(pair);
  out.in_g2 = g2_flag(pair);
  out.in_g3 = g3_flag(pair, budgets.g3_lift_limit);
  out.reducible_f = reducibility_flag(f);
  if (budgets.fingerprint_primes > 0)
    out.fingerprint = frobenius_fingerprint(f, budgets.fingerprint_primes);
  return out;
}

}  // namespace recip
