#include "recip/ratfactor.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>

#include "recip/errors.hpp"
#include "recip/intfactor.hpp"
#include "recip/modpoly.hpp"
#include "recip/roots.hpp"

namespace recip {

namespace {

// bitmask of factor degrees achievable mod p (subset sums of the degrees of
// the irreducible factors); nullopt when p is unusable for Q
std::optional<std::uint32_t> modp_degree_mask(const IntPoly& Q, std::uint64_t p) {
  if (mpz_divisible_ui_p(Q.lc().get_mpz_t(), static_cast<unsigned long>(p))) return std::nullopt;
  FpPoly qp = reduce_mod_p(Q, p);
  if (fp_gcd(qp, fp_derivative(qp)).degree() > 0) return std::nullopt;
  std::uint32_t mask = 1;
  for (const auto& [d, prod] : fp_distinct_degree(qp)) {
    int copies = prod.degree() / d;
    for (int i = 0; i < copies; ++i) mask |= mask << d;
  }
  return mask;
}

std::vector<mpz_class> positive_divisors(const mpz_class& v) {
  std::vector<mpz_class> divs{1};
  mpz_class a = abs(v);
  for (const auto& [prime, exp] : factorize(a)) {
    size_t base = divs.size();
    mpz_class pw = 1;
    for (int e = 1; e <= exp; ++e) {
      pw *= prime;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// factor a primitive squarefree positive-lc polynomial of degree >= 1
std::vector<IntPoly> factor_squarefree(const IntPoly& Q) {
  int d = Q.degree();
  if (d <= 1) return {Q};
  if (d > 24) throw ResourceError("root-subset factorization capped at degree 24");

  // shape scan mod small primes: intersect the sets of possible factor degrees
  static const std::uint64_t kPrimes[] = {3,  5,  7,  11, 13, 17, 19,  23,  29,
                                          31, 37, 41, 43, 47, 53, 101, 211, 307};
  std::uint32_t allowed = (d >= 31) ? ~0u : ((2u << d) - 1u);
  int usable = 0;
  for (std::uint64_t p : kPrimes) {
    auto m = modp_degree_mask(Q, p);
    if (!m) continue;
    allowed &= *m;
    ++usable;
    if ((allowed & ~(1u | (1u << d))) == 0) return {Q};  // no proper degree survives
    if (usable >= 5) break;
  }

  // reconstruct candidate integer factors from conjugation-closed root subsets
  std::vector<RootEstimate> roots = complex_roots(Q);
  long double scale = 1.0L;
  for (const auto& r : roots) scale = std::max(scale, std::abs(r.z));

  std::vector<std::vector<int>> blocks;
  std::vector<bool> used(roots.size(), false);
  for (size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    if (std::abs(roots[i].z.imag()) < 1e-9L * scale) {
      blocks.push_back({static_cast<int>(i)});
      continue;
    }
    std::complex<long double> want = std::conj(roots[i].z);
    size_t best = i;
    long double bestd = 1e30L;
    for (size_t j = i + 1; j < roots.size(); ++j) {
      if (used[j]) continue;
      long double dist = std::abs(roots[j].z - want);
      if (dist < bestd) {
        bestd = dist;
        best = j;
      }
    }
    if (best != i) {
      used[best] = true;
      blocks.push_back({static_cast<int>(i), static_cast<int>(best)});
    } else {
      blocks.push_back({static_cast<int>(i)});
    }
  }

  std::vector<std::pair<int, std::uint32_t>> subsets;  // (total degree, block mask)
  int nb = static_cast<int>(blocks.size());
  for (std::uint32_t m = 1; m < (1u << nb); ++m) {
    int k = 0;
    for (int b = 0; b < nb; ++b)
      if (m >> b & 1u) k += static_cast<int>(blocks[static_cast<size_t>(b)].size());
    if (k >= 1 && 2 * k <= d && (allowed >> k & 1u)) subsets.emplace_back(k, m);
  }
  std::sort(subsets.begin(), subsets.end());

  std::vector<mpz_class> lcs = positive_divisors(Q.lc());
  for (const auto& [k, m] : subsets) {
    std::vector<std::complex<long double>> prod{1.0L};
    for (int b = 0; b < nb; ++b) {
      if (!(m >> b & 1u)) continue;
      for (int idx : blocks[static_cast<size_t>(b)]) {
        prod.push_back(0.0L);
        for (size_t j = prod.size() - 1; j > 0; --j)
          prod[j] = prod[j - 1] - roots[static_cast<size_t>(idx)].z * prod[j];
        prod[0] *= -roots[static_cast<size_t>(idx)].z;
      }
    }
    // prod holds ascending coefficients of the monic subset product

    for (const mpz_class& ell : lcs) {
      double lf = mpz_get_d(ell.get_mpz_t());
      std::vector<mpz_class> cand(static_cast<size_t>(k) + 1);
      bool plausible = true;
      for (int j = 0; j <= k && plausible; ++j) {
        long double c = prod[static_cast<size_t>(j)].real() * static_cast<long double>(lf);
        long double im = prod[static_cast<size_t>(j)].imag() * static_cast<long double>(lf);
        long double r = std::roundl(c);
        if (std::abs(im) > 0.25L || std::abs(c - r) > 0.25L || std::abs(r) > 9e17L)
          plausible = false;
        else
          cand[static_cast<size_t>(j)] = mpz_class(static_cast<long>(r));
      }
      if (!plausible) continue;
      IntPoly G = IntPoly(std::move(cand)).primitive_part();
      if (G.degree() != k) continue;
      std::vector<mpq_class> qq;
      if (!divides_q(G, Q, &qq)) continue;
      std::vector<mpz_class> hc;
      bool integral = true;
      for (const mpq_class& q : qq) {
        if (q.get_den() != 1) {
          integral = false;
          break;
        }
        hc.push_back(q.get_num());
      }
      if (!integral) continue;  // cannot happen for primitive G | primitive Q
      IntPoly H{std::move(hc)};
      std::vector<IntPoly> out = factor_squarefree(G);
      for (IntPoly& part : factor_squarefree(H)) out.push_back(std::move(part));
      return out;
    }
  }
  return {Q};
}

}  // namespace

Factorization factor_rational(const IntPoly& f) {
  if (f.is_zero()) throw ShapeError("factoring the zero polynomial");
  Factorization out;
  if (f.degree() == 0) {
    out.content = f.coeff(0);
    return out;
  }
  for (const auto& [part, mult] : squarefree_decomposition(f))
    for (IntPoly& g : factor_squarefree(part)) out.factors.push_back({std::move(g), mult});
  std::sort(out.factors.begin(), out.factors.end(), [](const RatFactor& a, const RatFactor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    if (a.factor.coeffs() != b.factor.coeffs()) return a.factor.coeffs() < b.factor.coeffs();
    return a.multiplicity < b.multiplicity;
  });
  mpz_class denom = 1;
  for (const RatFactor& fac : out.factors)
    for (int i = 0; i < fac.multiplicity; ++i) denom *= fac.factor.lc();
  if (!mpz_divisible_p(f.lc().get_mpz_t(), denom.get_mpz_t()))
    throw DomainError("inconsistent factorization content");
  mpz_class c;
  mpz_divexact(c.get_mpz_t(), f.lc().get_mpz_t(), denom.get_mpz_t());
  out.content = c;
  return out;
}

bool is_irreducible_q(const IntPoly& f) {
  if (f.is_zero()) throw ShapeError("irreducibility of the zero polynomial");
  if (f.degree() < 1) return false;
  Factorization fac = factor_rational(f);
  return fac.factors.size() == 1 && fac.factors.front().multiplicity == 1;
}

}  // namespace recip
