#include "recip/intfactor.hpp"

#include <vector>

namespace recip {

namespace {

const std::vector<unsigned long>& small_primes(unsigned long bound) {
  static std::vector<unsigned long> primes;
  static unsigned long sieved_to = 0;
  if (bound > sieved_to) {
    primes.clear();
    std::vector<bool> comp(bound + 1, false);
    for (unsigned long i = 2; i <= bound; ++i) {
      if (comp[i]) continue;
      primes.push_back(i);
      for (unsigned long j = i * i; j <= bound; j += i) comp[j] = true;
    }
    sieved_to = bound;
  }
  return primes;
}

// Brent's cycle variant of Pollard rho with batched gcds.  Returns a
// nontrivial factor of composite odd n, or 0 if the budget ran out.
mpz_class brent_rho(const mpz_class& n, unsigned long budget) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1; c < 64; ++c) {
    mpz_class y = 2, r = 1, q = 1, g = 1, x, ys;
    unsigned long spent = 0;
    while (g == 1 && spent < budget) {
      x = y;
      for (mpz_class i = 0; i < r; ++i) y = (y * y + c) % n;
      mpz_class k = 0;
      while (k < r && g == 1) {
        ys = y;
        unsigned long m = 128;
        for (unsigned long i = 0; i < m && k + static_cast<long>(i) < r; ++i) {
          y = (y * y + c) % n;
          mpz_class d = x - y;
          if (d < 0) d = -d;
          q = q * d % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
        spent += m;
      }
      r *= 2;
    }
    if (g == n) {
      // backtrack one step at a time
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        mpz_class d = x - ys;
        if (d < 0) d = -d;
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (g != 1 && g != n) return g;
    // retry with a different polynomial increment
  }
  return 0;
}

void factor_recursive(const mpz_class& n, const SieveParams& params,
                      std::map<mpz_class, int>& out) {
  if (n == 1) return;
  if (is_probable_prime(n, params.mr_rounds)) {
    out[n] += 1;
    return;
  }
  // perfect powers shrink the problem and help rho
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
      mpz_class root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        std::map<mpz_class, int> sub;
        factor_recursive(root, params, sub);
        for (auto& [p, e] : sub) out[p] += e * static_cast<int>(k);
        return;
      }
    }
  }
  mpz_class d = brent_rho(n, params.rho_budget);
  if (d == 0) throw ResourceError("factorize: rho budget exhausted on " + n.get_str());
  factor_recursive(d, params, out);
  factor_recursive(n / d, params, out);
}

}  // namespace

bool is_probable_prime(const mpz_class& n, int mr_rounds) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), mr_rounds) != 0;
}

std::map<mpz_class, int> factorize(const mpz_class& n, const SieveParams& params) {
  if (n == 0) throw DomainError("factorize(0)");
  std::map<mpz_class, int> out;
  mpz_class m = abs(n);
  if (m == 1) return out;
  for (unsigned long p : small_primes(params.trial_bound)) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      int e = 0;
      do {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
      } while (mpz_divisible_ui_p(m.get_mpz_t(), p));
      out[mpz_class(p)] = e;
    }
    if (m == 1) return out;
    if (mpz_class(p) * p > m) break;  // remaining cofactor is prime
  }
  factor_recursive(m, params, out);
  return out;
}

RadicalPair radical_and_square_multiple(const mpz_class& D, const SieveParams& params) {
  if (D == 0) throw DomainError("radical_and_square_multiple(0)");
  RadicalPair r{1, 1};
  for (const auto& [p, e] : factorize(D, params)) {
    r.radical *= p;
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>((e + 1) / 2));
    r.square_multiple *= pe;
  }
  return r;
}

mpz_class squarefree_part(const mpz_class& n, const SieveParams& params) {
  if (n == 0) throw DomainError("squarefree_part(0)");
  mpz_class s = n < 0 ? -1 : 1;
  for (const auto& [p, e] : factorize(n, params))
    if (e % 2 != 0) s *= p;
  return s;
}

bool is_square_int(const mpz_class& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

}  // namespace recip
