#include "recip/disc_identities.hpp"

#include <algorithm>

#include "recip/errors.hpp"

namespace recip {

mpz_class disc_f_via_g(const SymPair& pair) {
  if (pair.g.degree() != pair.n)
    throw ShapeError("disc_f_via_g: g must have full degree n");
  mpz_class d = discriminant(pair.g);
  return pair.g.eval(2) * pair.g.eval(-2) * d * d;
}

namespace {

// g(u) with constant coefficient b0 and the frozen tail b_1..b_n
IntPoly g_at(const mpz_class& b0, const std::vector<mpz_class>& b) {
  std::vector<mpz_class> coeffs;
  coeffs.reserve(b.size() + 1);
  coeffs.push_back(b0);
  for (const auto& bi : b) coeffs.push_back(bi);
  return IntPoly(std::move(coeffs));
}

// exact Lagrange interpolation of an integer-valued polynomial of degree at
// most `bound` from its values at b0 = 0, 1, ..., bound
IntPoly interpolate_in_b0(int bound,
                          const std::function<mpz_class(const mpz_class&)>& value) {
  int m = bound + 1;
  std::vector<mpq_class> acc(static_cast<size_t>(m), mpq_class(0));
  for (int j = 0; j < m; ++j) {
    mpz_class yj = value(mpz_class(j));
    if (yj == 0) continue;
    // basis polynomial ∏_{k≠j} (X - k), expanded over Q, then scaled
    std::vector<mpq_class> basis{mpq_class(1)};
    mpz_class denom = 1;
    for (int k = 0; k < m; ++k) {
      if (k == j) continue;
      basis.resize(basis.size() + 1, mpq_class(0));
      for (size_t t = basis.size() - 1; t > 0; --t)
        basis[t] = basis[t - 1] - mpq_class(k) * basis[t];
      basis[0] = -mpq_class(k) * basis[0];
      denom *= mpz_class(j - k);
    }
    mpq_class scale = mpq_class(yj) / mpq_class(denom);
    for (size_t t = 0; t < basis.size(); ++t) acc[t] += basis[t] * scale;
  }
  std::vector<mpz_class> coeffs(acc.size());
  for (size_t t = 0; t < acc.size(); ++t) {
    acc[t].canonicalize();
    if (acc[t].get_den() != 1)
      throw DomainError("interpolation produced a non-integer coefficient");
    coeffs[t] = acc[t].get_num();
  }
  return IntPoly(std::move(coeffs));
}

void require_valid_point(const std::vector<mpz_class>& b) {
  if (b.size() < 2) throw ShapeError("coefficient point needs n >= 2");
  if (b.back() == 0) throw ShapeError("leading coefficient b_n must be nonzero");
}

}  // namespace

mpz_class double_disc_R(const std::vector<mpz_class>& b) {
  require_valid_point(b);
  int n = static_cast<int>(b.size());
  IntPoly h = interpolate_in_b0(n + 1, [&](const mpz_class& b0) {
    IntPoly g = g_at(b0, b);
    return mpz_class(g.eval(2) * g.eval(-2) * discriminant(g));
  });
  return b.back() * discriminant(h);
}

FznRReport fzn_R_identity_check(const std::vector<mpz_class>& b) {
  require_valid_point(b);
  int n = static_cast<int>(b.size());
  FznRReport rep;
  rep.lhs = double_disc_R(b);

  // disc_u g as a polynomial in b0 has exact degree n-1 when b_n != 0
  IntPoly dd = interpolate_in_b0(n - 1, [&](const mpz_class& b0) {
    return discriminant(g_at(b0, b));
  });

  IntPoly g0 = g_at(0, b);  // b0 cancels in every remaining factor
  mpz_class gap = g0.eval(2) - g0.eval(-2);
  IntPoly shifted_plus = g0 - IntPoly::constant(g0.eval(2));
  IntPoly shifted_minus = g0 - IntPoly::constant(g0.eval(-2));
  mpz_class dplus = discriminant(shifted_plus);
  mpz_class dminus = discriminant(shifted_minus);

  rep.rhs = b.back() * discriminant(dd) * gap * gap * dplus * dplus * dminus * dminus;

  if (rep.lhs == 0 && rep.rhs == 0) {
    rep.matches = true;
    rep.sign = 0;
  } else if (rep.lhs == rep.rhs) {
    rep.matches = true;
    rep.sign = 1;
  } else if (rep.lhs == -rep.rhs) {
    rep.matches = true;
    rep.sign = -1;
  }
  return rep;
}

PReasonsReport p_reasons_derivative_check(const MultiEval& h,
                                          const MultiEval& dh_last,
                                          const std::vector<mpz_class>& c,
                                          unsigned long p) {
  if (p <= 2) throw DomainError("p_reasons_derivative_check needs an odd prime");
  size_t n = c.size();
  if (n == 0 || n > 20) throw ShapeError("point dimension out of range");
  mpz_class pz(p), p2 = pz * pz;

  auto offset_ok = [&](const std::vector<long>& d) {
    std::vector<mpz_class> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = c[i] + pz * d[i];
    mpz_class v = h(x) % p2;
    return v == 0;
  };

  PReasonsReport rep;
  rep.hypothesis_holds = true;

  std::vector<long> d(n, 0);
  if (!offset_ok(d)) rep.hypothesis_holds = false;
  for (size_t i = 0; i < n && rep.hypothesis_holds; ++i) {
    std::fill(d.begin(), d.end(), 0L);
    d[i] = 1;
    if (!offset_ok(d)) rep.hypothesis_holds = false;
  }
  for (unsigned long mask = 0; mask < (1UL << n) && rep.hypothesis_holds; ++mask) {
    for (size_t i = 0; i < n; ++i) d[i] = (mask >> i) & 1 ? 1 : -1;
    if (!offset_ok(d)) rep.hypothesis_holds = false;
  }

  rep.conclusion_holds = (dh_last(c) % pz) == 0;
  rep.implication_holds = !rep.hypothesis_holds || rep.conclusion_holds;
  return rep;
}

}  // namespace recip
