#include "recip/roots.hpp"

#include <cmath>

namespace recip {

namespace {

using cplx = std::complex<long double>;

void eval_with_derivative(const std::vector<cplx>& c, const cplx& z, cplx* p, cplx* dp) {
  cplx acc = 0, dacc = 0;
  for (size_t i = c.size(); i-- > 0;) {
    dacc = dacc * z + acc;
    acc = acc * z + c[i];
  }
  *p = acc;
  *dp = dacc;
}

// Aberth-Ehrlich on a squarefree polynomial given by ascending long double
// complex coefficients (real inputs in practice).  Returns d root estimates.
std::vector<cplx> aberth(const std::vector<cplx>& c) {
  const int d = static_cast<int>(c.size()) - 1;
  std::vector<cplx> z(static_cast<size_t>(d));
  long double r = 0;
  for (int i = 0; i < d; ++i)
    r = std::max(r, std::abs(c[static_cast<size_t>(i)] / c[static_cast<size_t>(d)]));
  r = 1 + r;  // Cauchy bound: all roots live in |z| <= r
  const long double pi = 3.14159265358979323846264338327950288L;
  for (int i = 0; i < d; ++i) {
    // staggered radii + an irrational angular offset avoid symmetric stalls
    long double th = 2 * pi * i / d + 0.437L;
    long double rad = r * (0.35L + 0.5L * ((i % 3) + 1) / 3.0L);
    z[static_cast<size_t>(i)] = cplx(rad * std::cos(th), rad * std::sin(th));
  }
  const long double tol = 1e-17L;
  for (int iter = 0; iter < 400; ++iter) {
    bool done = true;
    for (int i = 0; i < d; ++i) {
      cplx p, dp;
      eval_with_derivative(c, z[static_cast<size_t>(i)], &p, &dp);
      if (std::abs(p) == 0) continue;
      cplx newton;
      if (std::abs(dp) == 0) {
        newton = cplx(tol * (1 + std::abs(z[static_cast<size_t>(i)])), 0);
      } else {
        newton = p / dp;
      }
      cplx s = 0;
      for (int j = 0; j < d; ++j)
        if (j != i) s += cplx(1, 0) / (z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)]);
      cplx denom = cplx(1, 0) - newton * s;
      cplx w = (std::abs(denom) < 1e-30L) ? newton : newton / denom;
      z[static_cast<size_t>(i)] -= w;
      if (std::abs(w) > tol * (1 + std::abs(z[static_cast<size_t>(i)]))) done = false;
    }
    if (done) break;
  }
  return z;
}

}  // namespace

std::vector<RootEstimate> complex_roots(const IntPoly& P) {
  if (P.degree() < 1) throw DomainError("complex_roots: degree must be >= 1");
  std::vector<RootEstimate> out;
  for (const auto& [q, mult] : squarefree_decomposition(P)) {
    // pull out x^v so the remaining constant term is nonzero
    int v = 0;
    while (q.coeff(v) == 0) ++v;
    for (int i = 0; i < v; ++i) out.push_back({cplx(0, 0), 0.0L, mult});
    int d = q.degree() - v;
    if (d == 0) continue;
    std::vector<cplx> c(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i)
      c[static_cast<size_t>(i)] = cplx(q.coeff(i + v).get_d(), 0.0L);
    std::vector<cplx> zs = aberth(c);
    for (const cplx& z : zs) {
      // a couple of plain Newton steps to polish, then a residual-based bound
      cplx zz = z;
      long double step = 0;
      for (int it = 0; it < 3; ++it) {
        cplx p, dp;
        eval_with_derivative(c, zz, &p, &dp);
        if (std::abs(dp) == 0) break;
        cplx w = p / dp;
        step = std::abs(w);
        zz -= w;
      }
      out.push_back({zz, 8 * step + 1e-16L * (1 + std::abs(zz)), mult});
    }
  }
  return out;
}

}  // namespace recip
