#include "recip/heights.hpp"

#include <cmath>

#include "recip/roots.hpp"

namespace recip {

double mahler_measure(const IntPoly& P, double* rel_err) {
  if (P.is_zero()) throw DomainError("mahler_measure of zero polynomial");
  long double m = std::fabs(mpz_get_d(P.lc().get_mpz_t()));
  long double rel = 1e-15L;  // |lc| as double plus final rounding
  if (P.degree() >= 1) {
    for (const RootEstimate& r : complex_roots(P)) {
      long double a = std::abs(r.z);
      if (a + r.abs_error <= 1) continue;  // max(1,|z|) = 1 exactly within the error radius
      long double factor = std::max(1.0L, a);
      m *= std::pow(factor, r.multiplicity);
      // relative slack per root: err/|z| if clearly outside the unit circle,
      // else the whole straddle window around 1
      long double slack = (a - r.abs_error > 1) ? (r.abs_error / a) : (r.abs_error + (factor - 1));
      rel += r.multiplicity * (slack + 1e-17L);
    }
  }
  if (rel_err) *rel_err = static_cast<double>(rel);
  return static_cast<double>(m);
}

HeightReport heights(const IntPoly& P) {
  if (P.is_zero()) throw DomainError("heights of zero polynomial");
  HeightReport h;
  h.naive = 0;
  for (const auto& a : P.coeffs()) {
    mpz_class m = abs(a);
    if (m > h.naive) h.naive = m;
  }
  h.content = P.content();
  h.projective = mpq_class(h.naive) / mpq_class(h.content);
  h.projective.canonicalize();
  h.affine = h.naive >= 1 ? mpq_class(h.naive) : mpq_class(1);
  double rel = 0;
  h.mahler = mahler_measure(P, &rel);
  h.mahler_rel_err = rel;
  return h;
}

}  // namespace recip
