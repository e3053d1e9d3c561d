#include "recip/reciprocal.hpp"

namespace recip {

bool is_reciprocal(const IntPoly& f) {
  int d = f.degree();
  for (int i = 0; i * 2 <= d; ++i)
    if (f.coeff(i) != f.coeff(d - i)) return false;
  return true;
}

namespace {

// x^(n-k) * (x^2+1)^k, the image of u^k under g(u) -> x^n g(x + 1/x)
IntPoly basis_term(int n, int k) {
  IntPoly t = IntPoly::monomial(1, n - k);
  IntPoly s({1, 0, 1});
  for (int i = 0; i < k; ++i) t = t * s;
  return t;
}

}  // namespace

SymPair symmetrize(const IntPoly& f) {
  int d = f.degree();
  if (d < 0) throw ShapeError("symmetrize: zero polynomial");
  if (d % 2 != 0) throw ShapeError("symmetrize: degree must be even, got " + std::to_string(d));
  if (!is_reciprocal(f))
    throw ShapeError("symmetrize: polynomial is not palindromic");
  int n = d / 2;
  // Peel off the top coefficient repeatedly: the residual after subtracting
  // b_k * x^(n-k) (x^2+1)^k stays palindromic about x^n with lower top degree.
  IntPoly residual = f;
  std::vector<mpz_class> b(static_cast<size_t>(n) + 1, mpz_class(0));
  for (int k = n; k >= 0; --k) {
    b[static_cast<size_t>(k)] = residual.coeff(n + k);
    if (b[static_cast<size_t>(k)] != 0)
      residual = residual - basis_term(n, k) * b[static_cast<size_t>(k)];
  }
  if (!residual.is_zero())
    throw ShapeError("symmetrize: internal residual nonzero (non-palindromic input?)");
  SymPair out;
  out.f = f;
  out.g = IntPoly(std::move(b));
  out.n = n;
  return out;
}

SymPair expand(const IntPoly& g, int n) {
  if (n < 0) throw ShapeError("expand: n must be nonnegative");
  if (g.degree() > n)
    throw ShapeError("expand: deg g = " + std::to_string(g.degree()) +
                     " exceeds n = " + std::to_string(n));
  IntPoly f;
  for (int k = 0; k <= g.degree(); ++k)
    if (g.coeff(k) != 0) f = f + basis_term(n, k) * g.coeff(k);
  SymPair out;
  out.f = f;
  out.g = g;
  out.n = n;
  return out;
}

IntPoly cayley(const IntPoly& f) {
  int d = f.degree();
  if (d < 0) throw ShapeError("cayley: zero polynomial");
  if (d % 2 != 0) throw ShapeError("cayley: degree must be even, got " + std::to_string(d));
  IntPoly one_minus({1, -1}), one_plus({1, 1});
  // powers[i] = (1-x)^i, copowers[i] = (1+x)^(d-i)
  std::vector<IntPoly> pm(static_cast<size_t>(d) + 1), pp(static_cast<size_t>(d) + 1);
  pm[0] = IntPoly({1});
  pp[0] = IntPoly({1});
  for (int i = 1; i <= d; ++i) {
    pm[static_cast<size_t>(i)] = pm[static_cast<size_t>(i - 1)] * one_minus;
    pp[static_cast<size_t>(i)] = pp[static_cast<size_t>(i - 1)] * one_plus;
  }
  IntPoly out;
  for (int i = 0; i <= d; ++i)
    if (f.coeff(i) != 0)
      out = out + pm[static_cast<size_t>(i)] * pp[static_cast<size_t>(d - i)] * f.coeff(i);
  return out;
}

}  // namespace recip
