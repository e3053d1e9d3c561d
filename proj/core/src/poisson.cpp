#include "recip/poisson.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "recip/errors.hpp"
#include "recip/fourier.hpp"

namespace recip {

namespace {

long long det3(const std::vector<std::vector<long>>& b, int dim) {
  if (dim == 1) return b[0][0];
  if (dim == 2)
    return static_cast<long long>(b[0][0]) * b[1][1] - static_cast<long long>(b[0][1]) * b[1][0];
  long long d = 0;
  d += static_cast<long long>(b[0][0]) *
       (static_cast<long long>(b[1][1]) * b[2][2] - static_cast<long long>(b[1][2]) * b[2][1]);
  d -= static_cast<long long>(b[0][1]) *
       (static_cast<long long>(b[1][0]) * b[2][2] - static_cast<long long>(b[1][2]) * b[2][0]);
  d += static_cast<long long>(b[0][2]) *
       (static_cast<long long>(b[1][0]) * b[2][1] - static_cast<long long>(b[1][1]) * b[2][0]);
  return d;
}

// inverse of the dim x dim matrix with the given rows, as long doubles
std::vector<std::vector<long double>> invert(const std::vector<std::vector<long>>& b, int dim,
                                             long long det) {
  std::vector<std::vector<long double>> inv(static_cast<size_t>(dim),
                                            std::vector<long double>(static_cast<size_t>(dim)));
  long double d = static_cast<long double>(det);
  if (dim == 1) {
    inv[0][0] = 1.0L / d;
    return inv;
  }
  if (dim == 2) {
    inv[0][0] = b[1][1] / d;
    inv[0][1] = -b[0][1] / d;
    inv[1][0] = -b[1][0] / d;
    inv[1][1] = b[0][0] / d;
    return inv;
  }
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      int r1 = (r + 1) % 3, r2 = (r + 2) % 3;
      int c1 = (c + 1) % 3, c2 = (c + 2) % 3;
      long double cof = static_cast<long double>(b[r1][c1]) * b[r2][c2] -
                        static_cast<long double>(b[r1][c2]) * b[r2][c1];
      inv[static_cast<size_t>(c)][static_cast<size_t>(r)] = cof / d;  // adjugate transpose
    }
  }
  return inv;
}

std::uint64_t flat_mod(const std::vector<long long>& x, std::uint64_t M, int dim) {
  std::uint64_t idx = 0;
  std::uint64_t scale = 1;
  for (int i = 0; i < dim; ++i) {
    long long r = x[static_cast<size_t>(i)] % static_cast<long long>(M);
    if (r < 0) r += static_cast<long long>(M);
    idx += static_cast<std::uint64_t>(r) * scale;
    scale *= M;
  }
  return idx;
}

}  // namespace

TwistedPoissonReport twisted_poisson_check(int dim, const std::vector<std::vector<long>>& basis,
                                           std::uint64_t M, const std::vector<double>& psi,
                                           double gaussian_width) {
  if (dim < 1 || dim > 3) throw ShapeError("twisted summation supports dimensions 1 to 3");
  if (M < 1) throw ShapeError("modulus must be positive");
  if (!(gaussian_width > 0)) throw ShapeError("gaussian width must be positive");
  if (basis.size() != static_cast<size_t>(dim)) throw ShapeError("basis needs dim rows");
  for (const std::vector<long>& row : basis)
    if (row.size() != static_cast<size_t>(dim)) throw ShapeError("basis rows need dim entries");
  std::uint64_t table = 1;
  for (int i = 0; i < dim; ++i) {
    table *= M;
    if (table > 1'000'000ULL) throw ResourceError("twist table budget exceeded");
  }
  if (psi.size() != table) throw ShapeError("psi table must have M^dim entries");

  long long det = det3(basis, dim);
  if (det == 0) throw DomainError("lattice basis is singular");
  mpz_class index = mpz_class(static_cast<long>(det < 0 ? -det : det));
  mpz_class g;
  mpz_gcd_ui(g.get_mpz_t(), index.get_mpz_t(), static_cast<unsigned long>(M));
  if (g != 1) throw DomainError("modulus must be coprime to the lattice index");

  TwistedPoissonReport out;
  out.dim = dim;
  out.lattice_index = index;
  out.modulus = M;

  const long double s = gaussian_width;
  const long double pi = std::numbers::pi_v<long double>;
  std::vector<std::vector<long double>> binv = invert(basis, dim, det);

  // primal side: x = B^T z over integer z, radius 10 widths
  long double R = 10.0L * s;
  std::vector<long long> zb(static_cast<size_t>(dim), 0);
  std::uint64_t points = 1;
  for (int i = 0; i < dim; ++i) {
    long double colnorm = 0;
    for (int r = 0; r < dim; ++r) colnorm += binv[r][static_cast<size_t>(i)] * binv[r][static_cast<size_t>(i)];
    colnorm = std::sqrt(colnorm);
    zb[static_cast<size_t>(i)] = static_cast<long long>(std::ceil(R * colnorm)) + 1;
    points *= static_cast<std::uint64_t>(2 * zb[static_cast<size_t>(i)] + 1);
    if (points > 20'000'000ULL) throw ResourceError("primal summation box too large");
  }
  long double lhs = 0;
  long double boundary_max = 0;
  std::uint64_t boundary_count = 0;
  std::vector<long long> z(static_cast<size_t>(dim), 0);
  std::vector<long long> x(static_cast<size_t>(dim), 0);
  for (std::uint64_t it = 0; it < points; ++it) {
    std::uint64_t t = it;
    bool on_boundary = false;
    for (int i = 0; i < dim; ++i) {
      long long span = 2 * zb[static_cast<size_t>(i)] + 1;
      z[static_cast<size_t>(i)] = static_cast<long long>(t % static_cast<std::uint64_t>(span)) -
                                  zb[static_cast<size_t>(i)];
      t /= static_cast<std::uint64_t>(span);
      on_boundary = on_boundary || std::llabs(z[static_cast<size_t>(i)]) == zb[static_cast<size_t>(i)];
    }
    long double norm2 = 0;
    for (int c = 0; c < dim; ++c) {
      long long xc = 0;
      for (int i = 0; i < dim; ++i) xc += z[static_cast<size_t>(i)] * basis[static_cast<size_t>(i)][static_cast<size_t>(c)];
      x[static_cast<size_t>(c)] = xc;
      norm2 += static_cast<long double>(xc) * xc;
    }
    long double phi = std::exp(-pi * norm2 / (s * s));
    if (on_boundary) {
      boundary_max = std::max(boundary_max, phi);
      ++boundary_count;
      continue;  // boundary shell is the truncation witness, not summed
    }
    lhs += static_cast<long double>(psi[flat_mod(x, M, dim)]) * phi;
  }

  // twist transform: PsiHat over (Z/M)^dim after pulling Psi back through B
  std::vector<std::complex<double>> pulled(table);
  {
    std::vector<long long> z0(static_cast<size_t>(dim), 0);
    std::vector<long long> c0(static_cast<size_t>(dim), 0);
    for (std::uint64_t it = 0; it < table; ++it) {
      std::uint64_t t = it;
      for (int i = 0; i < dim; ++i) {
        z0[static_cast<size_t>(i)] = static_cast<long long>(t % M);
        t /= M;
      }
      for (int c = 0; c < dim; ++c) {
        long long xc = 0;
        for (int i = 0; i < dim; ++i) xc += z0[static_cast<size_t>(i)] * basis[static_cast<size_t>(i)][static_cast<size_t>(c)];
        c0[static_cast<size_t>(c)] = xc;
      }
      pulled[it] = psi[flat_mod(c0, M, dim)];
    }
  }
  std::vector<std::complex<double>> psihat =
      M == 1 ? pulled : numeric_dft(M, dim, pulled, /*sign=*/+1);
  double mscale = std::pow(static_cast<double>(M), -dim);
  for (std::complex<double>& v : psihat) v *= mscale;

  // dual side: y = B^{-1} w over integer w, radius 10 inverse widths for
  // PhiHat(y / M) = s^dim exp(-pi s^2 |y/M|^2)
  long double Rd = 10.0L / s * static_cast<long double>(M);
  std::vector<long long> wb(static_cast<size_t>(dim), 0);
  std::uint64_t dpoints = 1;
  for (int i = 0; i < dim; ++i) {
    long double rownorm = 0;
    for (int c = 0; c < dim; ++c) rownorm += static_cast<long double>(basis[static_cast<size_t>(i)][static_cast<size_t>(c)]) *
                                             basis[static_cast<size_t>(i)][static_cast<size_t>(c)];
    rownorm = std::sqrt(rownorm);
    wb[static_cast<size_t>(i)] = static_cast<long long>(std::ceil(Rd * rownorm)) + 1;
    dpoints *= static_cast<std::uint64_t>(2 * wb[static_cast<size_t>(i)] + 1);
    if (dpoints > 20'000'000ULL) throw ResourceError("dual summation box too large");
  }
  std::complex<long double> rhs(0, 0);
  long double dual_boundary_max = 0;
  std::vector<long long> w(static_cast<size_t>(dim), 0);
  for (std::uint64_t it = 0; it < dpoints; ++it) {
    std::uint64_t t = it;
    bool on_boundary = false;
    for (int i = 0; i < dim; ++i) {
      long long span = 2 * wb[static_cast<size_t>(i)] + 1;
      w[static_cast<size_t>(i)] = static_cast<long long>(t % static_cast<std::uint64_t>(span)) -
                                  wb[static_cast<size_t>(i)];
      t /= static_cast<std::uint64_t>(span);
      on_boundary = on_boundary || std::llabs(w[static_cast<size_t>(i)]) == wb[static_cast<size_t>(i)];
    }
    long double norm2 = 0;
    for (int c = 0; c < dim; ++c) {
      long double yc = 0;
      for (int i = 0; i < dim; ++i) yc += binv[static_cast<size_t>(c)][static_cast<size_t>(i)] * w[static_cast<size_t>(i)];
      yc /= static_cast<long double>(M);
      norm2 += yc * yc;
    }
    long double phihat = std::pow(s, dim) * std::exp(-pi * s * s * norm2);
    if (on_boundary) {
      dual_boundary_max = std::max(dual_boundary_max, phihat);
      continue;
    }
    std::complex<double> ph = psihat[flat_mod(w, M, dim)];
    rhs += std::complex<long double>(ph.real(), ph.imag()) * phihat;
  }
  rhs /= static_cast<long double>(index.get_d());

  out.lhs = lhs;
  out.rhs = rhs.real();
  out.residual = std::abs(std::complex<long double>(lhs, 0) - rhs);
  long double psimax = 0;
  for (double v : psi) psimax = std::max(psimax, std::abs(static_cast<long double>(v)));
  out.tail_bound = (boundary_max * static_cast<long double>(boundary_count) +
                    dual_boundary_max * static_cast<long double>(dpoints)) *
                   (psimax + 1) * 10;
  return out;
}

}  // namespace recip
