#include "recip/fourier.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>

#include "recip/binform.hpp"
#include "recip/errors.hpp"
#include "recip/modpoly.hpp"

namespace recip {

namespace {

std::uint64_t pow_checked(std::uint64_t p, int e, std::uint64_t cap, const char* what) {
  std::uint64_t total = 1;
  for (int i = 0; i < e; ++i) {
    total *= p;
    if (total > cap) throw ResourceError(what);
  }
  return total;
}

mpz_class mpz_pow_u(std::uint64_t base, unsigned long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), e);
  return out;
}

}  // namespace

Cyclotomic Cyclotomic::zero(std::uint64_t p) {
  if (p < 2) throw ShapeError("cyclotomic order must be at least 2");
  Cyclotomic c;
  c.p = p;
  c.coord.assign(static_cast<size_t>(p) - 1, mpq_class(0));
  return c;
}

Cyclotomic Cyclotomic::from_rational(std::uint64_t p, const mpq_class& v) {
  Cyclotomic c = zero(p);
  c.coord[0] = v;
  return c;
}

Cyclotomic Cyclotomic::root_power(std::uint64_t p, long t) {
  Cyclotomic c = zero(p);
  long r = ((t % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p);
  if (r <= static_cast<long>(p) - 2) {
    c.coord[static_cast<size_t>(r)] = 1;
  } else {
    for (mpq_class& q : c.coord) q = -1;
  }
  return c;
}

void Cyclotomic::add_rotated(const Cyclotomic& x, long t) {
  if (p != x.p) throw ShapeError("cyclotomic orders differ");
  long r = ((t % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p);
  for (size_t s = 0; s + 1 < static_cast<size_t>(p); ++s) {
    if (x.coord[s] == 0) continue;
    long e = (static_cast<long>(s) + r) % static_cast<long>(p);
    if (e <= static_cast<long>(p) - 2) {
      coord[static_cast<size_t>(e)] += x.coord[s];
    } else {
      for (mpq_class& q : coord) q -= x.coord[s];
    }
  }
}

void Cyclotomic::scale(const mpq_class& c) {
  for (mpq_class& q : coord) q *= c;
}

bool Cyclotomic::is_rational_value() const {
  for (size_t s = 1; s < coord.size(); ++s)
    if (coord[s] != 0) return false;
  return true;
}

mpq_class Cyclotomic::rational_value() const {
  if (!is_rational_value()) throw DomainError("cyclotomic value is irrational");
  return coord[0];
}

std::complex<double> Cyclotomic::embed() const {
  std::complex<double> out(0, 0);
  for (size_t s = 0; s < coord.size(); ++s) {
    double a = 2.0 * std::numbers::pi * static_cast<double>(s) / static_cast<double>(p);
    out += coord[s].get_d() * std::complex<double>(std::cos(a), std::sin(a));
  }
  return out;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const { return p == o.p && coord == o.coord; }

std::vector<Cyclotomic> cyclotomic_dft(std::uint64_t p, int ncoords,
                                       const std::vector<Cyclotomic>& in, int sign) {
  if (ncoords < 1) throw ShapeError("transform needs at least one coordinate");
  std::uint64_t size = pow_checked(p, ncoords, 2'000'000ULL / p, "exact transform budget exceeded");
  if (in.size() != size) throw ShapeError("table length does not match p^ncoords");
  std::vector<Cyclotomic> out = in;
  std::vector<Cyclotomic> xs(static_cast<size_t>(p), Cyclotomic::zero(p));
  std::uint64_t stride = 1;
  for (int axis = 0; axis < ncoords; ++axis) {
    for (std::uint64_t idx = 0; idx < size; ++idx) {
      if ((idx / stride) % p != 0) continue;
      for (std::uint64_t t = 0; t < p; ++t) xs[static_cast<size_t>(t)] = out[idx + t * stride];
      for (std::uint64_t r = 0; r < p; ++r) {
        Cyclotomic acc = Cyclotomic::zero(p);
        for (std::uint64_t t = 0; t < p; ++t)
          acc.add_rotated(xs[static_cast<size_t>(t)],
                          sign * static_cast<long>((r * t) % p));
        out[idx + r * stride] = std::move(acc);
      }
    }
    stride *= p;
  }
  return out;
}

std::vector<std::complex<double>> numeric_dft(std::uint64_t p, int ncoords,
                                              const std::vector<std::complex<double>>& in,
                                              int sign) {
  if (ncoords < 1) throw ShapeError("transform needs at least one coordinate");
  std::uint64_t size = pow_checked(p, ncoords, 10'000'000ULL, "transform table budget of 10^7 exceeded");
  if (in.size() != size) throw ShapeError("table length does not match p^ncoords");
  std::vector<std::complex<double>> roots(static_cast<size_t>(p));
  for (std::uint64_t m = 0; m < p; ++m) {
    double a = sign * 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(p);
    roots[static_cast<size_t>(m)] = {std::cos(a), std::sin(a)};
  }
  std::vector<std::complex<double>> out = in;
  std::vector<std::complex<double>> xs(static_cast<size_t>(p));
  std::uint64_t stride = 1;
  for (int axis = 0; axis < ncoords; ++axis) {
    for (std::uint64_t idx = 0; idx < size; ++idx) {
      if ((idx / stride) % p != 0) continue;
      for (std::uint64_t t = 0; t < p; ++t) xs[static_cast<size_t>(t)] = out[idx + t * stride];
      for (std::uint64_t r = 0; r < p; ++r) {
        std::complex<double> acc(0, 0);
        for (std::uint64_t t = 0; t < p; ++t) acc += xs[static_cast<size_t>(t)] * roots[(r * t) % p];
        out[idx + r * stride] = acc;
      }
    }
    stride *= p;
  }
  return out;
}

namespace {

std::vector<std::uint32_t> build_weight_table(std::uint64_t p, int n, const SplittingType& sigma,
                                              bool pointed, bool monic, int* ncoords_out) {
  *ncoords_out = monic ? n : n + 1;
  if (monic) return pointed ? w_monic_pointed_table(p, n, sigma) : w_monic_table(p, n, sigma);
  return pointed ? w_pointed_table(p, n, sigma) : w_table(p, n, sigma);
}

}  // namespace

FourierTable fourier_full(std::uint64_t p, int n, const SplittingType& sigma, bool pointed,
                          bool monic) {
  FourierTable out;
  out.p = p;
  out.n = n;
  out.pointed = pointed;
  out.monic = monic;
  std::vector<std::uint32_t> table = build_weight_table(p, n, sigma, pointed, monic, &out.ncoords);
  std::uint64_t size = table.size();

  std::vector<std::complex<double>> numeric(table.begin(), table.end());
  out.shadow = numeric_dft(p, out.ncoords, numeric);
  double norm = std::pow(static_cast<double>(p), -out.ncoords);
  for (std::complex<double>& v : out.shadow) v *= norm;

  // exact pass only when the cyclotomic table fits the budget
  std::uint64_t exact_cost = size;
  bool fits = true;
  if (exact_cost > 2'000'000ULL / p) fits = false;
  if (fits) {
    std::vector<Cyclotomic> lift;
    lift.reserve(size);
    for (std::uint32_t v : table) lift.push_back(Cyclotomic::from_rational(p, mpq_class(v)));
    out.values = cyclotomic_dft(p, out.ncoords, lift);
    mpq_class scale{1};
    scale /= mpq_class(mpz_pow_u(p, static_cast<unsigned long>(out.ncoords)));
    for (Cyclotomic& v : out.values) v.scale(scale);
    out.exact = true;
  }
  return out;
}

bool pointed_perp_member(int n, int e1, bool monic, const std::vector<std::uint64_t>& g) {
  if (e1 < 1) throw ShapeError("perp membership needs a marked multiplicity");
  int ncoords = monic ? n : n + 1;
  if (g.size() != static_cast<size_t>(ncoords))
    throw ShapeError("dual vector length does not match the model");
  if (monic) {
    for (int i = e1; i < n; ++i)
      if (g[static_cast<size_t>(i)] != 0) return false;
  } else {
    for (int i = 0; i <= n - e1; ++i)
      if (g[static_cast<size_t>(i)] != 0) return false;
  }
  return true;
}

TransformCheck transform_check(std::uint64_t p, int n, const SplittingType& sigma, bool pointed,
                               bool monic) {
  TransformCheck out;
  out.p = p;
  out.n = n;
  out.pointed = pointed;
  out.monic = monic;
  out.d = sigma.degree();
  out.k = sigma.index();
  int ncoords = 0;
  std::vector<std::uint32_t> table = build_weight_table(p, n, sigma, pointed, monic, &ncoords);
  std::uint64_t size = table.size();
  int j = pointed ? 1 : 0;
  int e1 = pointed ? sigma.parts.front().e : 0;

  std::uint64_t sum = 0;
  for (std::uint32_t v : table) sum += v;
  out.table_sum = sum;
  mpz_class pN = mpz_pow_u(p, static_cast<unsigned long>(ncoords));
  out.zero_value = mpq_class(mpz_class(sum)) / mpq_class(pN);
  out.zero_value.canonicalize();

  mpz_class aut = pointed ? aut_count_pinned(sigma) : aut_count(sigma);
  mpz_class pkj = mpz_pow_u(p, static_cast<unsigned long>(out.k + j));
  out.main_term = mpq_class(1) / mpq_class(pkj * aut);
  out.main_term.canonicalize();

  // scaled error of the leading term: |zero * Aut - p^{-(k+j)}| * p^{k+j+1}
  mpq_class err = out.zero_value * mpq_class(aut) - mpq_class(1) / mpq_class(pkj);
  if (err < 0) err = -err;
  err *= mpq_class(pkj * p);
  out.zero_envelope = err.get_d();

  out.off_exponent = static_cast<double>(out.k + j + 1);
  if (monic && out.d == n) out.off_exponent -= 0.5;

  std::vector<std::complex<double>> numeric(table.begin(), table.end());
  std::vector<std::complex<double>> hat = numeric_dft(p, ncoords, numeric);
  double norm = std::pow(static_cast<double>(p), -ncoords);

  std::vector<std::uint64_t> digits(static_cast<size_t>(ncoords), 0);
  double max_off = 0;
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    std::uint64_t t = idx;
    bool nonzero = false;
    for (int i = 0; i < ncoords; ++i) {
      digits[static_cast<size_t>(i)] = t % p;
      nonzero = nonzero || digits[static_cast<size_t>(i)] != 0;
      t /= p;
    }
    bool off_support = pointed ? !pointed_perp_member(n, e1, monic, digits) : nonzero;
    if (!off_support) continue;
    max_off = std::max(max_off, std::abs(hat[idx]) * norm);
  }
  out.max_off_support = max_off;
  out.envelope_constant =
      std::max(out.zero_envelope, max_off * std::pow(static_cast<double>(p), out.off_exponent));

  if (pointed) {
    for (std::uint64_t idx = 0; idx < size && out.support_in_subspace; ++idx) {
      if (table[idx] == 0) continue;
      std::uint64_t t = idx;
      for (int i = 0; i < ncoords; ++i) {
        std::uint64_t c = t % p;
        t /= p;
        bool must_vanish = monic ? (i < e1) : (i > n - e1);
        if (must_vanish && c != 0) {
          out.support_in_subspace = false;
          break;
        }
      }
    }
  }
  return out;
}

namespace {

// reduced row echelon form mod p; returns pivot column per row
std::vector<int> rref_mod_p(std::vector<std::vector<std::uint64_t>>& rows, std::uint64_t p) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  size_t ncols = rows[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    size_t sel = rank;
    while (sel < rows.size() && rows[sel][col] % p == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    std::uint64_t inv = inv_mod(rows[rank][col] % p, p);
    for (std::uint64_t& v : rows[rank]) v = mul_mod(v % p, inv, p);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      std::uint64_t factor = rows[r][col] % p;
      if (factor == 0) continue;
      for (size_t c2 = 0; c2 < ncols; ++c2)
        rows[r][c2] = sub_mod(rows[r][c2] % p, mul_mod(factor, rows[rank][c2], p), p);
    }
    pivots.push_back(static_cast<int>(col));
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

std::vector<std::vector<mpq_class>> invert_rational(std::vector<std::vector<mpq_class>> a) {
  size_t m = a.size();
  std::vector<std::vector<mpq_class>> inv(m, std::vector<mpq_class>(m, mpq_class(0)));
  for (size_t i = 0; i < m; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < m; ++col) {
    size_t sel = col;
    while (sel < m && a[sel][col] == 0) ++sel;
    if (sel == m) throw DomainError("singular matrix");
    std::swap(a[col], a[sel]);
    std::swap(inv[col], inv[sel]);
    mpq_class d = a[col][col];
    for (size_t c = 0; c < m; ++c) {
      a[col][c] /= d;
      inv[col][c] /= d;
    }
    for (size_t r = 0; r < m; ++r) {
      if (r == col || a[r][col] == 0) continue;
      mpq_class f = a[r][col];
      for (size_t c = 0; c < m; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

}  // namespace

bool LatticeDescriptor::contains(const std::vector<mpz_class>& g) const {
  if (g.size() != static_cast<size_t>(n) + 1)
    throw ShapeError("polynomial coefficient vector must have length n + 1");
  for (const std::vector<std::uint64_t>& row : congruences) {
    std::uint64_t acc = 0;
    for (size_t jc = 0; jc < row.size(); ++jc) {
      std::uint64_t gj = mpz_fdiv_ui(g[jc].get_mpz_t(), static_cast<unsigned long>(p));
      acc = (acc + mul_mod(row[jc], gj, p)) % p;
    }
    if (acc != 0) return false;
  }
  return true;
}

LatticeDescriptor lattice_Lp(std::uint64_t p, LpCase which, int e1, int n) {
  if (p < 2) throw ShapeError("modulus must be at least 2");
  if (n < 0) throw ShapeError("ambient degree must be nonnegative");
  if (which == LpCase::full && e1 != 0)
    throw ShapeError("the full lattice carries no marked multiplicity");
  if (which != LpCase::full && e1 < 1)
    throw ShapeError("a marked lattice needs multiplicity at least 1");
  LatticeDescriptor out;
  out.p = p;
  out.n = n;
  out.e1 = e1;
  out.which = which;

  if (which != LpCase::full) {
    // row m: the functional g -> g^{(m)}(s) mod p, s = +2 or -2
    std::uint64_t s =
        which == LpCase::marked_plus ? (2 % p) : ((p - (2 % p)) % p);
    for (int m = 0; m < e1; ++m) {
      std::vector<std::uint64_t> row(static_cast<size_t>(n) + 1, 0);
      for (int jc = m; jc <= n; ++jc) {
        std::uint64_t fall = 1;
        for (int t = 0; t < m; ++t)
          fall = mul_mod(fall, static_cast<std::uint64_t>(jc - t) % p, p);
        std::uint64_t spow = 1;
        for (int t = 0; t < jc - m; ++t) spow = mul_mod(spow, s, p);
        row[static_cast<size_t>(jc)] = mul_mod(fall, spow, p);
      }
      out.congruences.push_back(std::move(row));
    }
  }

  std::vector<std::vector<std::uint64_t>> rref = out.congruences;
  std::vector<int> pivots = rref_mod_p(rref, p);
  out.rank = static_cast<int>(pivots.size());
  out.index = mpz_pow_u(p, static_cast<unsigned long>(out.rank));

  // basis: p*e_c at pivot columns, lifted kernel vectors at free columns
  size_t ncols = static_cast<size_t>(n) + 1;
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  for (size_t c = 0; c < ncols; ++c) {
    std::vector<mpz_class> v(ncols, mpz_class(0));
    if (is_pivot[c]) {
      v[c] = static_cast<unsigned long>(p);
    } else {
      v[c] = 1;
      for (size_t r = 0; r < rref.size(); ++r) {
        std::uint64_t entry = rref[r][c] % p;
        if (entry != 0) v[static_cast<size_t>(pivots[r])] = static_cast<unsigned long>(p - entry);
      }
    }
    out.basis.push_back(std::move(v));
  }

  std::vector<std::vector<mpq_class>> bq(ncols, std::vector<mpq_class>(ncols));
  for (size_t r = 0; r < ncols; ++r)
    for (size_t c = 0; c < ncols; ++c) bq[r][c] = mpq_class(out.basis[r][c]);
  std::vector<std::vector<mpq_class>> binv = invert_rational(bq);
  out.dual_basis.assign(ncols, std::vector<mpq_class>(ncols));
  for (size_t r = 0; r < ncols; ++r)
    for (size_t c = 0; c < ncols; ++c) out.dual_basis[r][c] = binv[c][r];
  return out;
}

LambdaDeltaReport lambda_delta_split(std::uint64_t p, int n, const SplittingType& sigma) {
  LambdaDeltaReport out;
  out.p = p;
  out.n = n;
  bool pointed = sigma.marked != MarkAt::none;
  out.j = pointed ? 1 : 0;
  out.k = sigma.index();
  out.k_case = (out.k + out.j) / 2;

  int ncoords = 0;
  std::vector<std::uint32_t> table = build_weight_table(p, n, sigma, pointed, false, &ncoords);
  std::uint64_t size = table.size();

  // transport from the binary-form model to polynomial coefficients:
  // x^i y^{n-i}  ->  (u -+ 2)^{n-i} when a point is marked, u^i otherwise
  std::vector<std::uint32_t> psi;
  if (!pointed) {
    psi = table;
  } else {
    std::uint64_t s = sigma.marked == MarkAt::plus_two ? (2 % p) : ((p - (2 % p)) % p);
    std::uint64_t neg_s = (p - s) % p;
    // pw[m] = coefficients of (u - s)^m mod p
    std::vector<std::vector<std::uint64_t>> pw(static_cast<size_t>(n) + 1);
    pw[0] = {1};
    for (int m = 1; m <= n; ++m) {
      const std::vector<std::uint64_t>& prev = pw[static_cast<size_t>(m - 1)];
      std::vector<std::uint64_t> cur(static_cast<size_t>(m) + 1, 0);
      for (int t = 0; t < m; ++t) {
        cur[static_cast<size_t>(t + 1)] = (cur[static_cast<size_t>(t + 1)] + prev[static_cast<size_t>(t)]) % p;
        cur[static_cast<size_t>(t)] =
            (cur[static_cast<size_t>(t)] + mul_mod(neg_s, prev[static_cast<size_t>(t)], p)) % p;
      }
      pw[static_cast<size_t>(m)] = std::move(cur);
    }
    std::vector<std::uint64_t> ppow(static_cast<size_t>(ncoords), 1);
    for (int i = 1; i < ncoords; ++i) ppow[static_cast<size_t>(i)] = ppow[static_cast<size_t>(i - 1)] * p;
    psi.assign(size, 0);
    std::vector<std::uint64_t> gcoef(static_cast<size_t>(ncoords), 0);
    for (std::uint64_t idx = 0; idx < size; ++idx) {
      if (table[idx] == 0) continue;
      std::fill(gcoef.begin(), gcoef.end(), 0);
      std::uint64_t t = idx;
      for (int i = 0; i <= n; ++i) {
        std::uint64_t ci = t % p;
        t /= p;
        if (ci == 0) continue;
        const std::vector<std::uint64_t>& row = pw[static_cast<size_t>(n - i)];
        for (size_t m = 0; m < row.size(); ++m)
          gcoef[m] = (gcoef[m] + mul_mod(ci, row[m], p)) % p;
      }
      std::uint64_t gidx = 0;
      for (int i = 0; i < ncoords; ++i) gidx += gcoef[static_cast<size_t>(i)] * ppow[static_cast<size_t>(i)];
      psi[gidx] += table[idx];
    }
  }

  int e1 = pointed ? sigma.parts.front().e : 0;
  LpCase which = LpCase::full;
  if (sigma.marked == MarkAt::plus_two) which = LpCase::marked_plus;
  if (sigma.marked == MarkAt::minus_two) which = LpCase::marked_minus;
  out.lattice = lattice_Lp(p, which, e1, n);

  int tail = 0;
  for (size_t i = static_cast<size_t>(out.j); i < sigma.parts.size(); ++i)
    tail += (sigma.parts[i].e - 1) * sigma.parts[i].f;
  mpz_class aut = pointed ? aut_count_pinned(sigma) : aut_count(sigma);
  out.a_p = mpq_class(1) / mpq_class(mpz_pow_u(p, static_cast<unsigned long>(tail)) * aut);
  out.a_p.canonicalize();
  // must agree with index * p^{-k-j} / Aut
  mpq_class alt = mpq_class(out.lattice.index) /
                  mpq_class(mpz_pow_u(p, static_cast<unsigned long>(out.k + out.j)) * aut);
  alt.canonicalize();
  if (out.a_p != alt) throw DomainError("lattice scale identity failed");

  out.a_hat = out.a_p / mpq_class(out.lattice.index);
  out.a_hat.canonicalize();
  out.a_p_le_one = out.a_p <= 1;
  mpq_class bound = mpq_class(1) / mpq_class(mpz_pow_u(p, static_cast<unsigned long>(2 * out.k_case)));
  out.a_hat_le_bound = out.a_hat <= bound;

  double ap = out.a_p.get_d();
  std::vector<std::complex<double>> delta(size);
  std::vector<mpz_class> gz(static_cast<size_t>(ncoords));
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    std::uint64_t t = idx;
    for (int i = 0; i < ncoords; ++i) {
      gz[static_cast<size_t>(i)] = static_cast<unsigned long>(t % p);
      t /= p;
    }
    bool in_lattice = out.lattice.contains(gz);
    delta[idx] = static_cast<double>(psi[idx]) - (in_lattice ? ap : 0.0);
  }
  std::vector<std::complex<double>> hat = numeric_dft(p, ncoords, delta);
  double norm = std::pow(static_cast<double>(p), -ncoords);
  double max_hat = 0;
  for (const std::complex<double>& v : hat) max_hat = std::max(max_hat, std::abs(v) * norm);
  out.max_delta_hat = max_hat;
  out.delta_constant = max_hat * std::pow(static_cast<double>(p), 2 * out.k_case + 1);
  return out;
}

}  // namespace recip
