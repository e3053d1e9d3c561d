#ifndef RECIP_INTPOLY_HPP
#define RECIP_INTPOLY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "recip/errors.hpp"

namespace recip {

// Dense univariate polynomial over Z with ascending coefficients:
// c[0] + c[1]*x + ... + c[d]*x^d.  The zero polynomial is the empty vector
// and reports degree() == -1 (sentinel for "degree minus infinity").
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> ascending) : c_(std::move(ascending)) { trim(); }
  IntPoly(std::initializer_list<long> ascending) {
    c_.reserve(ascending.size());
    for (long v : ascending) c_.emplace_back(v);
    trim();
  }

  static IntPoly zero() { return IntPoly(); }
  static IntPoly constant(mpz_class v) {
    IntPoly p;
    p.c_.push_back(std::move(v));
    p.trim();
    return p;
  }
  // coefficient * x^k
  static IntPoly monomial(mpz_class coefficient, int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  // Coefficient of x^i; zero outside the stored range.
  const mpz_class& coeff(int i) const {
    static const mpz_class kZero = 0;
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
  }
  const mpz_class& lc() const;  // leading coefficient; DomainError on zero poly
  const std::vector<mpz_class>& coeffs() const { return c_; }

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return !(*this == o); }

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator*(const mpz_class& s) const;

  IntPoly derivative() const;
  mpz_class eval(const mpz_class& x) const;      // Horner
  mpq_class eval_q(const mpq_class& x) const;

  // x^degree * P(1/x); strips trailing zero roots first (reverse of 0 is 0).
  IntPoly reversed() const;

  // gcd of all coefficients, nonnegative; content of 0 is 0.
  mpz_class content() const;
  IntPoly primitive_part() const;  // P / content, sign preserved; 0 -> 0

  std::string str() const;  // human-readable, e.g. "x^2 + 3*x - 1"

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<mpz_class> c_;
};

IntPoly operator*(const mpz_class& s, const IntPoly& p);

// Pseudo-remainder: the R with lc(B)^(deg A - deg B + 1) * A = Q*B + R,
// deg R < deg B.  Requires B nonzero.
IntPoly pseudo_rem(const IntPoly& A, const IntPoly& B);

// Exact quotient of A by B when B | A over Z; DomainError otherwise.
IntPoly divide_exact(const IntPoly& A, const IntPoly& B);

// True iff B | A in Q[x] (so also in Z[x] up to content).  Sets *quotient
// when non-null and divisible; the quotient is over Q scaled to Z only when
// it is integral, otherwise divides() reports true and quotient_q gets it.
bool divides_q(const IntPoly& B, const IntPoly& A, std::vector<mpq_class>* quotient_q = nullptr);

// gcd over Z[x], primitive with positive leading coefficient
// (gcd of contents times primitive gcd).  gcd(0,0) = 0.
IntPoly gcd(const IntPoly& A, const IntPoly& B);

// Resultant via the subresultant polynomial remainder sequence.
// Res(A,B) with A,B nonzero; DomainError on a zero operand.
mpz_class resultant(const IntPoly& A, const IntPoly& B);

// disc P = (-1)^(d(d-1)/2) * Res(P, P') / lc(P), d = deg P >= 1.
// DomainError for constants and zero.
mpz_class discriminant(const IntPoly& P);

// Yun decomposition in characteristic zero: P = content * prod_i Q_i^i with
// the Q_i squarefree, pairwise coprime, primitive, positive leading
// coefficient.  Constants give an empty list.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& P);

}  // namespace recip

#endif
