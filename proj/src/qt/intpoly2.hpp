#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace macdel {

// Exponent pair of a single q^dq * t^dt term.
struct QTExp {
  int32_t dq = 0;
  int32_t dt = 0;
  friend bool operator==(const QTExp&, const QTExp&) = default;
};

// Canonical term order: graded, then by t-exponent, then by q-exponent.
// Returns <0, 0, >0.
int compareQT(const QTExp& a, const QTExp& b);

// Sparse polynomial in q and t with integer coefficients. Terms are kept
// sorted ascending in compareQT order with no zero coefficients stored; that
// canonical form backs equality, hashing and printing.
class IntPoly2 {
 public:
  using Term = std::pair<QTExp, mpz_class>;

  IntPoly2() = default;
  explicit IntPoly2(long c);
  explicit IntPoly2(const mpz_class& c);
  static IntPoly2 monomial(mpz_class c, int dq, int dt);
  static IntPoly2 fromTerms(std::vector<Term> terms);  // merges + normalizes

  static const IntPoly2& zero();
  static const IntPoly2& one();
  static const IntPoly2& q();
  static const IntPoly2& t();

  bool isZero() const { return terms_.empty(); }
  bool isOne() const;
  bool isConstant() const;  // zero or a single degree-(0,0) term
  // Nonzero iff the polynomial is c * q^a * t^b.
  bool isMonomial() const { return terms_.size() == 1; }

  const std::vector<Term>& terms() const { return terms_; }

  int degQ() const;  // -1 for zero
  int degT() const;  // -1 for zero
  int ordT() const;  // smallest t-exponent with a nonzero coefficient; 0 for zero

  // gcd of all coefficients, nonnegative; 0 for the zero polynomial.
  mpz_class content() const;
  // Sign of the coefficient of the canonically-first (lowest) term; 0 for zero.
  int signLow() const;

  IntPoly2 operator-() const;
  friend IntPoly2 operator+(const IntPoly2& a, const IntPoly2& b);
  friend IntPoly2 operator-(const IntPoly2& a, const IntPoly2& b);
  friend IntPoly2 operator*(const IntPoly2& a, const IntPoly2& b);
  IntPoly2 mulMonomial(const mpz_class& c, int dq, int dt) const;
  IntPoly2 pow(unsigned e) const;

  // Exact division; throws InternalError if the division leaves a remainder.
  IntPoly2 divExact(const IntPoly2& d) const;
  IntPoly2 divExact(const mpz_class& c) const;

  // Polynomial gcd over the integers, primitive-PRS based. The result is
  // canonicalized: primitive up to the shared integer content and with a
  // positive lowest-term coefficient. gcd(0,0) = 0.
  static IntPoly2 gcd(const IntPoly2& a, const IntPoly2& b);

  friend bool operator==(const IntPoly2&, const IntPoly2&) = default;

  // Rendering in canonical ascending term order, e.g. "1 - t^2 + 2*q*t".
  std::string toString() const;
  std::size_t hash() const;

 private:
  std::vector<Term> terms_;
};

}  // namespace macdel
