#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qt/intpoly2.hpp"

namespace macdel {

// Element of Q(q,t) kept in canonical form:
//   - gcd(num, den) = 1 over the integers (content included),
//   - den != 0,
//   - the canonically-first (lowest) coefficient of den is positive.
// Equality is componentwise on the canonical form.
class QQt {
 public:
  QQt() = default;  // zero
  QQt(long c) : num_(c) {}
  explicit QQt(IntPoly2 num) : num_(std::move(num)) {}
  QQt(const IntPoly2& num, const IntPoly2& den);

  static const QQt& zero();
  static const QQt& one();
  static QQt q() { return QQt(IntPoly2::q()); }
  static QQt t() { return QQt(IntPoly2::t()); }
  static QQt qpow(int e);  // e may be negative
  static QQt tpow(int e);
  static QQt fraction(long num, long den);

  bool isZero() const { return num_.isZero(); }
  bool isOne() const { return num_.isOne() && den_.isOne(); }
  bool isPolynomial() const { return den_.isOne(); }
  const IntPoly2& num() const { return num_; }
  const IntPoly2& den() const { return den_; }

  QQt operator-() const;
  friend QQt operator+(const QQt& a, const QQt& b);
  friend QQt operator-(const QQt& a, const QQt& b);
  friend QQt operator*(const QQt& a, const QQt& b);
  friend QQt operator/(const QQt& a, const QQt& b);  // throws DomainError on b == 0
  QQt& operator+=(const QQt& b) { return *this = *this + b; }
  QQt& operator-=(const QQt& b) { return *this = *this - b; }
  QQt& operator*=(const QQt& b) { return *this = *this * b; }
  QQt& operator/=(const QQt& b) { return *this = *this / b; }
  QQt inverse() const;
  QQt pow(int e) const;  // e may be negative for nonzero values

  friend bool operator==(const QQt&, const QQt&) = default;

  // Formal order in t: ord_t(num) - ord_t(den); +infinity (nullopt) for zero.
  std::optional<long> tValuation() const;

  // Canonical text form, e.g. "(1 - t^2)/(1 - q*t)" or "q*t".
  std::string toString() const;
  // Parses sums of c*q^a*t^b terms, optionally as "(num)/(den)".
  static QQt parse(std::string_view text);

  std::size_t hash() const;

 private:
  IntPoly2 num_;
  IntPoly2 den_ = IntPoly2::one();
  void canonicalize();
};

}  // namespace macdel
