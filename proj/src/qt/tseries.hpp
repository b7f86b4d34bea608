#pragma once

#include <map>
#include <string>

#include "qt/qqt.hpp"

namespace macdel {

// Laurent expansion in t, exact through an inclusive truncation order.
// Coefficients are exact rational functions in q alone, held as QQt values
// with no t content.
class TSeries {
 public:
  explicit TSeries(int order) : order_(order) {}

  // Expansion of an exact scalar; coefficients below the valuation are absent.
  // An order below the valuation yields an empty series.
  static TSeries expand(const QQt& a, int order);

  int order() const { return order_; }
  const std::map<int, QQt>& coeffs() const { return coeffs_; }
  QQt coeff(int texp) const;
  bool isZero() const { return coeffs_.empty(); }

  void set(int texp, const QQt& cq);  // throws DomainError if texp > order

  friend TSeries operator+(const TSeries& a, const TSeries& b);
  friend TSeries operator-(const TSeries& a, const TSeries& b);
  friend TSeries operator*(const TSeries& a, const TSeries& b);

  friend bool operator==(const TSeries&, const TSeries&) = default;

  // Exact re-summation of the listed terms as an element of Q(q,t).
  QQt resum() const;

  std::string toString() const;  // e.g. "q^10*t^2 + q^8*t^4"

 private:
  int order_;
  std::map<int, QQt> coeffs_;  // t-exponent -> coefficient in q, no zeros
};

}  // namespace macdel
