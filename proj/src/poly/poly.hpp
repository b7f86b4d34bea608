#pragma once

#include <map>
#include <string>
#include <vector>

#include "poly/comb.hpp"
#include "qt/qqt.hpp"

namespace macdel {

// Exponent vector; its length always equals the ambient variable count.
using Monomial = std::vector<int>;

// Graded order, then lexicographic with x_1 heaviest; larger monomials first,
// so iteration starts at the leading term.
struct MonoOrderDesc {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse polynomial in x_1..x_n over Q(q,t). No zero coefficients are stored;
// equality is exact term-map equality.
class Poly {
 public:
  explicit Poly(int nvars = 0) : nvars_(nvars) {}
  static Poly zero(int nvars) { return Poly(nvars); }
  static Poly constant(const QQt& c, int nvars);
  static Poly one(int nvars) { return constant(QQt::one(), nvars); }
  // x_i, 1-based.
  static Poly var(int i, int nvars);
  static Poly monomial(QQt c, Monomial exps);

  int nvars() const { return nvars_; }
  bool isZero() const { return terms_.empty(); }
  int totalDegree() const;  // -1 for zero
  const std::map<Monomial, QQt, MonoOrderDesc>& terms() const { return terms_; }
  QQt coeff(const Monomial& m) const;

  void addTerm(const Monomial& m, const QQt& c);  // accumulating

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const QQt& c, const Poly& a);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }

  // Multiplication by x_i^pow.
  Poly mulVar(int i, int pow = 1) const;
  // Swap of x_i and x_{i+1} (1-based i < nvars).
  Poly swapVars(int i) const;
  bool symmetricIn(int i) const;  // invariant under swapVars(i)

  // x_{m+1},...,x_n set to 0, re-indexed to m variables.
  Poly restrictVars(int m) const;
  // Same terms viewed in n >= nvars variables.
  Poly extendVars(int n) const;

  friend bool operator==(const Poly&, const Poly&) = default;

  // Literal form, e.g. "q*t*x1 + (1 - t)*x2^2".
  std::string toString() const;

 private:
  int nvars_;
  std::map<Monomial, QQt, MonoOrderDesc> terms_;
};

// All beta in Z_{>=0}^n below mu in the Bruhat order (mu included), listed in
// a linear extension with smaller elements first.
std::vector<Monomial> bruhatDownset(const Composition& mu, int n);

}  // namespace macdel
