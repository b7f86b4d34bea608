#pragma once

#include <vector>

#include "poly/poly.hpp"

namespace macdel {

// A symmetric function given in the elementary or power-sum basis, indexed by
// a partition: e_lambda = e_{lambda_1}...e_{lambda_r} and likewise p_lambda.
struct SymSpec {
  enum class Basis { Elementary, PowerSum };
  Basis basis = Basis::Elementary;
  Partition index;

  static SymSpec e(int r);
  static SymSpec p(int m);
  static SymSpec e(Partition lambda);
  static SymSpec p(Partition lambda);
  std::string name() const;  // "e2", "p[2,1]", ...
};

// Monomial symmetric polynomial m_lambda(x_1..x_n); error if l(lambda) > n.
Poly msym(const Partition& lambda, int n);
// Elementary e_r(x_1..x_n); e_0 = 1 and e_r = 0 for r > n.
Poly esym(int r, int n);
// Power sum p_m(x_1..x_n), m >= 1.
Poly psym(int m, int n);

// e_r = sum_lambda c_lambda p_lambda over partitions of r.
std::vector<std::pair<Partition, QQt>> eToP(int r);

// F evaluated on a finite multiset of scalars.
QQt symEvalOnValues(const SymSpec& F, const std::vector<QQt>& values);

// Exact F[kappa_nu] where kappa_nu = sum_{i>=1} q^{nu_i} t^i, via
// p_m[kappa_nu] = sum_{i<=l(nu)} q^{m nu_i} t^{m i} + t^{m(l(nu)+1)}/(1-t^m).
QQt kappaEval(const SymSpec& F, const Partition& nu);

}  // namespace macdel
