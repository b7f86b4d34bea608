#pragma once

#include <compare>
#include <map>
#include <string>

#include "poly/poly.hpp"

namespace macdel {

// Index (mu|lambda) of the almost-symmetric basis x^mu m_lambda[X]: mu a
// reduced composition, lambda a partition.
struct PhiIndex {
  Composition mu;
  Partition lambda;

  PhiIndex() = default;
  PhiIndex(Composition m, Partition l);  // validates both invariants

  friend auto operator<=>(const PhiIndex&, const PhiIndex&) = default;
  std::string toString() const;  // "(2,1|3,1)", empty sides left blank
};

// Finite-n snapshot of an almost symmetric function: coefficients on the
// x^mu m_lambda(x_1..x_n) basis elements with l(mu) <= k, read at level n.
struct AlmostSymExpansion {
  int k = 0;
  int level = 0;
  std::map<PhiIndex, QQt> coeffs;

  QQt coeff(const PhiIndex& key) const;
};

// Greedy peel of f into the (mu|lambda) basis at level n = f.nvars().
// Preconditions: f invariant under s_i for k < i < n, and
// n >= deg(f) + k so the peel markers are unambiguous.
AlmostSymExpansion almostSymExpand(const Poly& f, int k);

// Re-expansion of the snapshot at its recorded level; exact round-trip with
// almostSymExpand.
Poly expansionResum(const AlmostSymExpansion& e);

// Weight alpha~_{(mu|lambda)}(i) of the limit Cherednik operator Y_i on the
// stable-limit function: q^{mu_i} t^{l(mu)+l(lambda)+1-beta_{mu*lambda}(i)}
// when i <= l(mu) and mu_i != 0, else 0.
QQt weightFormula(const PhiIndex& idx, int i);

// epsilon_{l(mu)}^{(n)} applied to E_{mu*lambda*0^...}: the n-th member of
// the sequence defining the stable-limit Macdonald function.
// Requires n >= l(mu) + l(lambda) + 1.
Poly tildeELevel(const PhiIndex& idx, int n);

}  // namespace macdel
