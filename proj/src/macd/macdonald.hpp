#pragma once

#include <vector>

#include "poly/poly.hpp"
#include "poly/sym.hpp"

namespace macdel {

// Non-symmetric Macdonald polynomial at truncation n with its joint
// Cherednik spectrum: apply_Y(i, poly) = spectrum[i-1] * poly exactly, and
// poly = x^mu + lower Bruhat terms with unit leading coefficient.
struct MacdonaldE {
  Composition mu;  // as given, before padding
  int n = 0;
  Poly poly;
  std::vector<QQt> spectrum;
};

// Triangular solve on the Bruhat down-set span. Throws DomainError when the
// joint kernel is not one-dimensional (eigenvalue collision) and
// InternalError when a Y image leaves the down-set span (Bruhat closure bug).
MacdonaldE computeE(const Composition& mu, int n);

// {t^n spectrum_i : i = 1..n}, canonically ordered for multiset comparison.
std::vector<QQt> tnSpectrumMultiset(const MacdonaldE& e);
// {q^{sort(mu)_i} t^i : i = 1..n} with sort padded by zeros, same ordering.
std::vector<QQt> expectedSpectrumMultiset(const Composition& mu, int n);

// True iff applying Psi_F^{(n)} to E_mu equals F[{q^{sort(mu)_i} t^i}] times
// E_mu exactly. Defined with the Psi machinery (see delta module).
bool verifyPsiEigen(const SymSpec& F, const Composition& mu, int n);

}  // namespace macdel
