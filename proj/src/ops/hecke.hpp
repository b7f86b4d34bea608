#pragma once

#include <vector>

#include "poly/poly.hpp"

namespace macdel {

// Operators of the standard representation at truncation n = f.nvars().
// Everything here is a pure function of its inputs.

// Plain variable swap s_i, 1 <= i <= n-1.
Poly applyS(int i, const Poly& f);
// Multiplication by x_i.
Poly applyX(int i, const Poly& f);
// Demazure-Lusztig T_i f = s_i f + (1-t) x_i (f - s_i f)/(x_i - x_{i+1}).
Poly applyT(int i, const Poly& f);
// T_i^{-1} = t^{-1}(T_i - (1-t)).
Poly applyTinv(int i, const Poly& f);
// pi f(x_1..x_n) = f(x_2,...,x_n, q x_1).
Poly applyPi(const Poly& f);
// pitilde = X_1 T_1^{-1} ... T_{n-1}^{-1}.
Poly applyPitilde(const Poly& f);
// Keeps exactly the monomials with positive x_1 exponent.
Poly applyRho(const Poly& f);
// Partial t-symmetrizer over the Young subgroup fixing 1..k pointwise,
// 0 <= k < n.
Poly applyEps(int k, const Poly& f);
// Cherednik operator: Y_1 = pi T_{n-1}^{-1}...T_1^{-1} and
// Y_{i+1} = t^{-1} T_i Y_i T_i.
Poly applyY(int i, const Poly& f);
// Deformed Cherednik operator
// Ytilde_i = t^{n-i+1} T_{i-1}...T_1 rho pi T_{n-1}^{-1}...T_i^{-1}.
Poly applyYtilde(int i, const Poly& f);

// T_{w_1} T_{w_2} ... T_{w_r} applied as a composition (T_{w_r} first).
Poly applyTWord(const std::vector<int>& word, const Poly& f);
Poly applyTinvWord(const std::vector<int>& word, const Poly& f);

// [m]_t! = prod_{i=1}^m (1-t^i)/(1-t).
QQt tFactorial(int m);

// All monomials in n variables of total degree <= bound, a spanning test set.
std::vector<Monomial> monomialsUpTo(int n, int bound);

}  // namespace macdel
