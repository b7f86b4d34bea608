#include <set>

#include "common/error.hpp"
#include "doctest.h"
#include "macd/linearsolve.hpp"
#include "macd/macdonald.hpp"
#include "ops/hecke.hpp"

using namespace macdel;

namespace {

Poly x(int i, int n) { return Poly::var(i, n); }

}  // namespace

TEST_SUITE("macdonald") {
  TEST_CASE("constant and single-variable cases") {
    for (int n = 1; n <= 4; ++n) {
      const MacdonaldE e0 = computeE(Composition{}, n);
      CHECK(e0.poly == Poly::one(n));
      CHECK(tnSpectrumMultiset(e0) == expectedSpectrumMultiset({}, n));
    }
    const MacdonaldE e10 = computeE({1, 0}, 2);
    CHECK(e10.poly == x(1, 2));
    const MacdonaldE e1 = computeE({1}, 1);
    CHECK(e1.poly == x(1, 1));
  }

  TEST_CASE("first nontrivial coefficient, frozen from the solve oracle") {
    const MacdonaldE e = computeE({0, 1}, 2);
    // hand derivation from Y_1(x_2) = x_2 - q t^{-1}(1-t) x_1 and eigenvalue 1:
    // c = q(1-t)/(q-t)
    const QQt c(IntPoly2::q() - IntPoly2::q() * IntPoly2::t(), IntPoly2::q() - IntPoly2::t());
    CHECK(e.poly == x(2, 2) + c * x(1, 2));
    CHECK(tnSpectrumMultiset(e) == expectedSpectrumMultiset({0, 1}, 2));
  }

  TEST_CASE("triangularity with unit leading coefficient") {
    for (int n = 2; n <= 3; ++n)
      for (const Monomial& mu : monomialsUpTo(n, 3)) {
        const MacdonaldE e = computeE(mu, n);
        CHECK(e.poly.coeff(padded(mu, n)) == QQt::one());
        std::set<Monomial> allowed;
        for (const Monomial& b : bruhatDownset(mu, n)) allowed.insert(b);
        for (const auto& [mono, coeff] : e.poly.terms()) CHECK(allowed.count(mono));
      }
  }

  TEST_CASE("spectrum multiset identity") {
    for (int n = 1; n <= 3; ++n)
      for (const Monomial& mu : monomialsUpTo(n, 3)) {
        const MacdonaldE e = computeE(mu, n);
        CHECK(tnSpectrumMultiset(e) == expectedSpectrumMultiset(mu, n));
      }
  }

  TEST_CASE("closed-form spectrum as a property") {
    // spectrum[i] = q^{mu_i} t^{1 - beta_mu(i)} on the padded composition
    for (int n = 1; n <= 3; ++n)
      for (const Monomial& mu : monomialsUpTo(n, 3)) {
        const MacdonaldE e = computeE(mu, n);
        const Composition p = padded(mu, n);
        for (int i = 1; i <= n; ++i)
          CHECK(e.spectrum[i - 1] == QQt::qpow(p[i - 1]) * QQt::tpow(1 - betaStat(p, i)));
      }
  }

  TEST_CASE("linear independence per degree") {
    for (int n = 2; n <= 4; ++n)
      for (int d = 1; d <= 4; ++d) {
        if (n == 4 && d == 4) continue;  // covered by the acceptance sweep
        std::vector<Monomial> all = monomialsUpTo(n, d);
        std::map<Monomial, int> colOf;
        for (const Monomial& m : all) colOf.emplace(m, static_cast<int>(colOf.size()));
        Eliminator elim(static_cast<int>(colOf.size()));
        int count = 0;
        for (const Monomial& mu : all) {
          int deg = 0;
          for (int v : mu) deg += v;
          if (deg != d) continue;
          const MacdonaldE e = computeE(mu, n);
          SparseRow row;
          for (const auto& [mono, c] : e.poly.terms()) row[colOf.at(mono)] = c;
          CHECK(elim.addRow(std::move(row)));
          ++count;
        }
        CHECK(elim.rank() == count);
      }
  }

  TEST_CASE("restriction stability, plain or t-adic") {
    // Plain stability under x_n -> 0 holds for partition-shaped indices; for
    // others the coefficients still converge t-adically (their differences
    // gain valuation with each level), which is the form of stability the
    // stable-limit construction relies on.
    for (const Composition& mu : std::vector<Composition>{{1}, {2}, {1, 1}, {2, 1}}) {
      const int lo = static_cast<int>(mu.size());
      for (int n = lo + 1; n <= lo + 2; ++n) {
        const MacdonaldE big = computeE(mu, n);
        const MacdonaldE small = computeE(mu, n - 1);
        CHECK(big.poly.restrictVars(n - 1) == small.poly);
      }
    }
    const Composition mu{0, 1};
    long prev = -1;
    for (int n = 3; n <= 5; ++n) {
      const Poly diff = computeE(mu, n).poly.restrictVars(n - 1) - computeE(mu, n - 1).poly;
      REQUIRE_FALSE(diff.isZero());
      long val = 1 << 20;
      for (const auto& [mono, c] : diff.terms()) val = std::min(val, *c.tValuation());
      CHECK(val > prev);
      prev = val;
    }
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(computeE({1, 2, 1}, 2), DomainError);
    CHECK_THROWS_AS(computeE({-1}, 2), DomainError);
  }
}
