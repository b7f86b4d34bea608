#include <random>
#include <set>

#include "common/error.hpp"
#include "doctest.h"
#include "poly/poly.hpp"
#include "poly/sym.hpp"
#include "qt/tseries.hpp"

using namespace macdel;

namespace {

Poly x(int i, int n) { return Poly::var(i, n); }

}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("monomial symmetric polynomials") {
    CHECK(msym({1}, 3) == x(1, 3) + x(2, 3) + x(3, 3));
    CHECK(msym({2, 1}, 2) == x(1, 2) * x(1, 2) * x(2, 2) + x(1, 2) * x(2, 2) * x(2, 2));
    CHECK(msym({}, 2) == Poly::one(2));
    CHECK_THROWS_AS(msym({1, 1, 1}, 2), DomainError);
  }

  TEST_CASE("elementary and power sums") {
    CHECK(esym(2, 3) == x(1, 3) * x(2, 3) + x(1, 3) * x(3, 3) + x(2, 3) * x(3, 3));
    CHECK(esym(4, 3).isZero());
    CHECK(esym(0, 3) == Poly::one(3));
    CHECK(psym(2, 2) == x(1, 2) * x(1, 2) + x(2, 2) * x(2, 2));
  }

  TEST_CASE("symmetric constructors are s_i invariant") {
    for (int n = 2; n <= 4; ++n)
      for (int i = 1; i < n; ++i) {
        CHECK(esym(2, n).symmetricIn(i));
        CHECK(psym(3, n).symmetricIn(i));
        CHECK(msym({2, 1}, n).symmetricIn(i));
      }
  }

  TEST_CASE("Newton expansion of e_r in power sums") {
    auto table1 = eToP(1);
    REQUIRE(table1.size() == 1);
    CHECK(table1[0].first == Partition{1});
    CHECK(table1[0].second == QQt::one());

    auto table2 = eToP(2);
    for (const auto& [lam, c] : table2) {
      if (lam == Partition{1, 1}) CHECK(c == QQt::fraction(1, 2));
      if (lam == Partition{2}) CHECK(c == QQt::fraction(-1, 2));
    }
    auto table3 = eToP(3);
    for (const auto& [lam, c] : table3) {
      if (lam == Partition{1, 1, 1}) CHECK(c == QQt::fraction(1, 6));
      if (lam == Partition{2, 1}) CHECK(c == QQt::fraction(-1, 2));
      if (lam == Partition{3}) CHECK(c == QQt::fraction(1, 3));
    }

    // round-trip oracle: substituting p_m -> psym(m,n) reproduces esym(r,n)
    for (int n = 1; n <= 6; ++n)
      for (int r = 0; r <= 4; ++r) {
        Poly acc(n);
        for (const auto& [lam, c] : eToP(r)) {
          Poly prod = Poly::one(n);
          for (int part : lam) prod = prod * psym(part, n);
          acc += c * prod;
        }
        CHECK(acc == esym(r, n));
      }
  }

  TEST_CASE("restriction") {
    Poly f = x(1, 3) * x(3, 3) + x(1, 3) * x(2, 3);
    CHECK(f.restrictVars(2) == x(1, 2) * x(2, 2));
    CHECK(esym(2, 3).restrictVars(2) == esym(2, 2));
    CHECK((x(3, 3) * x(3, 3)).restrictVars(2).isZero());
    // restrict(restrict(f, m), m') == restrict(f, m')
    Poly g = esym(2, 4) + psym(3, 4);
    CHECK(g.restrictVars(3).restrictVars(2) == g.restrictVars(2));
  }

  TEST_CASE("beta statistic") {
    CHECK(betaStat({2, 1}, 1) == 2);
    CHECK(betaStat({2, 1}, 2) == 1);
    CHECK(betaStat({1}, 1) == 1);
    CHECK_THROWS_AS(betaStat({1}, 2), DomainError);

    // bijectivity onto {1..l} for random compositions
    std::mt19937 gen(7);
    for (int trial = 0; trial < 40; ++trial) {
      const int len = std::uniform_int_distribution<int>(1, 6)(gen);
      Composition nu(len);
      for (int& v : nu) v = std::uniform_int_distribution<int>(0, 4)(gen);
      std::vector<bool> hit(len + 1, false);
      for (int i = 1; i <= len; ++i) {
        const int b = betaStat(nu, i);
        REQUIRE(b >= 1);
        REQUIRE(b <= len);
        CHECK_FALSE(hit[b]);
        hit[b] = true;
      }
    }
  }

  TEST_CASE("bruhat downsets") {
    CHECK(bruhatDownset({1, 0}, 2) == std::vector<Monomial>{{1, 0}});
    CHECK(bruhatDownset({0, 1}, 2) == std::vector<Monomial>{{1, 0}, {0, 1}});
    CHECK(bruhatDownset({0, 2}, 2) == std::vector<Monomial>{{1, 1}, {2, 0}, {0, 2}});
    CHECK(bruhatDownset({1}, 1) == std::vector<Monomial>{{1}});

    // downward closure: cover moves applied to members stay inside
    std::mt19937 gen(11);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = std::uniform_int_distribution<int>(2, 4)(gen);
      Composition mu(n);
      for (int& v : mu) v = std::uniform_int_distribution<int>(0, 3)(gen);
      auto ds = bruhatDownset(mu, n);
      REQUIRE(ds.back() == padded(mu, n));
      std::set<Monomial> members(ds.begin(), ds.end());
      for (const Monomial& m : ds)
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) {
            if (m[i] < m[j]) {
              Monomial y = m;
              std::swap(y[i], y[j]);
              CHECK(members.count(y));
            } else if (m[i] > m[j] + 1) {
              Monomial y = m;
              y[i] = m[j] + 1;
              y[j] = m[i] - 1;
              CHECK(members.count(y));
            }
          }
    }
  }

  TEST_CASE("kappa evaluation") {
    // p_1[kappa_{}] = t/(1-t)
    CHECK(kappaEval(SymSpec::p(1), {}) ==
          QQt(IntPoly2::t(), IntPoly2::one() - IntPoly2::t()));
    // e_1[kappa_{(1)}] = q t + t^2/(1-t)
    QQt expect = QQt::q() * QQt::t() +
                 QQt(IntPoly2::monomial(1, 0, 2), IntPoly2::one() - IntPoly2::t());
    CHECK(kappaEval(SymSpec::e(1), {1}) == expect);
    // e_0 is the constant 1
    CHECK(kappaEval(SymSpec::e(0), {3, 1}) == QQt::one());
  }

  TEST_CASE("printed eigenvalue series of p_2 at (5,4,4,2,2,2,1,1)") {
    const QQt value = kappaEval(SymSpec::p(2), {5, 4, 4, 2, 2, 2, 1, 1});
    const TSeries s = TSeries::expand(value, 20);
    const std::vector<std::pair<int, int>> expected = {
        {2, 10}, {4, 8}, {6, 8}, {8, 4}, {10, 4}, {12, 4}, {14, 2}, {16, 2}, {18, 0}, {20, 0}};
    REQUIRE(s.coeffs().size() == expected.size());
    for (const auto& [texp, qexp] : expected) CHECK(s.coeff(texp) == QQt::qpow(qexp));
    CHECK(s.toString() ==
          "q^10*t^2 + q^8*t^4 + q^8*t^6 + q^4*t^8 + q^4*t^10 + q^4*t^12 + q^2*t^14 + "
          "q^2*t^16 + t^18 + t^20 + O(t^21)");
  }

  TEST_CASE("poly formatting") {
    Poly f = QQt::q() * QQt::t() * x(1, 3);
    CHECK(f.toString() == "q*t*x1");
    Poly g = (QQt::one() - QQt::t()) * x(3, 3) + x(1, 3) * x(1, 3);
    CHECK(g.toString() == "x1^2 + (1 - t)*x3");
    CHECK(Poly::zero(2).toString() == "0");
  }

  TEST_CASE("composition helpers") {
    CHECK(reduced({1, 0, 2, 0, 0}) == Composition{1, 0, 2});
    CHECK(isReduced(Composition{}));
    CHECK_FALSE(isReduced({1, 0}));
    CHECK(sortToPartition({0, 3, 1, 0, 3}) == Partition{3, 3, 1});
    CHECK(concat({4, 1, 2}, {5, 4, 2, 2, 1}) == Composition{4, 1, 2, 5, 4, 2, 2, 1});
    CHECK(weight({2, 0, 1}) == 3);
    CHECK(partitionsOf(4).size() == 5);
  }
}
