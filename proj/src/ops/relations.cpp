#include "ops/relations.hpp"

#include <functional>
#include <sstream>

#include "ops/hecke.hpp"

namespace macdel {

bool RelationReport::allPass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

using PolyOp = std::function<Poly(const Poly&)>;

void checkPair(RelationReport& report, const std::string& name,
               const std::vector<Monomial>& basis, int n, const PolyOp& lhs,
               const PolyOp& rhs) {
  RelationCheck entry{name, true, ""};
  for (const Monomial& m : basis) {
    const Poly f = Poly::monomial(QQt::one(), m);
    const Poly diff = lhs(f) - rhs(f);
    if (!diff.isZero()) {
      entry.pass = false;
      std::ostringstream os;
      os << "input " << f.toString() << ", difference " << diff.toString();
      entry.witness = os.str();
      break;
    }
  }
  report.checks.push_back(std::move(entry));
  (void)n;
}

}  // namespace

RelationReport checkDahaRelations(int n, int degreeBound) {
  RelationReport report{n, degreeBound, {}};
  const auto basis = monomialsUpTo(n, degreeBound);
  const QQt t = QQt::t(), q = QQt::q();

  // (i) quadratic, braid, distant commutation of the T_i
  for (int i = 1; i <= n - 1; ++i) {
    checkPair(
        report, "(T" + std::to_string(i) + " - 1)(T" + std::to_string(i) + " + t) = 0", basis, n,
        [&, i](const Poly& f) {
          const Poly tf = applyT(i, f);
          return applyT(i, tf) + (t - QQt::one()) * tf - t * f;
        },
        [](const Poly& f) { return Poly::zero(f.nvars()); });
  }
  for (int i = 1; i + 1 <= n - 1; ++i) {
    checkPair(
        report, "braid T" + std::to_string(i) + ",T" + std::to_string(i + 1), basis, n,
        [i](const Poly& f) { return applyT(i, applyT(i + 1, applyT(i, f))); },
        [i](const Poly& f) { return applyT(i + 1, applyT(i, applyT(i + 1, f))); });
  }
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j) {
      checkPair(
          report, "T" + std::to_string(i) + " T" + std::to_string(j) + " commute", basis, n,
          [i, j](const Poly& f) { return applyT(i, applyT(j, f)); },
          [i, j](const Poly& f) { return applyT(j, applyT(i, f)); });
    }

  // (ii) T_i^{-1} X_i T_i^{-1} = t^{-1} X_{i+1} and X commutations
  for (int i = 1; i <= n - 1; ++i) {
    checkPair(
        report, "T" + std::to_string(i) + "^-1 X" + std::to_string(i) + " T" + std::to_string(i) +
                    "^-1 = t^-1 X" + std::to_string(i + 1),
        basis, n,
        [i](const Poly& f) { return applyTinv(i, applyX(i, applyTinv(i, f))); },
        [&, i](const Poly& f) { return QQt::tpow(-1) * applyX(i + 1, f); });
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == i + 1) continue;
      checkPair(
          report, "T" + std::to_string(i) + " X" + std::to_string(j) + " commute", basis, n,
          [i, j](const Poly& f) { return applyT(i, applyX(j, f)); },
          [i, j](const Poly& f) { return applyX(j, applyT(i, f)); });
    }
  }

  // (iii) T_i Y_i T_i = t Y_{i+1} and Y commutations
  for (int i = 1; i <= n - 1; ++i) {
    checkPair(
        report, "T" + std::to_string(i) + " Y" + std::to_string(i) + " T" + std::to_string(i) +
                    " = t Y" + std::to_string(i + 1),
        basis, n,
        [i](const Poly& f) { return applyT(i, applyY(i, applyT(i, f))); },
        [&, i](const Poly& f) { return t * applyY(i + 1, f); });
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == i + 1) continue;
      checkPair(
          report, "T" + std::to_string(i) + " Y" + std::to_string(j) + " commute", basis, n,
          [i, j](const Poly& f) { return applyT(i, applyY(j, f)); },
          [i, j](const Poly& f) { return applyY(j, applyT(i, f)); });
    }
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      checkPair(
          report, "Y" + std::to_string(i) + " Y" + std::to_string(j) + " commute", basis, n,
          [i, j](const Poly& f) { return applyY(i, applyY(j, f)); },
          [i, j](const Poly& f) { return applyY(j, applyY(i, f)); });
    }

  // (iv) Y_1 T_1 X_1 = X_2 Y_1 T_1
  if (n >= 2) {
    checkPair(
        report, "Y1 T1 X1 = X2 Y1 T1", basis, n,
        [](const Poly& f) { return applyY(1, applyT(1, applyX(1, f))); },
        [](const Poly& f) { return applyX(2, applyY(1, applyT(1, f))); });
  }

  // (v) Y_1 X_1...X_n = q X_1...X_n Y_1
  checkPair(
      report, "Y1 X1..Xn = q X1..Xn Y1", basis, n,
      [n](const Poly& f) {
        Poly g = f;
        for (int j = 1; j <= n; ++j) g = applyX(j, g);
        return applyY(1, g);
      },
      [&, n](const Poly& f) {
        Poly g = applyY(1, f);
        for (int j = 1; j <= n; ++j) g = applyX(j, g);
        return q * g;
      });

  return report;
}

}  // namespace macdel
