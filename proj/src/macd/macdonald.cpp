#include "macd/macdonald.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "common/error.hpp"
#include "macd/linearsolve.hpp"
#include "ops/hecke.hpp"

namespace macdel {

MacdonaldE computeE(const Composition& mu, int n) {
  if (!isComposition(mu)) throw DomainError("computeE: entries must be nonnegative");
  if (static_cast<int>(mu.size()) > n) throw DomainError("computeE: l(mu) > n");
  const std::vector<Monomial> basis = bruhatDownset(mu, n);
  const int m = static_cast<int>(basis.size());
  std::map<Monomial, int> position;
  for (int j = 0; j < m; ++j) position.emplace(basis[j], j);

  // Columns of each Y_i on the down-set span; closure is asserted on the way.
  std::vector<std::vector<SparseRow>> rows(n);  // rows[i][r]: row r of Y_{i+1}
  std::vector<QQt> diag(n);
  for (int i = 1; i <= n; ++i) {
    std::vector<SparseRow> mat(m);
    for (int j = 0; j < m; ++j) {
      const Poly img = applyY(i, Poly::monomial(QQt::one(), basis[j]));
      for (const auto& [mono, c] : img.terms()) {
        auto it = position.find(mono);
        if (it == position.end()) {
          std::ostringstream os;
          os << "computeE: Y_" << i << " image of " << Poly::monomial(QQt::one(), basis[j]).toString()
             << " leaves the Bruhat down-set span";
          throw InternalError(os.str());
        }
        mat[it->second][j] = c;
      }
    }
    diag[i - 1] = mat[m - 1].count(m - 1) ? mat[m - 1][m - 1] : QQt::zero();
    rows[i - 1] = std::move(mat);
  }

  // Joint system (Y_i - y_i) v = 0 for all i, with v pinned to 1 on x^mu.
  // Every Y_i is upper triangular on the linear extension, so the stacked
  // system is a staircase: eliminate by back-substitution, with row r solved
  // from the first i whose diagonal separates basis[r] from x^mu. Correctness
  // against the full joint system is re-verified below.
  std::vector<QQt> v(m, QQt::zero());
  v[m - 1] = QQt::one();
  for (int r = m - 2; r >= 0; --r) {
    int sep = -1;
    for (int i = 0; i < n; ++i) {
      auto it = rows[i][r].find(r);
      const QQt d = it == rows[i][r].end() ? QQt::zero() : it->second;
      if (d != diag[i]) {
        sep = i;
        break;
      }
    }
    if (sep < 0)
      throw DomainError("computeE: joint kernel is not 1-dimensional (eigenvalue collision)");
    QQt rhs;
    QQt pivot = -diag[sep];
    for (const auto& [j, c] : rows[sep][r]) {
      if (j == r)
        pivot += c;
      else
        rhs -= c * v[j];
    }
    v[r] = rhs / pivot;
  }

  MacdonaldE out;
  out.mu = mu;
  out.n = n;
  out.poly = Poly(n);
  for (int j = 0; j < m; ++j) out.poly.addTerm(basis[j], v[j]);
  out.spectrum = diag;

  // The solve is not trusted: re-verify the weight-vector property directly.
  for (int i = 1; i <= n; ++i) {
    if (applyY(i, out.poly) != diag[i - 1] * out.poly)
      throw InternalError("computeE: post-solve eigenvector re-verification failed");
  }
  return out;
}

namespace {

bool qqtLess(const QQt& a, const QQt& b) {
  return a.toString() < b.toString();
}

}  // namespace

std::vector<QQt> tnSpectrumMultiset(const MacdonaldE& e) {
  std::vector<QQt> out;
  out.reserve(e.spectrum.size());
  const QQt tn = QQt::tpow(e.n);
  for (const QQt& y : e.spectrum) out.push_back(tn * y);
  std::sort(out.begin(), out.end(), qqtLess);
  return out;
}

std::vector<QQt> expectedSpectrumMultiset(const Composition& mu, int n) {
  Partition s = sortToPartition(mu);
  s.resize(n, 0);
  std::vector<QQt> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) out.push_back(QQt::qpow(s[i - 1]) * QQt::tpow(i));
  std::sort(out.begin(), out.end(), qqtLess);
  return out;
}

}  // namespace macdel
