#include "stable/almostsym.hpp"

#include <sstream>

#include "common/error.hpp"
#include "macd/macdonald.hpp"
#include "ops/hecke.hpp"
#include "poly/sym.hpp"

namespace macdel {

PhiIndex::PhiIndex(Composition m, Partition l) : mu(std::move(m)), lambda(std::move(l)) {
  if (!isComposition(mu) || !isReduced(mu))
    throw DomainError("PhiIndex: mu must be a reduced composition");
  if (!isPartition(lambda)) throw DomainError("PhiIndex: lambda must be a partition");
}

std::string PhiIndex::toString() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < mu.size(); ++i) os << (i ? "," : "") << mu[i];
  os << "|";
  for (std::size_t i = 0; i < lambda.size(); ++i) os << (i ? "," : "") << lambda[i];
  os << ")";
  return os.str();
}

QQt AlmostSymExpansion::coeff(const PhiIndex& key) const {
  auto it = coeffs.find(key);
  return it == coeffs.end() ? QQt::zero() : it->second;
}

AlmostSymExpansion almostSymExpand(const Poly& f, int k) {
  const int n = f.nvars();
  if (k < 0 || k > n) throw DomainError("almostSymExpand: requires 0 <= k <= n");
  AlmostSymExpansion out;
  out.k = k;
  out.level = n;
  if (f.isZero()) return out;
  for (int i = k + 1; i <= n - 1; ++i)
    if (!f.symmetricIn(i))
      throw DomainError("almostSymExpand: input not symmetric in x_" + std::to_string(i) +
                        ", x_" + std::to_string(i + 1));
  if (n < f.totalDegree() + k)
    throw DomainError("almostSymExpand: variable count below the independence threshold");

  Poly residual = f;
  // Peel by increasing degree in x_1..x_k; within a stratum the lex-largest
  // monomial has a sorted tail and is the marker of exactly one basis element.
  // Subtracting a basis element only touches the current stratum's orbit and
  // strictly higher strata, so each stratum is cleared in one pass.
  long guard = 0;
  while (!residual.isZero()) {
    if (++guard > 100000) throw InternalError("almostSymExpand: peel did not terminate");
    const Monomial* marker = nullptr;
    int bestHead = 0;
    for (const auto& [m, c] : residual.terms()) {
      int head = 0;
      for (int i = 0; i < k; ++i) head += m[i];
      if (!marker || head < bestHead || (head == bestHead && m > *marker)) {
        marker = &m;
        bestHead = head;
      }
    }
    const Monomial a = *marker;
    for (int i = k; i + 1 < n; ++i)
      if (a[i] < a[i + 1])
        throw DomainError("almostSymExpand: no admissible marker (level below threshold)");
    Composition mu = reduced(Composition(a.begin(), a.begin() + k));
    Partition lambda;
    for (int i = k; i < n && a[i] > 0; ++i) lambda.push_back(a[i]);
    const QQt c = residual.coeff(a);

    Monomial head(n, 0);
    for (int i = 0; i < k; ++i) head[i] = a[i];
    residual -= Poly::monomial(c, head) * msym(lambda, n);
    auto [it, fresh] = out.coeffs.emplace(PhiIndex(std::move(mu), std::move(lambda)), c);
    if (!fresh) throw InternalError("almostSymExpand: marker revisited");
  }
  return out;
}

Poly expansionResum(const AlmostSymExpansion& e) {
  const int n = e.level;
  Poly acc(n);
  for (const auto& [key, c] : e.coeffs) {
    Monomial head(n, 0);
    for (std::size_t i = 0; i < key.mu.size(); ++i) head[i] = key.mu[i];
    acc += Poly::monomial(c, head) * msym(key.lambda, n);
  }
  return acc;
}

QQt weightFormula(const PhiIndex& idx, int i) {
  if (i < 1) throw DomainError("weightFormula: i must be >= 1");
  const int lm = static_cast<int>(idx.mu.size());
  if (i > lm || idx.mu[i - 1] == 0) return QQt::zero();
  const Composition nu = concat(idx.mu, idx.lambda);
  const int ll = static_cast<int>(idx.lambda.size());
  return QQt::qpow(idx.mu[i - 1]) * QQt::tpow(lm + ll + 1 - betaStat(nu, i));
}

Poly tildeELevel(const PhiIndex& idx, int n) {
  const int base = static_cast<int>(idx.mu.size() + idx.lambda.size());
  if (n < base + 1) throw DomainError("tildeELevel: level must be at least l(mu)+l(lambda)+1");
  const Composition full = concat(idx.mu, idx.lambda);
  return applyEps(static_cast<int>(idx.mu.size()), computeE(full, n).poly);
}

}  // namespace macdel
