#include "poly/sym.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "common/error.hpp"

namespace macdel {

SymSpec SymSpec::e(int r) {
  if (r < 0) throw DomainError("SymSpec: negative index");
  return SymSpec{Basis::Elementary, r == 0 ? Partition{} : Partition{r}};
}

SymSpec SymSpec::p(int m) {
  if (m < 1) throw DomainError("SymSpec: power sum index must be >= 1");
  return SymSpec{Basis::PowerSum, Partition{m}};
}

SymSpec SymSpec::e(Partition lambda) {
  if (!isPartition(lambda)) throw DomainError("SymSpec: index is not a partition");
  return SymSpec{Basis::Elementary, std::move(lambda)};
}

SymSpec SymSpec::p(Partition lambda) {
  if (!isPartition(lambda)) throw DomainError("SymSpec: index is not a partition");
  return SymSpec{Basis::PowerSum, std::move(lambda)};
}

std::string SymSpec::name() const {
  const char b = basis == Basis::Elementary ? 'e' : 'p';
  if (index.empty()) return std::string(1, b) + "0";
  if (index.size() == 1) return std::string(1, b) + std::to_string(index[0]);
  std::ostringstream os;
  os << b << "[";
  for (std::size_t i = 0; i < index.size(); ++i) os << (i ? "," : "") << index[i];
  os << "]";
  return os.str();
}

Poly msym(const Partition& lambda, int n) {
  if (!isPartition(lambda)) throw DomainError("msym: index is not a partition");
  if (static_cast<int>(lambda.size()) > n)
    throw DomainError("msym: basis element not representable in this many variables");
  Monomial exps = padded(lambda, n);
  std::sort(exps.begin(), exps.end());
  Poly out(n);
  do {
    out.addTerm(exps, QQt::one());
  } while (std::next_permutation(exps.begin(), exps.end()));
  return out;
}

Poly esym(int r, int n) {
  if (r < 0) throw DomainError("esym: negative degree");
  if (r == 0) return Poly::one(n);
  if (r > n) return Poly::zero(n);
  Poly out(n);
  std::vector<int> idx(r);
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == r) {
      Monomial m(n, 0);
      for (int i : idx) m[i] = 1;
      out.addTerm(m, QQt::one());
      return;
    }
    for (int i = start; i <= n - (r - pos); ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
  return out;
}

Poly psym(int m, int n) {
  if (m < 1) throw DomainError("psym: index must be >= 1");
  Poly out(n);
  for (int i = 0; i < n; ++i) {
    Monomial mo(n, 0);
    mo[i] = m;
    out.addTerm(mo, QQt::one());
  }
  return out;
}

std::vector<std::pair<Partition, QQt>> eToP(int r) {
  if (r < 0) throw DomainError("eToP: negative degree");
  std::vector<std::pair<Partition, QQt>> out;
  for (const Partition& lam : partitionsOf(r)) {
    // e_r = sum over lambda |- r of (-1)^{r - l(lambda)} p_lambda / z_lambda,
    // z_lambda = prod of parts times multiplicity factorials
    long z = 1;
    int i = 0;
    while (i < static_cast<int>(lam.size())) {
      int j = i;
      while (j < static_cast<int>(lam.size()) && lam[j] == lam[i]) ++j;
      const int mult = j - i;
      for (int k = 0; k < mult; ++k) z *= lam[i];
      for (int k = 2; k <= mult; ++k) z *= k;
      i = j;
    }
    const long sign = (r - static_cast<int>(lam.size())) % 2 == 0 ? 1 : -1;
    out.push_back({lam, QQt::fraction(sign, z)});
  }
  if (out.empty()) out.push_back({Partition{}, QQt::one()});
  return out;
}

namespace {

QQt elementaryOnValues(int r, const std::vector<QQt>& values) {
  if (r == 0) return QQt::one();
  if (r > static_cast<int>(values.size())) return QQt::zero();
  // coefficients of prod (1 + v_i z), degree-capped at r
  std::vector<QQt> coef(static_cast<std::size_t>(r) + 1, QQt::zero());
  coef[0] = QQt::one();
  for (const QQt& v : values)
    for (int j = r; j >= 1; --j)
      if (!coef[j - 1].isZero()) coef[j] += coef[j - 1] * v;
  return coef[r];
}

QQt powerOnValues(int m, const std::vector<QQt>& values) {
  QQt s;
  for (const QQt& v : values) s += v.pow(m);
  return s;
}

}  // namespace

QQt symEvalOnValues(const SymSpec& F, const std::vector<QQt>& values) {
  QQt out = QQt::one();
  for (int part : F.index) {
    out *= F.basis == SymSpec::Basis::Elementary ? elementaryOnValues(part, values)
                                                 : powerOnValues(part, values);
  }
  return out;
}

namespace {

QQt powerKappa(int m, const Partition& nu) {
  QQt s;
  const int ell = static_cast<int>(nu.size());
  for (int i = 1; i <= ell; ++i) s += QQt::qpow(m * nu[i - 1]) * QQt::tpow(m * i);
  const IntPoly2 oneMinusTm = IntPoly2::one() - IntPoly2::monomial(1, 0, m);
  s += QQt(IntPoly2::monomial(1, 0, m * (ell + 1)), oneMinusTm);
  return s;
}

QQt elementaryKappa(int r, const Partition& nu) {
  QQt out;
  for (const auto& [lam, c] : eToP(r)) {
    QQt prod = c;
    for (int part : lam) prod *= powerKappa(part, nu);
    out += prod;
  }
  return out;
}

}  // namespace

QQt kappaEval(const SymSpec& F, const Partition& nu) {
  QQt out = QQt::one();
  for (int part : F.index)
    out *= F.basis == SymSpec::Basis::Elementary ? elementaryKappa(part, nu)
                                                 : powerKappa(part, nu);
  return out;
}

}  // namespace macdel
