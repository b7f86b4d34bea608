#include "ops/hecke.hpp"

#include <functional>
#include <map>

#include "common/error.hpp"

namespace macdel {

Poly applyS(int i, const Poly& f) { return f.swapVars(i); }

Poly applyX(int i, const Poly& f) { return f.mulVar(i); }

Poly applyT(int i, const Poly& f) {
  const int n = f.nvars();
  if (i < 1 || i >= n) throw DomainError("applyT: index out of range");
  const QQt oneMinusT = QQt::one() - QQt::t();
  Poly out(n);
  for (const auto& [m, c] : f.terms()) {
    const int a = m[i - 1], b = m[i];
    // s_i part
    Monomial swapped = m;
    std::swap(swapped[i - 1], swapped[i]);
    out.addTerm(swapped, c);
    if (a == b) continue;
    // x_i (x_i^a x_{i+1}^b - x_i^b x_{i+1}^a)/(x_i - x_{i+1}) summed termwise:
    // exponent pairs (j+1, a+b-1-j) for j between min(a,b) and max(a,b)-1,
    // with sign -1 when a < b.
    const QQt coeff = a > b ? oneMinusT * c : -(oneMinusT * c);
    const int lo = std::min(a, b), hi = std::max(a, b);
    for (int j = lo; j < hi; ++j) {
      Monomial mm = m;
      mm[i - 1] = j + 1;
      mm[i] = a + b - 1 - j;
      out.addTerm(mm, coeff);
    }
  }
  return out;
}

Poly applyTinv(int i, const Poly& f) {
  const QQt tinv = QQt::tpow(-1);
  return tinv * applyT(i, f) - (tinv * (QQt::one() - QQt::t())) * f;
}

Poly applyPi(const Poly& f) {
  const int n = f.nvars();
  Poly out(n);
  for (const auto& [m, c] : f.terms()) {
    Monomial mm(n);
    mm[0] = m[n - 1];
    for (int j = 1; j < n; ++j) mm[j] = m[j - 1];
    out.addTerm(mm, c * QQt::qpow(m[n - 1]));
  }
  return out;
}

Poly applyPitilde(const Poly& f) {
  const int n = f.nvars();
  Poly g = f;
  for (int i = n - 1; i >= 1; --i) g = applyTinv(i, g);
  return g.mulVar(1);
}

Poly applyRho(const Poly& f) {
  Poly out(f.nvars());
  for (const auto& [m, c] : f.terms())
    if (m[0] > 0) out.addTerm(m, c);
  return out;
}

Poly applyEps(int k, const Poly& f) {
  const int n = f.nvars();
  if (k < 0 || k >= n) throw DomainError("applyEps: requires 0 <= k < n");
  const int m = n - k;
  const long topLen = static_cast<long>(m) * (m - 1) / 2;
  // Length-ordered BFS over the Young subgroup permuting positions k+1..n,
  // extending stored images T_sigma f on the left: T_{s_i sigma} f = T_i (T_sigma f).
  std::vector<int> id(n);
  for (int j = 0; j < n; ++j) id[j] = j + 1;
  std::map<std::vector<int>, Poly> frontier{{id, f}};
  Poly acc = QQt::tpow(static_cast<int>(topLen)) * f;
  for (long len = 1; len <= topLen; ++len) {
    std::map<std::vector<int>, Poly> next;
    for (const auto& [perm, g] : frontier) {
      for (int i = k + 1; i <= n - 1; ++i) {
        // ascent test for left multiplication: value i sits before value i+1
        int posI = 0, posI1 = 0;
        for (int j = 0; j < n; ++j) {
          if (perm[j] == i) posI = j;
          if (perm[j] == i + 1) posI1 = j;
        }
        if (posI > posI1) continue;
        std::vector<int> perm2 = perm;
        std::swap(perm2[posI], perm2[posI1]);
        if (next.count(perm2)) continue;
        next.emplace(std::move(perm2), applyT(i, g));
      }
    }
    const QQt weight = QQt::tpow(static_cast<int>(topLen - len));
    for (const auto& [perm, g] : next) acc += weight * g;
    frontier = std::move(next);
  }
  return (QQt::one() / tFactorial(m)) * acc;
}

Poly applyY(int i, const Poly& f) {
  const int n = f.nvars();
  if (i < 1 || i > n) throw DomainError("applyY: index out of range");
  if (i == 1) {
    Poly g = f;
    for (int j = 1; j <= n - 1; ++j) g = applyTinv(j, g);
    return applyPi(g);
  }
  return QQt::tpow(-1) * applyT(i - 1, applyY(i - 1, applyT(i - 1, f)));
}

Poly applyYtilde(int i, const Poly& f) {
  const int n = f.nvars();
  if (i < 1 || i > n) throw DomainError("applyYtilde: index out of range");
  Poly g = f;
  for (int j = i; j <= n - 1; ++j) g = applyTinv(j, g);
  g = applyRho(applyPi(g));
  for (int j = 1; j <= i - 1; ++j) g = applyT(j, g);
  return QQt::tpow(n - i + 1) * g;
}

Poly applyTWord(const std::vector<int>& word, const Poly& f) {
  Poly g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) g = applyT(*it, g);
  return g;
}

Poly applyTinvWord(const std::vector<int>& word, const Poly& f) {
  Poly g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) g = applyTinv(*it, g);
  return g;
}

QQt tFactorial(int m) {
  QQt out = QQt::one();
  const QQt oneMinusT = QQt::one() - QQt::t();
  for (int i = 1; i <= m; ++i)
    out *= QQt(IntPoly2::one() - IntPoly2::monomial(1, 0, i), IntPoly2::one()) / oneMinusT;
  return out;
}

std::vector<Monomial> monomialsUpTo(int n, int bound) {
  std::vector<Monomial> out;
  Monomial cur(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int rest) {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= rest; ++e) {
      cur[pos] = e;
      rec(pos + 1, rest - e);
    }
    cur[pos] = 0;
  };
  rec(0, bound);
  return out;
}

}  // namespace macdel
