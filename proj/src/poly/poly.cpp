#include "poly/poly.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "common/error.hpp"

namespace macdel {

bool MonoOrderDesc::operator()(const Monomial& a, const Monomial& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;  // lexicographic, x_1 heaviest
}

Poly Poly::constant(const QQt& c, int nvars) {
  Poly p(nvars);
  if (!c.isZero()) p.terms_[Monomial(nvars, 0)] = c;
  return p;
}

Poly Poly::var(int i, int nvars) {
  if (i < 1 || i > nvars) throw DomainError("Poly::var: index out of range");
  Monomial m(nvars, 0);
  m[i - 1] = 1;
  Poly p(nvars);
  p.terms_[std::move(m)] = QQt::one();
  return p;
}

Poly Poly::monomial(QQt c, Monomial exps) {
  Poly p(static_cast<int>(exps.size()));
  if (!c.isZero()) p.terms_[std::move(exps)] = std::move(c);
  return p;
}

int Poly::totalDegree() const {
  if (terms_.empty()) return -1;
  const Monomial& lead = terms_.begin()->first;
  return std::accumulate(lead.begin(), lead.end(), 0);
}

QQt Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? QQt::zero() : it->second;
}

void Poly::addTerm(const Monomial& m, const QQt& c) {
  if (c.isZero()) return;
  if (static_cast<int>(m.size()) != nvars_) throw DomainError("Poly::addTerm: exponent length mismatch");
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw DomainError("Poly: mismatched variable counts in +");
  Poly r = a;
  for (const auto& [m, c] : b.terms_) r.addTerm(m, c);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw DomainError("Poly: mismatched variable counts in *");
  Poly r(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m(a.nvars_);
      for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
      r.addTerm(m, ca * cb);
    }
  return r;
}

Poly operator*(const QQt& c, const Poly& a) {
  Poly r(a.nvars_);
  if (c.isZero()) return r;
  for (const auto& [m, cm] : a.terms_) r.terms_[m] = c * cm;
  return r;
}

Poly Poly::mulVar(int i, int pow) const {
  if (i < 1 || i > nvars_) throw DomainError("Poly::mulVar: index out of range");
  if (pow < 0) throw DomainError("Poly::mulVar: negative power");
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial m2 = m;
    m2[i - 1] += pow;
    r.terms_[std::move(m2)] = c;
  }
  return r;
}

Poly Poly::swapVars(int i) const {
  if (i < 1 || i >= nvars_) throw DomainError("Poly::swapVars: index out of range");
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial m2 = m;
    std::swap(m2[i - 1], m2[i]);
    r.terms_[std::move(m2)] = c;
  }
  return r;
}

bool Poly::symmetricIn(int i) const { return swapVars(i) == *this; }

Poly Poly::restrictVars(int m) const {
  if (m > nvars_) throw DomainError("Poly::restrictVars: target exceeds variable count");
  Poly r(m);
  for (const auto& [mono, c] : terms_) {
    bool kill = false;
    for (int j = m; j < nvars_; ++j)
      if (mono[j] > 0) {
        kill = true;
        break;
      }
    if (kill) continue;
    r.terms_[Monomial(mono.begin(), mono.begin() + m)] = c;
  }
  return r;
}

Poly Poly::extendVars(int n) const {
  if (n < nvars_) throw DomainError("Poly::extendVars: target below variable count");
  Poly r(n);
  for (const auto& [mono, c] : terms_) {
    Monomial m2 = mono;
    m2.resize(n, 0);
    r.terms_[std::move(m2)] = c;
  }
  return r;
}

std::string Poly::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.toString();
    if (cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos)
      cs = "(" + cs + ")";
    std::string vars;
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "x" + std::to_string(i + 1);
      if (m[i] > 1) vars += "^" + std::to_string(m[i]);
    }
    std::string piece;
    if (vars.empty())
      piece = cs;
    else if (cs == "1")
      piece = vars;
    else if (cs == "-1")
      piece = "-" + vars;
    else
      piece = cs + "*" + vars;
    if (first) {
      os << piece;
      first = false;
    } else if (piece[0] == '-') {
      os << " - " << piece.substr(1);
    } else {
      os << " + " << piece;
    }
  }
  return os.str();
}

std::vector<Monomial> bruhatDownset(const Composition& mu, int n) {
  const Monomial top = padded(mu, n);
  std::set<Monomial> seen{top};
  std::queue<Monomial> frontier;
  frontier.push(top);
  while (!frontier.empty()) {
    Monomial x = frontier.front();
    frontier.pop();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (x[i] < x[j]) {
          // increasing pair: the swap sits below x
          Monomial y = x;
          std::swap(y[i], y[j]);
          if (seen.insert(y).second) frontier.push(std::move(y));
        } else if (x[i] > x[j] + 1) {
          // strict gap: x = (ij)(alpha) covers alpha + e_i - e_j
          Monomial y = x;
          y[i] = x[j] + 1;
          y[j] = x[i] - 1;
          if (seen.insert(y).second) frontier.push(std::move(y));
        }
      }
  }
  // Linear extension: both cover moves strictly decrease
  // (sum of squares, sum of i*beta_i) lexicographically.
  std::vector<Monomial> out(seen.begin(), seen.end());
  auto stat = [](const Monomial& b) {
    long sq = 0, wt = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      sq += static_cast<long>(b[i]) * b[i];
      wt += static_cast<long>(i + 1) * b[i];
    }
    return std::pair<long, long>(sq, wt);
  };
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    const auto sa = stat(a), sb = stat(b);
    if (sa != sb) return sa < sb;
    return a < b;
  });
  return out;
}

}  // namespace macdel
