#include "qt/tseries.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "common/error.hpp"

namespace macdel {

namespace {

// Splits p into t-homogeneous layers: layer[e] = coefficient of t^e as a
// polynomial in q, indexed from ord_t(p).
struct TLayers {
  int ord = 0;
  std::vector<IntPoly2> layers;  // in q only
};

TLayers splitT(const IntPoly2& p) {
  TLayers out;
  if (p.isZero()) return out;
  out.ord = p.ordT();
  out.layers.assign(p.degT() - out.ord + 1, IntPoly2());
  for (const auto& [e, c] : p.terms()) {
    out.layers[e.dt - out.ord] = out.layers[e.dt - out.ord] + IntPoly2::monomial(c, e.dq, 0);
  }
  return out;
}

}  // namespace

TSeries TSeries::expand(const QQt& a, int order) {
  TSeries s(order);
  if (a.isZero()) return s;
  const TLayers num = splitT(a.num());
  const TLayers den = splitT(a.den());
  const int val = num.ord - den.ord;
  if (val > order) return s;
  const int jmax = order - val;
  // Solve den * S = num layer by layer; den.layers[0] is invertible in Q(q).
  const QQt d0 = QQt(den.layers[0]);
  std::vector<QQt> coef(static_cast<std::size_t>(jmax) + 1, QQt::zero());
  for (int j = 0; j <= jmax; ++j) {
    QQt rhs = j < static_cast<int>(num.layers.size()) ? QQt(num.layers[j]) : QQt::zero();
    for (int i = 1; i <= j && i < static_cast<int>(den.layers.size()); ++i) {
      if (den.layers[i].isZero() || coef[j - i].isZero()) continue;
      rhs -= QQt(den.layers[i]) * coef[j - i];
    }
    coef[j] = rhs / d0;
    if (!coef[j].isZero()) s.coeffs_[val + j] = coef[j];
  }
  return s;
}

QQt TSeries::coeff(int texp) const {
  auto it = coeffs_.find(texp);
  return it == coeffs_.end() ? QQt::zero() : it->second;
}

void TSeries::set(int texp, const QQt& cq) {
  if (texp > order_) throw DomainError("TSeries::set: exponent beyond truncation order");
  if (cq.isZero())
    coeffs_.erase(texp);
  else
    coeffs_[texp] = cq;
}

TSeries operator+(const TSeries& a, const TSeries& b) {
  TSeries r(std::min(a.order_, b.order_));
  for (const auto& [e, c] : a.coeffs_)
    if (e <= r.order_) r.coeffs_[e] = c;
  for (const auto& [e, c] : b.coeffs_) {
    if (e > r.order_) continue;
    auto [it, fresh] = r.coeffs_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second.isZero()) r.coeffs_.erase(it);
    }
  }
  return r;
}

TSeries operator-(const TSeries& a, const TSeries& b) {
  TSeries nb(b.order_);
  for (const auto& [e, c] : b.coeffs_) nb.coeffs_[e] = -c;
  return a + nb;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
  // Valuation-aware truncation: each factor's missing tail only pollutes
  // exponents above min(a.order + val(b), b.order + val(a)).
  const int va = a.coeffs_.empty() ? 0 : a.coeffs_.begin()->first;
  const int vb = b.coeffs_.empty() ? 0 : b.coeffs_.begin()->first;
  TSeries r(std::min(a.order_ + vb, b.order_ + va));
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) {
      const int e = ea + eb;
      if (e > r.order_) continue;
      auto [it, fresh] = r.coeffs_.try_emplace(e, ca * cb);
      if (!fresh) {
        it->second += ca * cb;
        if (it->second.isZero()) r.coeffs_.erase(it);
      }
    }
  return r;
}

QQt TSeries::resum() const {
  QQt acc;
  for (const auto& [e, c] : coeffs_) acc += c * QQt::tpow(e);
  return acc;
}

std::string TSeries::toString() const {
  if (coeffs_.empty()) return "O(t^" + std::to_string(order_ + 1) + ")";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    std::string cs = c.toString();
    if (cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos)
      cs = "(" + cs + ")";
    std::string piece;
    if (e == 0) {
      piece = cs;
    } else {
      std::string tpart = e == 1 ? "t" : "t^" + std::to_string(e);
      if (cs == "1")
        piece = tpart;
      else if (cs == "-1")
        piece = "-" + tpart;
      else
        piece = cs + "*" + tpart;
    }
    if (first) {
      os << piece;
      first = false;
    } else if (!piece.empty() && piece[0] == '-') {
      os << " - " << piece.substr(1);
    } else {
      os << " + " << piece;
    }
  }
  os << " + O(t^" << order_ + 1 << ")";
  return os.str();
}

}  // namespace macdel
