#include "qt/intpoly2.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "common/error.hpp"

namespace macdel {

int compareQT(const QTExp& a, const QTExp& b) {
  const int ga = a.dq + a.dt, gb = b.dq + b.dt;
  if (ga != gb) return ga < gb ? -1 : 1;
  if (a.dt != b.dt) return a.dt < b.dt ? -1 : 1;
  if (a.dq != b.dq) return a.dq < b.dq ? -1 : 1;
  return 0;
}

namespace {

struct QTExpLess {
  bool operator()(const QTExp& a, const QTExp& b) const { return compareQT(a, b) < 0; }
};

std::vector<IntPoly2::Term> normalizeTerms(std::vector<IntPoly2::Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const IntPoly2::Term& a, const IntPoly2::Term& b) {
    return compareQT(a.first, b.first) < 0;
  });
  std::vector<IntPoly2::Term> out;
  out.reserve(terms.size());
  for (auto& tm : terms) {
    if (!out.empty() && out.back().first == tm.first) {
      out.back().second += tm.second;
      if (out.back().second == 0) out.pop_back();
    } else if (tm.second != 0) {
      out.push_back(std::move(tm));
    }
  }
  return out;
}

// ---- dense univariate helpers over Z (exponent = t-degree) ----

using UniZ = std::vector<mpz_class>;

void uniTrim(UniZ& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int uniDeg(const UniZ& a) { return static_cast<int>(a.size()) - 1; }

bool uniIsZero(const UniZ& a) { return a.empty(); }

mpz_class uniContent(const UniZ& a) {
  mpz_class c = 0;
  for (const auto& x : a) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
  return c;
}

UniZ uniScaleDiv(const UniZ& a, const mpz_class& c) {
  UniZ r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_class q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), a[i].get_mpz_t(), c.get_mpz_t());
    if (rem != 0) throw InternalError("uniScaleDiv: inexact integer division");
    r[i] = q;
  }
  return r;
}

UniZ uniScale(const UniZ& a, const mpz_class& c) {
  if (c == 0) return {};
  UniZ r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

UniZ uniPrimitive(const UniZ& a) {
  if (uniIsZero(a)) return {};
  mpz_class c = uniContent(a);
  if (a.back() < 0) c = -c;
  return uniScaleDiv(a, c);
}

UniZ uniMul(const UniZ& a, const UniZ& b) {
  if (uniIsZero(a) || uniIsZero(b)) return {};
  UniZ r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  uniTrim(r);
  return r;
}

UniZ uniSub(const UniZ& a, const UniZ& b) {
  UniZ r = a;
  if (r.size() < b.size()) r.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  uniTrim(r);
  return r;
}

// Exact division; throws if a remainder survives.
UniZ uniDivExact(const UniZ& a, const UniZ& b) {
  if (uniIsZero(b)) throw InternalError("uniDivExact: division by zero");
  if (uniIsZero(a)) return {};
  UniZ rem = a;
  const int db = uniDeg(b);
  int dr = uniDeg(rem);
  if (dr < db) throw InternalError("uniDivExact: degree too small");
  UniZ quot(dr - db + 1);
  while (!uniIsZero(rem) && (dr = uniDeg(rem)) >= db) {
    mpz_class q, r2;
    mpz_tdiv_qr(q.get_mpz_t(), r2.get_mpz_t(), rem[dr].get_mpz_t(), b[db].get_mpz_t());
    if (r2 != 0) throw InternalError("uniDivExact: leading coefficient not divisible");
    quot[dr - db] = q;
    for (int i = 0; i <= db; ++i) rem[dr - db + i] -= q * b[i];
    uniTrim(rem);
  }
  if (!uniIsZero(rem)) throw InternalError("uniDivExact: nonzero remainder");
  return quot;
}

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
UniZ uniPseudoRem(UniZ a, const UniZ& b) {
  const int db = uniDeg(b);
  const mpz_class& lb = b[db];
  int da = uniDeg(a);
  int steps = da - db + 1;
  while (!uniIsZero(a) && (da = uniDeg(a)) >= db) {
    const mpz_class la = a[da];
    a = uniScale(a, lb);
    for (int i = 0; i <= db; ++i) a[da - db + i] -= la * b[i];
    uniTrim(a);
    --steps;
  }
  for (; steps > 0; --steps) a = uniScale(a, lb);
  return a;
}

UniZ uniGcd(UniZ a, UniZ b) {
  if (uniIsZero(a) && uniIsZero(b)) return {};
  if (uniIsZero(a)) return b.back() < 0 ? uniScale(b, -1) : b;
  if (uniIsZero(b)) return a.back() < 0 ? uniScale(a, -1) : a;
  mpz_class ca = uniContent(a), cb = uniContent(b);
  mpz_class cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = uniPrimitive(a);
  b = uniPrimitive(b);
  if (uniDeg(a) < uniDeg(b)) std::swap(a, b);
  while (true) {
    UniZ r = uniPseudoRem(a, b);
    if (uniIsZero(r)) break;
    if (uniDeg(r) == 0) {
      b = {mpz_class(1)};
      break;
    }
    a = std::move(b);
    b = uniPrimitive(r);
  }
  UniZ g = uniScale(b, cg);
  uniTrim(g);
  return g;
}

// ---- dense bivariate: polynomials in q with Z[t] coefficients ----

using BivQ = std::vector<UniZ>;  // index = q-degree

void bivTrim(BivQ& a) {
  while (!a.empty() && uniIsZero(a.back())) a.pop_back();
}

int bivDegQ(const BivQ& a) { return static_cast<int>(a.size()) - 1; }

bool bivIsZero(const BivQ& a) { return a.empty(); }

UniZ bivContent(const BivQ& a) {
  UniZ c;
  for (const auto& u : a)
    if (!uniIsZero(u)) c = uniGcd(c, u);
  return c;
}

BivQ bivMapCoeffs(const BivQ& a, const auto& f) {
  BivQ r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f(a[i]);
  bivTrim(r);
  return r;
}

BivQ bivPrimitive(const BivQ& a, UniZ* contentOut = nullptr) {
  if (bivIsZero(a)) {
    if (contentOut) contentOut->clear();
    return {};
  }
  UniZ c = bivContent(a);
  if (contentOut) *contentOut = c;
  return bivMapCoeffs(a, [&](const UniZ& u) { return uniIsZero(u) ? UniZ{} : uniDivExact(u, c); });
}

BivQ bivScaleUni(const BivQ& a, const UniZ& c) {
  if (uniIsZero(c)) return {};
  return bivMapCoeffs(a, [&](const UniZ& u) { return uniMul(u, c); });
}

// Pseudo-remainder in q with Z[t] coefficient arithmetic.
BivQ bivPseudoRem(BivQ a, const BivQ& b) {
  const int db = bivDegQ(b);
  const UniZ& lb = b[db];
  int da = bivDegQ(a);
  int steps = da - db + 1;
  while (!bivIsZero(a) && (da = bivDegQ(a)) >= db) {
    const UniZ la = a[da];
    a = bivScaleUni(a, lb);
    for (int i = 0; i <= db; ++i) a[da - db + i] = uniSub(a[da - db + i], uniMul(la, b[i]));
    bivTrim(a);
    --steps;
  }
  for (; steps > 0; --steps) a = bivScaleUni(a, lb);
  return a;
}

BivQ bivGcd(BivQ a, BivQ b) {
  if (bivIsZero(a)) return b;
  if (bivIsZero(b)) return a;
  UniZ ca, cb;
  a = bivPrimitive(a, &ca);
  b = bivPrimitive(b, &cb);
  UniZ cg = uniGcd(ca, cb);
  if (bivDegQ(a) < bivDegQ(b)) std::swap(a, b);
  while (bivDegQ(b) > 0) {
    BivQ r = bivPseudoRem(a, b);
    if (bivIsZero(r)) break;
    if (bivDegQ(r) == 0) {
      b = {UniZ{mpz_class(1)}};
      break;
    }
    a = std::move(b);
    b = bivPrimitive(r);
  }
  // A q-constant survivor is a unit here: both operands are primitive, so any
  // common divisor of q-degree 0 divides their contents, which are 1.
  if (bivDegQ(b) == 0) b = {UniZ{mpz_class(1)}};
  return bivScaleUni(b, cg);
}

}  // namespace

IntPoly2::IntPoly2(long c) {
  if (c != 0) terms_.push_back({QTExp{0, 0}, mpz_class(c)});
}

IntPoly2::IntPoly2(const mpz_class& c) {
  if (c != 0) terms_.push_back({QTExp{0, 0}, c});
}

IntPoly2 IntPoly2::monomial(mpz_class c, int dq, int dt) {
  IntPoly2 p;
  if (c != 0) p.terms_.push_back({QTExp{dq, dt}, std::move(c)});
  return p;
}

IntPoly2 IntPoly2::fromTerms(std::vector<Term> terms) {
  IntPoly2 p;
  p.terms_ = normalizeTerms(std::move(terms));
  return p;
}

const IntPoly2& IntPoly2::zero() {
  static const IntPoly2 z;
  return z;
}
const IntPoly2& IntPoly2::one() {
  static const IntPoly2 o(1L);
  return o;
}
const IntPoly2& IntPoly2::q() {
  static const IntPoly2 p = monomial(1, 1, 0);
  return p;
}
const IntPoly2& IntPoly2::t() {
  static const IntPoly2 p = monomial(1, 0, 1);
  return p;
}

bool IntPoly2::isOne() const {
  return terms_.size() == 1 && terms_[0].first == QTExp{0, 0} && terms_[0].second == 1;
}

bool IntPoly2::isConstant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == QTExp{0, 0});
}

int IntPoly2::degQ() const {
  int d = -1;
  for (const auto& tm : terms_) d = std::max(d, static_cast<int>(tm.first.dq));
  return d;
}

int IntPoly2::degT() const {
  int d = -1;
  for (const auto& tm : terms_) d = std::max(d, static_cast<int>(tm.first.dt));
  return d;
}

int IntPoly2::ordT() const {
  if (terms_.empty()) return 0;
  int d = terms_[0].first.dt;
  for (const auto& tm : terms_) d = std::min(d, static_cast<int>(tm.first.dt));
  return d;
}

mpz_class IntPoly2::content() const {
  mpz_class c = 0;
  for (const auto& tm : terms_) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), tm.second.get_mpz_t());
  return c;
}

int IntPoly2::signLow() const {
  if (terms_.empty()) return 0;
  return sgn(terms_[0].second);
}

IntPoly2 IntPoly2::operator-() const {
  IntPoly2 r = *this;
  for (auto& tm : r.terms_) tm.second = -tm.second;
  return r;
}

IntPoly2 operator+(const IntPoly2& a, const IntPoly2& b) {
  std::vector<IntPoly2::Term> merged;
  merged.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    const int c = compareQT(a.terms_[i].first, b.terms_[j].first);
    if (c < 0) {
      merged.push_back(a.terms_[i++]);
    } else if (c > 0) {
      merged.push_back(b.terms_[j++]);
    } else {
      mpz_class s = a.terms_[i].second + b.terms_[j].second;
      if (s != 0) merged.push_back({a.terms_[i].first, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) merged.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) merged.push_back(b.terms_[j]);
  IntPoly2 r;
  r.terms_ = std::move(merged);
  return r;
}

IntPoly2 operator-(const IntPoly2& a, const IntPoly2& b) { return a + (-b); }

IntPoly2 operator*(const IntPoly2& a, const IntPoly2& b) {
  if (a.isZero() || b.isZero()) return IntPoly2();
  if (b.terms_.size() == 1) return a.mulMonomial(b.terms_[0].second, b.terms_[0].first.dq, b.terms_[0].first.dt);
  if (a.terms_.size() == 1) return b.mulMonomial(a.terms_[0].second, a.terms_[0].first.dq, a.terms_[0].first.dt);
  std::map<QTExp, mpz_class, QTExpLess> acc;
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      QTExp e{ta.first.dq + tb.first.dq, ta.first.dt + tb.first.dt};
      acc[e] += ta.second * tb.second;
    }
  IntPoly2 r;
  r.terms_.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) r.terms_.push_back({e, std::move(c)});
  return r;
}

IntPoly2 IntPoly2::mulMonomial(const mpz_class& c, int dq, int dt) const {
  if (c == 0) return IntPoly2();
  IntPoly2 r;
  r.terms_.reserve(terms_.size());
  for (const auto& tm : terms_)
    r.terms_.push_back({QTExp{tm.first.dq + dq, tm.first.dt + dt}, tm.second * c});
  return r;
}

IntPoly2 IntPoly2::pow(unsigned e) const {
  IntPoly2 r = one();
  IntPoly2 base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1u;
  }
  return r;
}

namespace {

BivQ toDense(const IntPoly2& p) {
  BivQ d(p.degQ() + 1);
  const int dt = p.degT();
  for (auto& u : d) u.assign(dt + 1, mpz_class(0));
  for (const auto& tm : p.terms()) d[tm.first.dq][tm.first.dt] = tm.second;
  for (auto& u : d) uniTrim(u);
  bivTrim(d);
  return d;
}

IntPoly2 fromDense(const BivQ& d) {
  std::vector<IntPoly2::Term> terms;
  for (int a = 0; a < static_cast<int>(d.size()); ++a)
    for (int b = 0; b < static_cast<int>(d[a].size()); ++b)
      if (d[a][b] != 0) terms.push_back({QTExp{a, b}, d[a][b]});
  return IntPoly2::fromTerms(std::move(terms));
}

}  // namespace

IntPoly2 IntPoly2::divExact(const IntPoly2& dpoly) const {
  if (dpoly.isZero()) throw InternalError("IntPoly2::divExact: division by zero");
  if (isZero()) return IntPoly2();
  if (dpoly.isOne()) return *this;
  if (dpoly.terms_.size() == 1) {
    const auto& [e, c] = dpoly.terms_[0];
    IntPoly2 r;
    r.terms_.reserve(terms_.size());
    for (const auto& tm : terms_) {
      mpz_class qc, rem;
      mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), tm.second.get_mpz_t(), c.get_mpz_t());
      if (rem != 0 || tm.first.dq < e.dq || tm.first.dt < e.dt)
        throw InternalError("IntPoly2::divExact: monomial division not exact");
      r.terms_.push_back({QTExp{tm.first.dq - e.dq, tm.first.dt - e.dt}, std::move(qc)});
    }
    return r;
  }
  BivQ num = toDense(*this), den = toDense(dpoly);
  const int db = bivDegQ(den);
  BivQ quot(std::max(0, bivDegQ(num) - db) + 1);
  while (!bivIsZero(num)) {
    const int da = bivDegQ(num);
    if (da < db) throw InternalError("IntPoly2::divExact: nonzero remainder");
    UniZ qc = uniDivExact(num[da], den[db]);
    quot[da - db] = qc;
    for (int i = 0; i <= db; ++i) num[da - db + i] = uniSub(num[da - db + i], uniMul(qc, den[i]));
    bivTrim(num);
  }
  return fromDense(quot);
}

IntPoly2 IntPoly2::divExact(const mpz_class& c) const {
  if (c == 0) throw InternalError("IntPoly2::divExact: division by zero constant");
  IntPoly2 r;
  r.terms_.reserve(terms_.size());
  for (const auto& tm : terms_) {
    mpz_class qc, rem;
    mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), tm.second.get_mpz_t(), c.get_mpz_t());
    if (rem != 0) throw InternalError("IntPoly2::divExact: constant division not exact");
    r.terms_.push_back({tm.first, std::move(qc)});
  }
  return r;
}

namespace {

// gcd with a single term: shared integer content times the common monomial
// part.
IntPoly2 gcdWithMonomial(const IntPoly2& p, const IntPoly2::Term& mono) {
  mpz_class c = p.content();
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), mono.second.get_mpz_t());
  int mq = mono.first.dq, mt = mono.first.dt;
  for (const auto& [e, coeff] : p.terms()) {
    mq = std::min(mq, static_cast<int>(e.dq));
    mt = std::min(mt, static_cast<int>(e.dt));
    if (mq == 0 && mt == 0) break;
  }
  return IntPoly2::monomial(std::move(c), mq, mt);
}

}  // namespace

IntPoly2 IntPoly2::gcd(const IntPoly2& a, const IntPoly2& b) {
  if (a.isZero() && b.isZero()) return IntPoly2();
  IntPoly2 g;
  if (a.isZero()) {
    g = b;
  } else if (b.isZero()) {
    g = a;
  } else if (a.isMonomial()) {
    return gcdWithMonomial(b, a.terms_[0]);
  } else if (b.isMonomial()) {
    return gcdWithMonomial(a, b.terms_[0]);
  } else {
    g = fromDense(bivGcd(toDense(a), toDense(b)));
  }
  if (g.signLow() < 0) g = -g;
  return g;
}

std::string IntPoly2::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpz_class ac = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    const bool hasVars = e.dq > 0 || e.dt > 0;
    if (ac != 1 || !hasVars) {
      os << ac.get_str();
      if (hasVars) os << "*";
    }
    if (e.dq > 0) {
      os << "q";
      if (e.dq > 1) os << "^" << e.dq;
      if (e.dt > 0) os << "*";
    }
    if (e.dt > 0) {
      os << "t";
      if (e.dt > 1) os << "^" << e.dt;
    }
  }
  return os.str();
}

std::size_t IntPoly2::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (const auto& [e, c] : terms_) {
    mix(static_cast<std::size_t>(e.dq) << 32 | static_cast<std::size_t>(static_cast<uint32_t>(e.dt)));
    mix(std::hash<std::string>{}(c.get_str()));
  }
  return h;
}

}  // namespace macdel
