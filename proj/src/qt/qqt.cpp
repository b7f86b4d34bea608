#include "qt/qqt.hpp"

#include <cctype>

#include "common/error.hpp"

namespace macdel {

QQt::QQt(const IntPoly2& num, const IntPoly2& den) : num_(num), den_(den) {
  if (den_.isZero()) throw DomainError("QQt: zero denominator");
  canonicalize();
}

const QQt& QQt::zero() {
  static const QQt z;
  return z;
}

const QQt& QQt::one() {
  static const QQt o(1);
  return o;
}

QQt QQt::qpow(int e) {
  if (e >= 0) return QQt(IntPoly2::monomial(1, e, 0));
  return QQt(IntPoly2::one(), IntPoly2::monomial(1, -e, 0));
}

QQt QQt::tpow(int e) {
  if (e >= 0) return QQt(IntPoly2::monomial(1, 0, e));
  return QQt(IntPoly2::one(), IntPoly2::monomial(1, 0, -e));
}

QQt QQt::fraction(long num, long den) { return QQt(IntPoly2(num), IntPoly2(den)); }

void QQt::canonicalize() {
  if (num_.isZero()) {
    den_ = IntPoly2::one();
    return;
  }
  if (!den_.isOne()) {
    IntPoly2 g = IntPoly2::gcd(num_, den_);
    if (!g.isOne()) {
      num_ = num_.divExact(g);
      den_ = den_.divExact(g);
    }
  }
  mpz_class cn = num_.content(), cd = den_.content(), c;
  mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (c > 1) {
    num_ = num_.divExact(c);
    den_ = den_.divExact(c);
  }
  if (den_.signLow() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

QQt QQt::operator-() const {
  QQt r = *this;
  r.num_ = -r.num_;
  return r;
}

QQt operator+(const QQt& a, const QQt& b) {
  if (a.isZero()) return b;
  if (b.isZero()) return a;
  QQt r;
  if (a.den_ == b.den_) {
    r.num_ = a.num_ + b.num_;
    r.den_ = a.den_;
  } else {
    r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
    r.den_ = a.den_ * b.den_;
  }
  r.canonicalize();
  return r;
}

QQt operator-(const QQt& a, const QQt& b) { return a + (-b); }

QQt operator*(const QQt& a, const QQt& b) {
  if (a.isZero() || b.isZero()) return QQt();
  QQt r;
  if (a.den_.isOne() && b.den_.isOne()) {
    r.num_ = a.num_ * b.num_;
    r.den_ = IntPoly2::one();
    return r;  // product of coprime-with-1 pairs needs no gcd
  }
  // Cross-cancel first; inputs are canonical so the factors stay coprime.
  IntPoly2 g1 = IntPoly2::gcd(a.num_, b.den_);
  IntPoly2 g2 = IntPoly2::gcd(b.num_, a.den_);
  const IntPoly2 an = g1.isOne() ? a.num_ : a.num_.divExact(g1);
  const IntPoly2 bd = g1.isOne() ? b.den_ : b.den_.divExact(g1);
  const IntPoly2 bn = g2.isOne() ? b.num_ : b.num_.divExact(g2);
  const IntPoly2 ad = g2.isOne() ? a.den_ : a.den_.divExact(g2);
  r.num_ = an * bn;
  r.den_ = ad * bd;
  if (r.den_.signLow() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

QQt operator/(const QQt& a, const QQt& b) {
  if (b.isZero()) throw DomainError("QQt: division by zero");
  return a * b.inverse();
}

QQt QQt::inverse() const {
  if (isZero()) throw DomainError("QQt: inverse of zero");
  QQt r;
  r.num_ = den_;
  r.den_ = num_;
  if (r.den_.signLow() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

QQt QQt::pow(int e) const {
  if (e == 0) return one();
  const QQt base = e < 0 ? inverse() : *this;
  unsigned k = e < 0 ? static_cast<unsigned>(-(long)e) : static_cast<unsigned>(e);
  QQt r = one();
  QQt acc = base;
  while (k) {
    if (k & 1u) r *= acc;
    acc = acc * acc;
    k >>= 1u;
  }
  return r;
}

std::optional<long> QQt::tValuation() const {
  if (isZero()) return std::nullopt;
  return static_cast<long>(num_.ordT()) - static_cast<long>(den_.ordT());
}

std::string QQt::toString() const {
  if (den_.isOne()) return num_.toString();
  std::string n = num_.toString();
  if (num_.terms().size() > 1) n = "(" + n + ")";
  std::string d = den_.toString();
  if (den_.terms().size() > 1 || den_.terms()[0].second != 1) d = "(" + d + ")";
  return n + "/" + d;
}

std::size_t QQt::hash() const {
  return num_.hash() * 1000003u ^ den_.hash();
}

namespace {

// Minimal parser for the canonical scalar text: signed sums of c*q^a*t^b
// terms, with an optional single "/" between two (possibly parenthesized)
// such sums.
struct ScalarParser {
  std::string_view src;
  std::size_t pos = 0;

  void skipWs() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  bool eat(char c) {
    skipWs();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skipWs();
    return pos < src.size() ? src[pos] : '\0';
  }

  long parseInt() {
    skipWs();
    bool neg = false;
    if (pos < src.size() && (src[pos] == '-' || src[pos] == '+')) neg = src[pos++] == '-';
    if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
      throw ParseError("expected integer", pos);
    long v = 0;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
      v = v * 10 + (src[pos++] - '0');
    return neg ? -v : v;
  }

  mpz_class parseBigUInt() {
    skipWs();
    if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
      throw ParseError("expected integer", pos);
    std::string digits;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
      digits.push_back(src[pos++]);
    return mpz_class(digits);
  }

  // one c*q^a*t^b factor chain
  IntPoly2 parseTerm() {
    mpz_class coeff = 1;
    int dq = 0, dt = 0;
    bool any = false;
    while (true) {
      skipWs();
      if (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
        coeff *= parseBigUInt();
        any = true;
      } else if (pos < src.size() && (src[pos] == 'q' || src[pos] == 't')) {
        const char v = src[pos++];
        int e = 1;
        if (eat('^')) e = static_cast<int>(parseInt());
        if (e < 0) throw ParseError("negative exponent in polynomial term", pos);
        (v == 'q' ? dq : dt) += e;
        any = true;
      } else {
        break;
      }
      skipWs();
      if (pos < src.size() && src[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!any) throw ParseError("expected term", pos);
    return IntPoly2::monomial(coeff, dq, dt);
  }

  IntPoly2 parseSum() {
    IntPoly2 acc;
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    while (true) {
      IntPoly2 term;
      if (peek() == '(') {
        eat('(');
        term = parseSum();
        if (!eat(')')) throw ParseError("expected ')'", pos);
      } else {
        term = parseTerm();
      }
      acc = neg ? acc - term : acc + term;
      if (eat('+')) {
        neg = false;
      } else if (eat('-')) {
        neg = true;
      } else {
        break;
      }
    }
    return acc;
  }
};

}  // namespace

QQt QQt::parse(std::string_view text) {
  ScalarParser p{text};
  IntPoly2 num = p.parseSum();
  IntPoly2 den = IntPoly2::one();
  if (p.eat('/')) {
    if (p.peek() == '(') {
      p.eat('(');
      den = p.parseSum();
      if (!p.eat(')')) throw ParseError("expected ')'", p.pos);
    } else {
      den = p.parseTerm();
    }
  }
  p.skipWs();
  if (p.pos != text.size()) throw ParseError("trailing input in scalar", p.pos);
  return QQt(num, den);
}

}  // namespace macdel
