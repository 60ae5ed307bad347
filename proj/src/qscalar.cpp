#include "qv/qscalar.hpp"

#include <cmath>
#include <sstream>

namespace qv {

namespace {
BigInt int_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}
}  // namespace

ZPoly ZPoly::q_to(int k) {
  ZPoly p;
  p.c.assign(static_cast<size_t>(k) + 1, BigInt(0));
  p.c.back() = 1;
  return p;
}

void ZPoly::normalize() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

BigInt ZPoly::content() const {
  BigInt g = 0;
  for (const auto& x : c) g = int_gcd(g, x);
  return g;
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
  ZPoly r;
  r.c.resize(std::max(c.size(), o.c.size()), BigInt(0));
  for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
  for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
  r.normalize();
  return r;
}

ZPoly ZPoly::operator-(const ZPoly& o) const { return *this + (-o); }

ZPoly ZPoly::operator-() const {
  ZPoly r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  ZPoly r;
  r.c.assign(c.size() + o.c.size() - 1, BigInt(0));
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
  r.normalize();
  return r;
}

double ZPoly::eval(double q) const {
  double r = 0.0;
  for (size_t i = c.size(); i-- > 0;) r = r * q + c[i].convert_to<double>();
  return r;
}

BigInt ZPoly::eval_one() const {
  BigInt s = 0;
  for (const auto& x : c) s += x;
  return s;
}

ZPoly ZPoly::divexact(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw std::domain_error("ZPoly::divexact by zero");
  if (a.is_zero()) return {};
  ZPoly rem = a, quot;
  quot.c.assign(a.c.size() - b.c.size() + 1, BigInt(0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int k = rem.degree() - b.degree();
    BigInt qc = rem.lc() / b.lc();
    if (qc * b.lc() != rem.lc()) throw std::domain_error("ZPoly::divexact: not divisible");
    quot.c[static_cast<size_t>(k)] = qc;
    for (size_t i = 0; i < b.c.size(); ++i)
      rem.c[static_cast<size_t>(k) + i] -= qc * b.c[i];
    rem.normalize();
  }
  if (!rem.is_zero()) throw std::domain_error("ZPoly::divexact: nonzero remainder");
  quot.normalize();
  return quot;
}

ZPoly ZPoly::gcd(ZPoly a, ZPoly b) {
  auto primitive = [](ZPoly p) {
    BigInt ct = p.content();
    if (ct > 1)
      for (auto& x : p.c) x /= ct;
    if (!p.is_zero() && p.lc() < 0)
      for (auto& x : p.c) x = -x;
    return p;
  };
  a = primitive(std::move(a));
  b = primitive(std::move(b));
  while (!b.is_zero()) {
    // pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b
    if (a.degree() < b.degree()) std::swap(a, b);
    ZPoly rem = a;
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      int k = rem.degree() - b.degree();
      BigInt f = rem.lc();
      for (auto& x : rem.c) x *= b.lc();
      for (size_t i = 0; i < b.c.size(); ++i)
        rem.c[static_cast<size_t>(k) + i] -= f * b.c[i];
      rem.normalize();
    }
    a = std::move(b);
    b = primitive(std::move(rem));
  }
  return a;
}

QScalar::QScalar(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("QScalar: zero denominator");
  reduce();
}

QScalar QScalar::qpow(int k) {
  if (k >= 0) return QScalar(ZPoly::q_to(k), ZPoly::one());
  return QScalar(ZPoly::one(), ZPoly::q_to(-k));
}

QScalar QScalar::ratio(BigInt num, BigInt den) {
  return QScalar(ZPoly(std::move(num)), ZPoly(std::move(den)));
}

void QScalar::reduce() {
  if (num_.is_zero()) {
    den_ = ZPoly::one();
    return;
  }
  ZPoly g = ZPoly::gcd(num_, den_);
  if (g.degree() > 0 || (g.degree() == 0 && g.lc() != 1)) {
    // divide out the primitive polynomial part only; integer content handled below
    if (g.degree() > 0) {
      num_ = ZPoly::divexact(num_, g);
      den_ = ZPoly::divexact(den_, g);
    }
  }
  BigInt cn = num_.content(), cd = den_.content();
  BigInt ig = [&] {
    BigInt x = cn < 0 ? -cn : cn, y = cd < 0 ? -cd : cd;
    while (y != 0) {
      BigInt t = x % y;
      x = y;
      y = t;
    }
    return x;
  }();
  if (ig > 1) {
    for (auto& x : num_.c) x /= ig;
    for (auto& x : den_.c) x /= ig;
  }
  if (den_.lc() < 0) {
    for (auto& x : num_.c) x = -x;
    for (auto& x : den_.c) x = -x;
  }
}

QScalar QScalar::operator+(const QScalar& o) const {
  return QScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QScalar QScalar::operator-(const QScalar& o) const {
  return QScalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

QScalar QScalar::operator*(const QScalar& o) const {
  return QScalar(num_ * o.num_, den_ * o.den_);
}

QScalar QScalar::operator-() const {
  QScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

QScalar QScalar::inv() const {
  if (is_zero()) throw std::domain_error("QScalar::inv of zero");
  return QScalar(den_, num_);
}

double QScalar::eval(double q) const {
  double d = den_.eval(q);
  if (std::abs(d) < 1e-100)
    throw PoleAtQ("scalar denominator vanishes at q=" + std::to_string(q));
  return num_.eval(q) / d;
}

QScalar QScalar::at_one() const {
  BigInt d = den_.eval_one();
  if (d == 0) throw PoleAtQ("scalar denominator vanishes at q=1");
  return QScalar(ZPoly(num_.eval_one()), ZPoly(d));
}

namespace {
std::string zpoly_str(const ZPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < p.c.size(); ++i) {
    if (p.c[i] == 0) continue;
    BigInt a = p.c[i];
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      if (a < 0) {
        os << " - ";
        a = -a;
      } else {
        os << " + ";
      }
    }
    if (a != 1 || i == 0) os << a.str();
    if (i > 0) {
      if (a != 1) os << " ";
      os << "q";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}
}  // namespace

std::string QScalar::str() const {
  if (den_ == ZPoly::one()) {
    if (num_.is_zero() || num_.degree() == 0) return zpoly_str(num_);
    return "(" + zpoly_str(num_) + ")";
  }
  return "(" + zpoly_str(num_) + ")/(" + zpoly_str(den_) + ")";
}

Coeff Coeff::inv() const {
  QScalar n2 = re * re + im * im;
  if (n2.is_zero()) throw std::domain_error("Coeff::inv of zero");
  QScalar s = n2.inv();
  return {re * s, -im * s};
}

std::string Coeff::str() const {
  if (im.is_zero()) return re.str();
  if (re.is_zero()) return im.str() + " i";
  return "(" + re.str() + " + " + im.str() + " i)";
}

}  // namespace qv
