#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qv {

using BigInt = boost::multiprecision::cpp_int;

struct PoleAtQ : std::runtime_error {
  explicit PoleAtQ(const std::string& msg) : std::runtime_error(msg) {}
};

// Dense polynomial in q with integer coefficients; c[i] is the coefficient of q^i.
struct ZPoly {
  std::vector<BigInt> c;

  ZPoly() = default;
  explicit ZPoly(BigInt k) {
    if (k != 0) c.push_back(std::move(k));
  }
  static ZPoly one() { return ZPoly(BigInt(1)); }
  static ZPoly q_to(int k);  // q^k, k >= 0

  void normalize();
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  const BigInt& lc() const { return c.back(); }
  BigInt content() const;  // gcd of coefficients, > 0 (0 for zero poly)

  ZPoly operator+(const ZPoly&) const;
  ZPoly operator-(const ZPoly&) const;
  ZPoly operator*(const ZPoly&) const;
  ZPoly operator-() const;
  bool operator==(const ZPoly&) const = default;

  double eval(double q) const;
  BigInt eval_one() const;  // sum of coefficients

  static ZPoly divexact(const ZPoly& a, const ZPoly& b);  // requires exact division
  static ZPoly gcd(ZPoly a, ZPoly b);                     // primitive, lc > 0
};

// Exact rational function of the formal parameter q.
// Invariant: reduced (gcd(num, den) is constant, integer content coprime),
// den nonzero with positive leading coefficient.
class QScalar {
 public:
  QScalar() : num_(), den_(ZPoly::one()) {}
  QScalar(long k) : num_(BigInt(k)), den_(ZPoly::one()) {}  // NOLINT: implicit by design
  QScalar(ZPoly num, ZPoly den);
  static QScalar qpow(int k);  // q^k for any integer k
  static QScalar ratio(BigInt num, BigInt den);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }

  QScalar operator+(const QScalar&) const;
  QScalar operator-(const QScalar&) const;
  QScalar operator*(const QScalar&) const;
  QScalar operator-() const;
  QScalar inv() const;  // throws std::domain_error on zero
  QScalar& operator+=(const QScalar& o) { return *this = *this + o; }
  QScalar& operator*=(const QScalar& o) { return *this = *this * o; }
  bool operator==(const QScalar&) const = default;

  double eval(double q) const;  // throws PoleAtQ when the denominator vanishes
  QScalar at_one() const;       // exact specialization q := 1

  const ZPoly& num() const { return num_; }
  const ZPoly& den() const { return den_; }

  std::string str() const;  // parseable by the DSL expression grammar

 private:
  void reduce();
  ZPoly num_, den_;
};

// Complex scalar with rational-in-q real and imaginary parts.
struct Coeff {
  QScalar re, im;

  Coeff() = default;
  Coeff(QScalar r) : re(std::move(r)) {}  // NOLINT
  Coeff(QScalar r, QScalar i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  Coeff conj() const { return {re, -im}; }
  Coeff operator+(const Coeff& o) const { return {re + o.re, im + o.im}; }
  Coeff operator-(const Coeff& o) const { return {re - o.re, im - o.im}; }
  Coeff operator*(const Coeff& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Coeff operator-() const { return {-re, -im}; }
  Coeff inv() const;
  bool operator==(const Coeff&) const = default;

  std::complex<double> eval(double q) const { return {re.eval(q), im.eval(q)}; }
  Coeff at_one() const { return {re.at_one(), im.at_one()}; }
  std::string str() const;
};

}  // namespace qv
