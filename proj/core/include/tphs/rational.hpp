#ifndef TPHS_RATIONAL_HPP
#define TPHS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "tphs/errors.hpp"

namespace tphs {

/// Exact arbitrary-precision rational number.
///
/// Thin wrapper around GMP's mpq_class that owns the canonical form
/// (gcd-reduced, positive denominator, zero is 0/1) and the textual form
/// "a/b" / "-3" / "0" used by the relation DSL and the reports.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, scalars abound
  Rational(long num, long den) {
    if (den == 0) throw DivideByZeroError();
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  /// Parses "a", "-a", or "a/b" (arbitrary precision). Throws Error on junk.
  static Rational from_string(std::string_view s);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_negative() const { return sgn(v_) < 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  /// Exact conversion to long; throws Error if not an integer that fits.
  long to_long() const;

  Rational operator-() const { return Rational(mpq_class(-v_), NoCanon{}); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivideByZeroError();
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return is_negative() ? -*this : *this; }

  /// this += a*b without a named temporary.
  void add_mul(const Rational& a, const Rational& b) { v_ += a.v_ * b.v_; }
  /// this -= a*b.
  void sub_mul(const Rational& a, const Rational& b) { v_ -= a.v_ * b.v_; }

  /// Canonical text: "num/den", integers without "/1".
  std::string str() const;

  const mpq_class& raw() const { return v_; }

 private:
  struct NoCanon {};
  Rational(mpq_class v, NoCanon) : v_(std::move(v)) {}
  mpq_class v_;
};

/// Exact Gaussian rational re + im*i: the engine's unique coefficient field.
///
/// Compact-case computations stay real; the imaginary unit only enters
/// through the noncompact twists, and verifications there assert that it
/// cancels out of every final structure constant.
struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(Rational r) : re(std::move(r)) {}  // NOLINT: implicit by design
  GaussRational(long n) : re(n) {}                 // NOLINT
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  /// The imaginary unit i.
  static GaussRational i() { return GaussRational(Rational(0), Rational(1)); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  GaussRational conj() const { return GaussRational(re, -im); }

  GaussRational operator-() const { return GaussRational(-re, -im); }
  GaussRational& operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) { return *this = *this * o; }
  GaussRational& operator/=(const GaussRational& o) { return *this = *this / o; }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    if (a.im.is_zero() && b.im.is_zero())  // the common, purely real case
      return GaussRational(a.re * b.re);
    return GaussRational(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
    return a * b.inverse();
  }

  /// Multiplicative inverse; throws DivideByZeroError on zero.
  GaussRational inverse() const {
    if (is_zero()) throw DivideByZeroError();
    Rational n = re * re + im * im;
    return GaussRational(re / n, -(im / n));
  }

  /// this += a*b, with a fast path for real operands.
  void add_mul(const GaussRational& a, const GaussRational& b) {
    if (a.im.is_zero() && b.im.is_zero()) {
      re.add_mul(a.re, b.re);
      return;
    }
    re.add_mul(a.re, b.re);
    re.sub_mul(a.im, b.im);
    im.add_mul(a.re, b.im);
    im.add_mul(a.im, b.re);
  }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

  /// Canonical text: "a/b", "c/d*i", "a/b+c/d*i", "a/b-c/d*i", or "0".
  std::string str() const;
};

}  // namespace tphs

#endif  // TPHS_RATIONAL_HPP
