#pragma once

/*
 * Exact rational scalars over GMP. Values are always canonical:
 * gcd(numerator, denominator) = 1 and denominator > 0, so equality is
 * plain value equality and printing is reproducible.
 */

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace freealg {

class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Accepts "p", "-p" or "p/q".
  static Rational from_string(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0)
      throw std::invalid_argument("malformed rational literal: '" + s + "'");
    if (v.get_den() == 0) throw std::domain_error("rational with zero denominator");
    v.canonicalize();
    Rational r;
    r.v_ = v;
    return r;
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(1) / *this;
  }

  std::string str() const { return v_.get_str(); }

private:
  mpq_class v_;
};

}  // namespace freealg
