#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace treepack {

// Arbitrary-precision rational, always reduced, denominator > 0.
// Every geometric decision in this library is made on these values;
// floating point never reaches a predicate. Construction from double
// is deleted so a float cannot sneak in by accident.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(unsigned long n) : v_(n) {}
  Rational(long num, long den);
  Rational(double) = delete;
  Rational(float) = delete;
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Accepts "12", "-7", "3/4", "-3/4", "2.625". Decimal digits after the
  // point become a power-of-ten denominator before reduction.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  bool is_integer() const { return mpz_cmp_ui(v_.get_den_mpz_t(), 1) == 0; }
  int sign() const { return sgn(v_); }

  // Rendering only; never feeds back into a predicate.
  double to_double() const { return v_.get_d(); }

  std::string str() const;

  const mpq_class& raw() const { return v_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ + b.v_), Canonical{});
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ - b.v_), Canonical{});
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ * b.v_), Canonical{});
  }
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) {
    return Rational(mpq_class(-a.v_), Canonical{});
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  struct Canonical {};
  Rational(mpq_class v, Canonical) : v_(std::move(v)) {}
  mpq_class v_;
};

Rational abs(const Rational& r);

}  // namespace treepack
