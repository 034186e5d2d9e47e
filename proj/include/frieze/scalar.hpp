#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace frieze {

using Integer = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Every frieze entry is a Scalar; there is no floating point
/// anywhere in the library.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : value_(static_cast<long>(v)) {}
  Scalar(long v) : value_(v) {}
  Scalar(const Integer& v) : value_(v) {}
  /// Throws std::domain_error when den == 0.
  Scalar(const Integer& num, const Integer& den);

  /// Accepts "p" or "p/q" (optional leading '-', no whitespace).
  /// Throws std::invalid_argument on malformed text or q == 0.
  static Scalar parse(std::string_view text);

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string to_string() const;

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  Scalar abs() const;
  /// Throws std::domain_error on zero.
  Scalar reciprocal() const;

  Scalar& operator+=(const Scalar& o) { value_ += o.value_; return *this; }
  Scalar& operator-=(const Scalar& o) { value_ -= o.value_; return *this; }
  Scalar& operator*=(const Scalar& o) { value_ *= o.value_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { Scalar r; r.value_ = -value_; return r; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

inline Scalar abs(const Scalar& s) { return s.abs(); }

}  // namespace frieze
