#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "redop/error.hpp"

namespace redop {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational coefficient. Always kept in lowest terms with a positive
/// denominator; the engine never touches floating point.
class Scalar {
public:
  Scalar() = default;
  Scalar(long long n) : v_(n) {}
  Scalar(const Integer& n) : v_(n) {}
  Scalar(const Integer& num, const Integer& den) {
    if (den == 0)
      throw Error("scalar with zero denominator");
    v_ = Rational(num, den);
  }

  /// 2^exponent, exponent may be negative.
  static Scalar pow2(long exponent);

  /// Accepts "p", "-p", "p/q" and the symbolic form "2^-k" / "2^k".
  static std::optional<Scalar> parse(std::string_view text);

  Integer numerator() const { return boost::multiprecision::numerator(v_); }
  Integer denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_negative() const { return v_ < 0; }
  bool is_integer() const { return denominator() == 1; }

  Scalar operator-() const { return Scalar(Rational(-v_)); }

  Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
  Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
  Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero())
      throw Error("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { a += b; return a; }
  friend Scalar operator-(Scalar a, const Scalar& b) { a -= b; return a; }
  friend Scalar operator*(Scalar a, const Scalar& b) { a *= b; return a; }
  friend Scalar operator/(Scalar a, const Scalar& b) { a /= b; return a; }

  Scalar reciprocal() const {
    if (is_zero())
      throw Error("division by zero");
    return Scalar(Rational(1) / v_);
  }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return a.v_ >= b.v_; }

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.str();
  }

private:
  using Rational = boost::multiprecision::cpp_rational;
  explicit Scalar(Rational v) : v_(std::move(v)) {}

  Rational v_;
};

} // namespace redop
