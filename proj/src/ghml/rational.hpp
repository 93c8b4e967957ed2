#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace ghml {

// Exact arithmetic everywhere: distances, bounds and verdicts are rationals,
// never floating point.
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// Parses "p", "-p" or "p/q" (q > 0). Throws Error{parse_error} otherwise.
Rational parse_rational(std::string_view text);

// Lowest terms, "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& value);

// A rational extended with +infinity, the value of an empty minimum.
// Infinity compares greater than every rational and is absorbed by min.
class ExtendedRational {
 public:
  ExtendedRational() : finite_(true), value_(0) {}
  ExtendedRational(Rational value) : finite_(true), value_(std::move(value)) {}
  ExtendedRational(int value) : finite_(true), value_(value) {}

  static ExtendedRational infinity() {
    ExtendedRational r;
    r.finite_ = false;
    return r;
  }

  bool is_finite() const { return finite_; }

  // Only valid on finite values.
  const Rational& value() const;

  // Multiplication by a positive scalar; lambda * inf = inf.
  ExtendedRational scaled(const Rational& lambda) const;

  ExtendedRational operator/(int divisor) const;

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend bool operator!=(const ExtendedRational& a, const ExtendedRational& b) { return !(a == b); }
  friend bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
    if (!a.finite_) return false;
    if (!b.finite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator>(const ExtendedRational& a, const ExtendedRational& b) { return b < a; }
  friend bool operator<=(const ExtendedRational& a, const ExtendedRational& b) { return !(b < a); }
  friend bool operator>=(const ExtendedRational& a, const ExtendedRational& b) { return !(a < b); }

  static ExtendedRational min(const ExtendedRational& a, const ExtendedRational& b) {
    return a < b ? a : b;
  }

  // "inf" or the usual rational rendering.
  std::string str() const;

 private:
  bool finite_;
  Rational value_;
};

// Parses either "inf" or a rational string.
ExtendedRational parse_extended_rational(std::string_view text);

}  // namespace ghml
