#include "ghml/rational.hpp"

#include "ghml/error.hpp"

#include <cctype>

namespace ghml {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trimmed(text);
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);

  std::string_view num = body;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(den))
      fail(Errc::parse_error, "invalid rational \"" + std::string(text) + "\": bad denominator");
    if (den.find_first_not_of('0') == std::string_view::npos)
      fail(Errc::parse_error, "invalid rational \"" + std::string(text) + "\": zero denominator");
  }
  if (!all_digits(num))
    fail(Errc::parse_error, "invalid rational \"" + std::string(text) + "\"");

  if (s.front() == '+') s.remove_prefix(1);
  return Rational(std::string(s));
}

std::string to_string(const Rational& value) { return value.str(); }

const Rational& ExtendedRational::value() const {
  if (!finite_) fail(Errc::internal_error, "value() on infinite ExtendedRational");
  return value_;
}

ExtendedRational ExtendedRational::scaled(const Rational& lambda) const {
  if (lambda <= 0) fail(Errc::nonpositive_scale, "scale factor must be positive");
  if (!finite_) return *this;
  return ExtendedRational(value_ * lambda);
}

ExtendedRational ExtendedRational::operator/(int divisor) const {
  if (divisor <= 0) fail(Errc::internal_error, "division by nonpositive integer");
  if (!finite_) return *this;
  return ExtendedRational(value_ / divisor);
}

std::string ExtendedRational::str() const { return finite_ ? value_.str() : "inf"; }

ExtendedRational parse_extended_rational(std::string_view text) {
  if (trimmed(text) == "inf") return ExtendedRational::infinity();
  return ExtendedRational(parse_rational(text));
}

}  // namespace ghml
