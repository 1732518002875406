#include "hedgelab/rational.hpp"

#include <cctype>

namespace hedgelab {

namespace {

bool all_digits(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                               : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw InputError("malformed rational \"" + original + "\" (expected \"num/den\")");
  }
  boost::multiprecision::mpz_int n{std::string(num)};
  boost::multiprecision::mpz_int d{std::string(den)};
  if (d == 0) throw InputError("zero denominator in \"" + original + "\"");
  if (negative) n = -n;
  return Rational(n, d);
}

std::string format_rational(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string pretty_rational(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return format_rational(value);
}

const Rational& ExtendedRational::value() const {
  if (kind_ != Kind::Finite) throw std::logic_error("value() on an infinite ExtendedRational");
  return value_;
}

bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
  using K = ExtendedRational::Kind;
  if (a.kind_ == K::Finite && b.kind_ == K::Finite) return a.value_ < b.value_;
  if (a.kind_ == b.kind_) return false;
  return a.kind_ == K::MinusInfinity || b.kind_ == K::PlusInfinity;
}

std::string format_extended(const ExtendedRational& value) {
  if (value.is_minus_infinity()) return "-inf";
  if (value.is_plus_infinity()) return "+inf";
  return format_rational(value.value());
}

ExtendedRational parse_extended(std::string_view text) {
  if (text == "-inf") return ExtendedRational::minus_infinity();
  if (text == "+inf" || text == "inf") return ExtendedRational::plus_infinity();
  return parse_rational(text);
}

}  // namespace hedgelab
