#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hedgelab {

/// Exact rational scalar used throughout the library. Expression templates are
/// off so that `auto` locals hold values, not lazy expressions.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// A point of R^d with exact coordinates.
using Point = std::vector<Rational>;

/// Raised for malformed inputs: unknown labels, dimension mismatches, broken
/// invariants of user-supplied structures.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "num/den" or "num" (optional leading '-'). Rejects decimals and zero
/// denominators.
Rational parse_rational(std::string_view text);

/// Always "num/den", reduced, denominator positive.
std::string format_rational(const Rational& value);

/// Shorter form for human output: "num" when the denominator is 1.
std::string pretty_rational(const Rational& value);

inline double to_double(const Rational& value) { return value.convert_to<double>(); }

inline Rational dot(const Point& a, const Point& b) {
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

/// Value in Q extended with -inf and +inf. Infinite values never carry a
/// rational payload.
class ExtendedRational {
 public:
  enum class Kind { Finite, MinusInfinity, PlusInfinity };

  ExtendedRational() = default;
  ExtendedRational(Rational value) : value_(std::move(value)) {}  // NOLINT implicit on purpose
  ExtendedRational(int value) : value_(value) {}                  // NOLINT

  static ExtendedRational minus_infinity() { return ExtendedRational(Kind::MinusInfinity); }
  static ExtendedRational plus_infinity() { return ExtendedRational(Kind::PlusInfinity); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_minus_infinity() const { return kind_ == Kind::MinusInfinity; }
  bool is_plus_infinity() const { return kind_ == Kind::PlusInfinity; }

  /// Throws std::logic_error when infinite.
  const Rational& value() const;

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
  }
  friend bool operator<(const ExtendedRational& a, const ExtendedRational& b);
  friend bool operator<=(const ExtendedRational& a, const ExtendedRational& b) {
    return a < b || a == b;
  }
  friend bool operator>(const ExtendedRational& a, const ExtendedRational& b) { return b < a; }
  friend bool operator>=(const ExtendedRational& a, const ExtendedRational& b) { return b <= a; }

 private:
  explicit ExtendedRational(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::Finite;
  Rational value_ = 0;
};

/// "num/den", "-inf" or "+inf".
std::string format_extended(const ExtendedRational& value);
ExtendedRational parse_extended(std::string_view text);

}  // namespace hedgelab
