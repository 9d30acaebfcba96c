#pragma once

// Exact arithmetic shared by every bound and decision in the library.
//
// Tight bounds are 64-bit integers with overflow detection. Anything that
// divides (simplified bounds, squeezing floors, measured values) is an exact
// rational. Measured values enter as decimal strings and never pass through a
// binary float on the decision path.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace youngent {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when an argument lies outside the domain of a bound or class.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when user-supplied text (CLI flag, CSV cell) cannot be parsed.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an intermediate value would leave the 64-bit range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

/// Square with overflow detection.
inline Int checked_sq(Int a) { return checked_mul(a, a); }

/// ceil(a / b) for a >= 0, b > 0.
constexpr Int ceil_div(Int a, Int b) { return (a + b - 1) / b; }

/// 10^exponent for exponent >= 0.
BigInt pow10(int exponent);

/// Smallest s with s*s >= x, x >= 0.
Int isqrt_ceil(Int x);

/// Exact decimal number: unscaled * 10^-scale.
///
/// Keeps the textual precision of measured values ("40.4" stays 404e-1) so
/// reports can echo them back verbatim and comparisons stay exact.
class Decimal {
 public:
  Decimal() = default;

  /// Accepts an optional sign, digits with an optional fractional part and an
  /// optional exponent ("40.4", "-4.5", "1e-3", ".5"). Throws InputError.
  static Decimal parse(std::string_view text);

  static Decimal from_int(Int value);

  Rational to_rational() const;
  double to_double() const;

  /// Canonical text: no exponent, no trailing fractional zeros beyond the
  /// parsed scale, leading "-" for negatives.
  std::string to_string() const;

  const BigInt& unscaled() const { return unscaled_; }
  int scale() const { return scale_; }
  bool is_negative() const { return unscaled_ < 0; }
  bool is_zero() const { return unscaled_ == 0; }

  /// this - value, exact, keeping this number's scale.
  Decimal minus_int(Int value) const;

  friend bool operator==(const Decimal& a, const Decimal& b) {
    return a.to_rational() == b.to_rational();
  }

 private:
  Decimal(BigInt unscaled, int scale)
      : unscaled_(std::move(unscaled)), scale_(scale) {}

  BigInt unscaled_{0};
  int scale_{0};
};

/// Rational to text: an exact decimal when the denominator divides a power of
/// ten ("35.75"), "p/q" otherwise.
std::string rational_to_string(const Rational& value);

double rational_to_double(const Rational& value);

}  // namespace youngent
