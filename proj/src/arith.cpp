#include "youngent/arith.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace youngent {

Int checked_add(Int a, Int b) {
  Int out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in addition");
  }
  return out;
}

Int checked_sub(Int a, Int b) {
  Int out = 0;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in subtraction");
  }
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in multiplication");
  }
  return out;
}

Int isqrt_ceil(Int x) {
  if (x < 0) throw DomainError("isqrt_ceil of a negative value");
  if (x < 2) return x;
  // Start from the float estimate and correct it exactly.
  auto s = static_cast<Int>(std::sqrt(static_cast<long double>(x)));
  while (s > 0 && checked_mul(s - 1, s - 1) >= x) --s;
  while (checked_mul(s, s) < x) ++s;
  return s;
}

BigInt pow10(int exponent) {
  BigInt out = 1;
  for (int i = 0; i < exponent; ++i) out *= 10;
  return out;
}

Decimal Decimal::parse(std::string_view text) {
  const std::string original(text);
  auto fail = [&original]() -> Decimal {
    throw InputError("not a decimal number: '" + original + "'");
  };

  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }

  BigInt unscaled = 0;
  int scale = 0;
  int digits = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    unscaled = unscaled * 10 + (text[pos] - '0');
    ++digits;
    ++pos;
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      unscaled = unscaled * 10 + (text[pos] - '0');
      ++scale;
      ++digits;
      ++pos;
    }
  }
  if (digits == 0) return fail();

  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    bool exp_negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      exp_negative = text[pos] == '-';
      ++pos;
    }
    int exponent = 0;
    int exp_digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      exponent = exponent * 10 + (text[pos] - '0');
      if (exponent > 4000) return fail();
      ++exp_digits;
      ++pos;
    }
    if (exp_digits == 0) return fail();
    if (exp_negative) {
      scale += exponent;
    } else if (exponent <= scale) {
      scale -= exponent;
    } else {
      unscaled *= pow10(exponent - scale);
      scale = 0;
    }
  }
  if (pos != text.size()) return fail();

  if (negative) unscaled = -unscaled;
  return Decimal(std::move(unscaled), scale);
}

Decimal Decimal::from_int(Int value) { return Decimal(BigInt(value), 0); }

Rational Decimal::to_rational() const {
  return Rational(unscaled_, pow10(scale_));
}

double Decimal::to_double() const { return rational_to_double(to_rational()); }

std::string Decimal::to_string() const {
  std::string digits = (unscaled_ < 0 ? BigInt(-unscaled_) : unscaled_).str();
  if (scale_ > 0) {
    if (static_cast<int>(digits.size()) <= scale_) {
      digits.insert(0, static_cast<std::size_t>(scale_ + 1) - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(scale_), ".");
  }
  return (unscaled_ < 0 ? "-" : "") + digits;
}

Decimal Decimal::minus_int(Int value) const {
  return Decimal(unscaled_ - BigInt(value) * pow10(scale_), scale_);
}

std::string rational_to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();

  // Strip factors 2 and 5; a terminating decimal leaves nothing behind.
  BigInt rest = den;
  int twos = 0;
  int fives = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) return num.str() + "/" + den.str();

  const int scale = std::max(twos, fives);
  const BigInt unscaled = num * (pow10(scale) / den);
  std::string digits = (unscaled < 0 ? BigInt(-unscaled) : unscaled).str();
  if (static_cast<int>(digits.size()) <= scale) {
    digits.insert(0, static_cast<std::size_t>(scale + 1) - digits.size(), '0');
  }
  digits.insert(digits.size() - static_cast<std::size_t>(scale), ".");
  return (unscaled < 0 ? "-" : "") + digits;
}

double rational_to_double(const Rational& value) {
  return value.convert_to<double>();
}

}  // namespace youngent
