#include "youngent/squeezing.hpp"

#include <cmath>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "youngent/bounds.hpp"
#include "youngent/tuples.hpp"

namespace youngent {

namespace {

constexpr int kSignificantDigits = 30;

using Float50 = boost::multiprecision::cpp_dec_float_50;

}  // namespace

SqueezingValue SqueezingValue::from_linear(double linear) {
  return SqueezingValue(linear, linear_to_db(linear));
}

SqueezingValue SqueezingValue::from_db(double db) {
  return SqueezingValue(db_to_linear(db), db);
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double x) {
  if (!(x > 0.0)) throw DomainError("squeezing coefficient must be positive");
  return 10.0 * std::log10(x);
}

Rational db_to_linear_exact(const Decimal& db) {
  const Rational exponent_q = db.to_rational() / 10;
  const Float50 exponent = Float50(boost::multiprecision::numerator(exponent_q)) /
                           Float50(boost::multiprecision::denominator(exponent_q));
  const Float50 value = boost::multiprecision::pow(Float50(10), exponent);

  // Scale so the integer part carries exactly kSignificantDigits digits.
  const auto magnitude =
      static_cast<int>(boost::multiprecision::floor(boost::multiprecision::log10(value)));
  const int shift = kSignificantDigits - 1 - magnitude;
  Float50 scaled = value;
  if (shift >= 0) {
    scaled *= Float50(pow10(shift));
  } else {
    scaled /= Float50(pow10(-shift));
  }
  const Float50 rounded = boost::multiprecision::round(scaled);
  const BigInt digits = rounded.convert_to<BigInt>();
  return shift >= 0 ? Rational(digits, pow10(shift)) : Rational(digits * pow10(-shift));
}

Rational xi2_floor_from_f(Int f, Int n) {
  if (f < 1 || n < 1) throw DomainError("squeezing floor needs f >= 1 and n >= 1");
  return Rational(2 * n, checked_add(f, 2 * n));
}

Rational xi2_floor_wh_simple(Int n, Int w, Int h) {
  if (!is_valid_tuple(n, w, h)) throw DomainError("invalid (w,h) tuple");
  return Rational(2 * n, checked_add(checked_mul(w, n - h), checked_mul(3, n)));
}

Rational xi2_floor_w(Int w) {
  if (w < 1) throw DomainError("w must be >= 1");
  return Rational(2, checked_add(2, w));
}

Rational xi2_floor_h(Int n, Int h) { return xi2_floor_from_f(f_height(n, h), n); }

Rational xi2_floor_r(Int n, Int r) {
  if (!is_valid_rank(n, r)) throw DomainError("invalid Dyson rank");
  if (n + r == 4) return Rational(2 * n, checked_add(checked_mul(3, n), 4));
  return Rational(checked_mul(8, n),
                  checked_add(checked_sq(n + r), checked_mul(12, n)) - 1);
}

}  // namespace youngent
