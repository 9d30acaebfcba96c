#pragma once

// Spin-squeezing floors per separability class.
//
// A Lambda-separable state obeys N / xi^2 <= sum(N_l^2)/2 + N, so a class with
// maximal sum f has floor xi^2 >= 2N / (f + 2N). A measured xi^2 strictly
// below the floor excludes the class. The floors are necessary conditions for
// separability; the underlying inequality is only asymptotically saturated,
// and only when every block has N_l > 1.

#include "youngent/arith.hpp"

namespace youngent {

/// A squeezing coefficient in both units. Construction keeps them consistent.
class SqueezingValue {
 public:
  /// Throws DomainError unless linear > 0.
  static SqueezingValue from_linear(double linear);
  static SqueezingValue from_db(double db);

  double linear() const { return linear_; }
  double db() const { return db_; }

 private:
  SqueezingValue(double linear, double db) : linear_(linear), db_(db) {}
  double linear_;
  double db_;
};

double db_to_linear(double db);

/// Throws DomainError unless x > 0.
double linear_to_db(double x);

/// 10^(db/10) rounded to 30 significant digits, as an exact rational.
Rational db_to_linear_exact(const Decimal& db);

/// Tight class floor 2N / (f + 2N) for a class whose maximal sum(N_l^2) is f.
Rational xi2_floor_from_f(Int f, Int n);

/// Simplified (w,h) floor 2N / (w(N-h) + 3N).
Rational xi2_floor_wh_simple(Int n, Int w, Int h);

/// Simplified w-producible floor 1 / (1 + w/2).
Rational xi2_floor_w(Int w);

/// h-separable floor 2N / ((N-h+1)^2 + h - 1 + 2N).
Rational xi2_floor_h(Int n, Int h);

/// Simplified rank floor 8N / ((N+r)^2 + 12N - 1); at N+r == 4 the rank
/// bound is N+4 and the floor is 2N / (3N + 4).
Rational xi2_floor_r(Int n, Int r);

}  // namespace youngent
