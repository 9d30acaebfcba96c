#include "youngent/bounds.hpp"

#include <algorithm>
#include <string>

#include "youngent/tuples.hpp"

namespace youngent {

namespace {

void require_n(Int n) {
  if (n < 1) throw DomainError("particle number must be >= 1, got " + std::to_string(n));
}

void require_tuple(Int n, Int w, Int h) {
  require_n(n);
  if (!is_valid_tuple(n, w, h)) {
    throw DomainError("(w,h) = (" + std::to_string(w) + "," + std::to_string(h) +
                      ") is not a valid tuple for n = " + std::to_string(n));
  }
}

void require_rank(Int n, Int r) {
  require_n(n);
  if (!is_valid_rank(n, r)) {
    throw DomainError("r = " + std::to_string(r) + " is not a valid Dyson rank for n = " +
                      std::to_string(n));
  }
}

}  // namespace

WhDecomposition wh_decomposition(Int n, Int w, Int h) {
  require_tuple(n, w, h);
  if (w < 2) throw DomainError("wh_decomposition needs w >= 2");
  WhDecomposition d;
  d.k = (n - h) / (w - 1);
  d.u = n - h + 1 - (w - 1) * d.k;
  d.v = h - d.k - 1;
  return d;
}

WidthDecomposition width_decomposition(Int n, Int w) {
  require_n(n);
  if (w < 1 || w > n) throw DomainError("w must lie in [1, n]");
  return {n / w, n - (n / w) * w};
}

Int f_wh(Int n, Int w, Int h) {
  require_tuple(n, w, h);
  if (w == 1) return n;
  const auto [k, u, v] = wh_decomposition(n, w, h);
  return checked_add(checked_add(checked_mul(k, checked_sq(w)), checked_sq(u)), v);
}

Int f_wh_clamped(Int n, Int w, Int h) {
  require_n(n);
  if (w < 1 || w > n || h < 1 || h > n) throw DomainError("w and h must lie in [1, n]");
  w = std::min(w, n - h + 1);
  h = std::max(h, ceil_div(n, w));
  return f_wh(n, w, h);
}

Rational f_wh_upper(Int n, Int w, Int h) {
  require_tuple(n, w, h);
  return Rational(checked_add(checked_mul(w, n - h), n));
}

Rational quantum_advantage(const Rational& fisher, Int n) {
  if (fisher < 0) throw DomainError("quantum Fisher information must be non-negative");
  return fisher - n;
}

Int f_width(Int n, Int w) {
  const auto [s, t] = width_decomposition(n, w);
  return checked_add(checked_mul(s, checked_sq(w)), checked_sq(t));
}

Int f_width_upper(Int n, Int w) {
  require_n(n);
  if (w < 1 || w > n) throw DomainError("w must lie in [1, n]");
  return checked_mul(w, n);
}

Int f_height(Int n, Int h) {
  require_n(n);
  if (h < 1 || h > n) throw DomainError("h must lie in [1, n]");
  return checked_add(checked_sq(n + 1 - h), h - 1);
}

Int f_rank(Int n, Int r) {
  require_rank(n, r);
  const Int sum = n + r;
  if (sum % 2 != 0) {
    return checked_add(checked_sq(sum + 1) / 4, (n - r - 1) / 2);
  }
  if (sum == 10 && n >= 8) return 34 - r;
  if (sum == 16 && n >= 12) return 76 - r;
  return checked_add(checked_sq(sum) / 4, (n - r) / 2 + 2);
}

Rational f_rank_upper(Int n, Int r) {
  require_rank(n, r);
  const Int sum = n + r;
  if (sum == 4) return Rational(n + 4);
  return Rational(checked_sq(sum) - 1, 4) + n;
}

std::vector<Int> valid_ranks(Int n) {
  require_n(n);
  std::vector<Int> out;
  for (Int r = -(n - 1); r <= n - 1; ++r) {
    if (is_valid_rank(n, r)) out.push_back(r);
  }
  return out;
}

bool is_valid_rank(Int n, Int r) {
  if (n < 1) return false;
  if (r < -(n - 1) || r > n - 1) return false;
  return r != n - 2 && r != -(n - 2);
}

Int nearest_valid_rank_at_or_above(Int n, Int r) {
  require_n(n);
  r = std::clamp(r, -(n - 1), n - 1);
  while (!is_valid_rank(n, r)) ++r;
  return r;
}

}  // namespace youngent
