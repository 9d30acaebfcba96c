#include "youngent/tuples.hpp"

#include <string>

#include "youngent/bounds.hpp"

namespace youngent {

namespace {

Int tuples_with_width(Int n, Int w) { return n + 2 - w - ceil_div(n, w); }

Int sum_ceil(Int n) {
  Int total = 0;
  for (Int w = 1; w <= n; ++w) total = checked_add(total, ceil_div(n, w));
  return total;
}

}  // namespace

bool is_valid_tuple(Int n, Int w, Int h) {
  if (n < 1 || w < 1 || h < 1 || w > n || h > n) return false;
  return ceil_div(n, w) <= h && h <= n + 1 - w;
}

std::vector<TupleClass> all_tuples(Int n) {
  if (n < 1) throw DomainError("particle number must be >= 1");
  std::vector<TupleClass> out;
  for (Int w = 1; w <= n; ++w) {
    for (Int h = ceil_div(n, w); h <= n + 1 - w; ++h) out.push_back({n, w, h});
  }
  return out;
}

Int count_width_leq(Int n, Int w) {
  if (n < 1 || w < 1 || w > n) throw DomainError("count_width_leq needs 1 <= w <= n");
  Int total = 0;
  for (Int wi = 1; wi <= w; ++wi) total = checked_add(total, tuples_with_width(n, wi));
  return total;
}

Int count_height_geq(Int n, Int h) {
  if (n < 1 || h < 1 || h > n) throw DomainError("count_height_geq needs 1 <= h <= n");
  Int total = 0;
  // The tuple domain is symmetric under w <-> h.
  for (Int hi = h; hi <= n; ++hi) total = checked_add(total, tuples_with_width(n, hi));
  return total;
}

Int count_rank_leq(Int n, Int r) {
  if (!is_valid_rank(n, r)) {
    throw DomainError("r = " + std::to_string(r) + " is not a valid rank for n = " +
                      std::to_string(n));
  }
  Int total = 0;
  for (Int w = 1; w <= n; ++w) {
    for (Int h = ceil_div(n, w); h <= n + 1 - w; ++h) {
      if (w - h <= r) ++total;
    }
  }
  return total;
}

std::optional<Int> count_rank_leq_closed_form(Int n, Int r) {
  if (n < 1 || r < 3 - n || r > n - 3) return std::nullopt;
  Int total = n + r - 1;
  for (Int ri = 3 - n; ri <= r; ++ri) {
    const Int widest = (n + 1 + ri) / 2;
    const Int root = isqrt_ceil(checked_add(checked_sq(ri), checked_mul(4, n)));
    const Int narrowest = ceil_div(root + ri, 2);
    total = checked_add(total, widest - narrowest);
  }
  return total;
}

Int count_rank_top_plus_sign(Int n) {
  return checked_add(checked_mul(n, n + 3) / 2, sum_ceil(n));
}

Int count_all_tuples(Int n) {
  if (n < 1) throw DomainError("particle number must be >= 1");
  return checked_sub(checked_mul(n, n + 3) / 2, sum_ceil(n));
}

}  // namespace youngent
