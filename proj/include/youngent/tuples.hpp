#pragma once

// The (w,h) tuple domain for a fixed particle number and tuple-class counts.

#include <optional>
#include <vector>

#include "youngent/arith.hpp"

namespace youngent {

/// A class of Young diagrams sharing width w and height h.
struct TupleClass {
  Int n = 0;
  Int w = 0;
  Int h = 0;

  Int rank() const { return w - h; }
  friend bool operator==(const TupleClass&, const TupleClass&) = default;
  friend auto operator<=>(const TupleClass&, const TupleClass&) = default;
};

/// True iff some partition of n has width exactly w and height exactly h,
/// i.e. ceil(n/w) <= h <= n+1-w.
bool is_valid_tuple(Int n, Int w, Int h);

/// Every valid tuple ordered by (w asc, h asc).
std::vector<TupleClass> all_tuples(Int n);

/// Number of valid tuples with width <= w:
/// sum over w_i = 1..w of (n + 2 - w_i - ceil(n/w_i)).
Int count_width_leq(Int n, Int w);

/// Number of valid tuples with height >= h:
/// sum over h_i = h..n of (n + 2 - h_i - ceil(n/h_i)).
Int count_height_geq(Int n, Int h);

/// Number of valid tuples with rank w - h <= r, counted over all_tuples(n).
/// Requires r to be a valid rank for n.
Int count_rank_leq(Int n, Int r);

/// Closed-form rank count for 3-n <= r <= n-3:
/// n + r - 1 + sum over r_i = 3-n..r of
///   (floor((n+1+r_i)/2) - ceil((sqrt(r_i^2 + 4n) + r_i)/2)).
/// nullopt outside that range.
std::optional<Int> count_rank_leq_closed_form(Int n, Int r);

/// The top-rank total with the ceiling sum added, n(n+3)/2 + sum ceil(n/w).
/// Kept for comparison only: the true total carries a minus sign.
Int count_rank_top_plus_sign(Int n);

/// Total tuple count n(n+3)/2 - sum ceil(n/w).
Int count_all_tuples(Int n);

}  // namespace youngent
