#pragma once

// Maximal quantum Fisher information per separability class.
//
// Every tight bound is the maximum of sum(N_l^2) over the Young diagrams of a
// class: (w,h)-separable, w-producible, h-separable, or Dyson rank <= r. Tight
// bounds are exact integers. The simplified bounds drop the integer structure
// of the partition and may be rational.

#include <vector>

#include "youngent/arith.hpp"

namespace youngent {

/// Optimal-diagram parameters for a (w,h) class with w >= 2: k full rows of
/// width w, one row of u, and v singletons, so that k*w + u + v == n.
/// When n == w*h the formula yields k == h, u == 1, v == -1: the diagram is
/// then h full rows, and k*w^2 + u^2 + v still equals its sum of squares.
struct WhDecomposition {
  Int k = 0;
  Int u = 0;
  Int v = 0;
};

/// n = s*w + t with 0 <= t < w.
struct WidthDecomposition {
  Int s = 0;
  Int t = 0;
};

/// Throws DomainError if (w,h) is not a valid tuple for n or w < 2.
WhDecomposition wh_decomposition(Int n, Int w, Int h);

/// Throws DomainError unless 1 <= w <= n.
WidthDecomposition width_decomposition(Int n, Int w);

/// Tight (w,h)-separable bound k*w^2 + u^2 + v; n when w == 1 (which forces
/// h == n). Throws DomainError for an invalid tuple.
Int f_wh(Int n, Int w, Int h);

/// f_wh after moving (w,h) into the tuple domain: w <- min(w, n-h+1), then
/// h <- max(h, ceil(n/w)). For probing classes outside the tight domain;
/// relies on f_wh increasing in w and decreasing in h. Needs 1 <= w,h <= n.
Int f_wh_clamped(Int n, Int w, Int h);

/// Simplified (w,h) bound w(n-h)+n. Requires n/h <= w <= n-h+1.
Rational f_wh_upper(Int n, Int w, Int h);

/// Sensitivity gain over shot noise, F - n.
Rational quantum_advantage(const Rational& fisher, Int n);

/// Tight w-producible bound s*w^2 + t^2.
Int f_width(Int n, Int w);

/// Simplified w-producible bound w*n.
Int f_width_upper(Int n, Int w);

/// Tight h-separable bound (n+1-h)^2 + h - 1.
Int f_height(Int n, Int h);

/// Tight bound for Dyson rank <= r.
///
/// n+r odd:  (n+r+1)^2/4 + (n-r-1)/2
/// n+r even: (n+r)^2/4 + (n-r)/2 + 2, except 34-r when n+r == 10 (n >= 8)
///           and 76-r when n+r == 16 (n >= 12).
///
/// The even branch already gives n+4 at n+r == 4, where the optimal
/// diagram uses two rows of the maximal width.
Int f_rank(Int n, Int r);

/// Simplified rank bound ((n+r)^2 - 1)/4 + n, or n+4 when n+r == 4.
Rational f_rank_upper(Int n, Int r);

/// Ranks attained by some partition of n: all of [-(n-1), n-1] except
/// +-(n-2). {0} for n == 1 and {-1, 1} for n == 2. Ascending.
std::vector<Int> valid_ranks(Int n);

bool is_valid_rank(Int n, Int r);

/// Smallest valid rank >= r, clamped into [-(n-1), n-1].
Int nearest_valid_rank_at_or_above(Int n, Int r);

}  // namespace youngent
