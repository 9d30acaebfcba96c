#include "youngent/bounds.hpp"

#include <gtest/gtest.h>

#include "brute.hpp"

using namespace youngent;

TEST(FWh, KnownValues) {
  EXPECT_EQ(f_wh(7, 4, 3), 21);
  EXPECT_EQ(f_wh(14, 4, 9), 32);
  EXPECT_EQ(f_wh(14, 1, 14), 14);
  EXPECT_EQ(f_wh(14, 14, 1), 196);
}

TEST(FWh, Decomposition) {
  const auto d = wh_decomposition(14, 4, 9);
  EXPECT_EQ(d.k, 1);
  EXPECT_EQ(d.u, 3);
  EXPECT_EQ(d.v, 7);
  for (Int n = 2; n <= 30; ++n) {
    for (Int w = 2; w <= n; ++w) {
      for (Int h = ceil_div(n, w); h <= n + 1 - w; ++h) {
        const auto x = wh_decomposition(n, w, h);
        EXPECT_EQ(x.k * w + x.u + x.v, n);
        EXPECT_GE(x.u, 1);
        EXPECT_LE(x.u, w);
        EXPECT_EQ(x.k + 1 + x.v, h) << n << ' ' << w << ' ' << h;
        if (n == w * h) {
          EXPECT_EQ(x.k, h);
          EXPECT_EQ(x.u, 1);
          EXPECT_EQ(x.v, -1);
        } else {
          EXPECT_GE(x.v, 0);
        }
      }
    }
  }
}

TEST(FWh, RejectsInvalidTuples) {
  EXPECT_THROW(f_wh(14, 4, 12), DomainError);
  EXPECT_THROW(f_wh(14, 4, 3), DomainError);
  EXPECT_THROW(f_wh(14, 0, 14), DomainError);
  EXPECT_THROW(f_wh(0, 1, 1), DomainError);
  EXPECT_THROW(f_wh(14, 1, 13), DomainError);
}

TEST(FWh, MatchesIndependentBruteForce) {
  for (Int n = 1; n <= 18; ++n) {
    for (Int w = 1; w <= n; ++w) {
      for (Int h = ceil_div(n, w); h <= n + 1 - w; ++h) {
        const Int brute = brute::max_squares(n, [&](const brute::Rows& rows) {
          return brute::width(rows) <= w && brute::height(rows) >= h;
        });
        EXPECT_EQ(f_wh(n, w, h), brute) << n << ' ' << w << ' ' << h;
      }
    }
  }
}

TEST(FWh, IncreasingInWidthDecreasingInHeight) {
  for (Int n = 2; n <= 40; ++n) {
    for (Int w = 1; w <= n; ++w) {
      for (Int h = ceil_div(n, w); h <= n + 1 - w; ++h) {
        if (h + 1 <= n + 1 - w) EXPECT_GE(f_wh(n, w, h), f_wh(n, w, h + 1));
        if (w + 1 <= n + 1 - h) EXPECT_LE(f_wh(n, w, h), f_wh(n, w + 1, h));
      }
    }
  }
}

TEST(FWh, Extremes) {
  for (Int n = 1; n <= 200; ++n) {
    EXPECT_EQ(f_wh(n, 1, n), n);
    EXPECT_EQ(f_wh(n, n, 1), n * n);
  }
}

TEST(FWh, ClampedAgreesInsideDomain) {
  for (Int n = 1; n <= 25; ++n) {
    for (Int w = 1; w <= n; ++w) {
      for (Int h = 1; h <= n; ++h) {
        const Int brute = brute::max_squares(n, [&](const brute::Rows& rows) {
          return brute::width(rows) <= w && brute::height(rows) >= h;
        });
        if (brute >= 0) EXPECT_EQ(f_wh_clamped(n, w, h), brute) << n << ' ' << w << ' ' << h;
      }
    }
  }
}

TEST(FWidth, KnownValues) {
  EXPECT_EQ(f_width(14, 3), 40);
  EXPECT_EQ(f_width(14, 2), 28);
  EXPECT_EQ(f_width(127, 2), 253);
  EXPECT_EQ(f_width(127, 3), 379);
  EXPECT_EQ(f_width(8, 6), 40);
  const auto d = width_decomposition(14, 3);
  EXPECT_EQ(d.s, 4);
  EXPECT_EQ(d.t, 2);
}

TEST(FWidth, MatchesBruteForceAndWhRow) {
  for (Int n = 1; n <= 18; ++n) {
    for (Int w = 1; w <= n; ++w) {
      const Int brute = brute::max_squares(
          n, [&](const brute::Rows& rows) { return brute::width(rows) <= w; });
      EXPECT_EQ(f_width(n, w), brute);
    }
  }
  for (Int n = 1; n <= 60; ++n) {
    for (Int w = 1; w <= n; ++w) EXPECT_EQ(f_width(n, w), f_wh(n, w, ceil_div(n, w)));
  }
}

TEST(FWidth, SimplifiedDominates) {
  for (Int n = 1; n <= 60; ++n) {
    for (Int w = 1; w <= n; ++w) {
      EXPECT_GE(f_width_upper(n, w), f_width(n, w));
      EXPECT_EQ(f_width_upper(n, w), w * n);
    }
  }
}

TEST(FHeight, KnownValues) {
  EXPECT_EQ(f_height(14, 10), 34);
  EXPECT_EQ(f_height(14, 9), 44);
  EXPECT_EQ(f_height(36, 32), 56);
  EXPECT_EQ(f_height(36, 33), 48);
}

TEST(FHeight, MatchesBruteForceAndWhColumn) {
  for (Int n = 1; n <= 18; ++n) {
    for (Int h = 1; h <= n; ++h) {
      const Int brute = brute::max_squares(
          n, [&](const brute::Rows& rows) { return brute::height(rows) >= h; });
      EXPECT_EQ(f_height(n, h), brute);
    }
  }
  for (Int n = 1; n <= 60; ++n) {
    for (Int h = 1; h <= n; ++h) EXPECT_EQ(f_height(n, h), f_wh(n, n + 1 - h, h));
  }
}

TEST(FRank, KnownValues) {
  EXPECT_EQ(f_rank(14, -3), 44);
  EXPECT_EQ(f_rank(14, -4), 38);
  EXPECT_EQ(f_rank(20, -4), 80);
  EXPECT_EQ(f_rank(2, 1), 4);
  EXPECT_EQ(f_rank(10, 0), 34);
  EXPECT_EQ(f_rank(8, 4), 40);
  EXPECT_EQ(f_rank(8, 3), 38);
}

TEST(FRank, SpecialCasesAgainstBruteForce) {
  // n + r == 10, 16 and the n + r == 4 corner, each over a range of n.
  for (Int n = 3; n <= 22; ++n) {
    for (Int sum : {4, 10, 16}) {
      const Int r = sum - n;
      if (!is_valid_rank(n, r)) continue;
      const Int brute = brute::max_squares(n, [&](const brute::Rows& rows) {
        return brute::width(rows) - brute::height(rows) <= r;
      });
      EXPECT_EQ(f_rank(n, r), brute) << "n=" << n << " r=" << r;
    }
  }
  EXPECT_EQ(f_rank(14, -4), 38);
  EXPECT_EQ(f_rank(10, 0), 34);
  EXPECT_EQ(f_rank(12, 4), 72);
  EXPECT_EQ(f_rank(16, 0), 76);
}

TEST(FRank, MatchesBruteForce) {
  for (Int n = 1; n <= 18; ++n) {
    for (Int r : valid_ranks(n)) {
      const Int brute = brute::max_squares(n, [&](const brute::Rows& rows) {
        return brute::width(rows) - brute::height(rows) <= r;
      });
      EXPECT_EQ(f_rank(n, r), brute) << "n=" << n << " r=" << r;
    }
  }
}

TEST(FRank, EndpointsAndMonotone) {
  for (Int n = 2; n <= 60; ++n) {
    EXPECT_EQ(f_rank(n, 1 - n), n);
    EXPECT_EQ(f_rank(n, n - 1), n * n);
    const auto ranks = valid_ranks(n);
    for (std::size_t i = 1; i < ranks.size(); ++i) {
      EXPECT_LT(f_rank(n, ranks[i - 1]), f_rank(n, ranks[i])) << n;
    }
  }
}

TEST(FRank, SimplifiedDominates) {
  EXPECT_EQ(f_rank_upper(8, -4), Rational(12));
  EXPECT_EQ(f_rank_upper(14, -3), Rational(44));
  EXPECT_EQ(f_rank_upper(14, -4), Rational(99, 4) + 14);
  for (Int n = 2; n <= 60; ++n) {
    for (Int r : valid_ranks(n)) EXPECT_GE(f_rank_upper(n, r), Rational(f_rank(n, r))) << n;
  }
}

TEST(FWhUpper, FormulaAndDominance) {
  EXPECT_EQ(f_wh_upper(14, 4, 9), Rational(34));
  for (Int n = 1; n <= 60; ++n) {
    for (Int w = 1; w <= n; ++w) {
      for (Int h = ceil_div(n, w); h <= n + 1 - w; ++h) {
        EXPECT_GE(f_wh_upper(n, w, h), Rational(f_wh(n, w, h)));
      }
    }
  }
}

TEST(ValidRanks, SmallCases) {
  EXPECT_EQ(valid_ranks(1), std::vector<Int>({0}));
  EXPECT_EQ(valid_ranks(2), std::vector<Int>({-1, 1}));
  EXPECT_EQ(valid_ranks(3), std::vector<Int>({-2, 0, 2}));
  EXPECT_EQ(valid_ranks(14).size(), 25u);
  EXPECT_FALSE(is_valid_rank(14, 12));
  EXPECT_FALSE(is_valid_rank(14, -12));
  EXPECT_TRUE(is_valid_rank(14, 13));
  EXPECT_EQ(nearest_valid_rank_at_or_above(14, -12), -11);
  EXPECT_EQ(nearest_valid_rank_at_or_above(14, 12), 13);
  EXPECT_EQ(nearest_valid_rank_at_or_above(14, -20), -13);
}

TEST(ValidRanks, MatchObservedRanks) {
  for (Int n = 1; n <= 20; ++n) {
    std::vector<Int> seen;
    brute::each_partition(n, [&](const brute::Rows& rows) {
      seen.push_back(brute::width(rows) - brute::height(rows));
    });
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    EXPECT_EQ(valid_ranks(n), seen) << n;
  }
}

TEST(QuantumAdvantage, Difference) {
  EXPECT_EQ(quantum_advantage(Rational(404, 10), 14), Rational(264, 10));
  EXPECT_EQ(quantum_advantage(Rational(3), 14), Rational(-11));
}

TEST(Bounds, RejectOutOfDomain) {
  EXPECT_THROW(f_width(14, 0), DomainError);
  EXPECT_THROW(f_width(14, 15), DomainError);
  EXPECT_THROW(f_height(14, 15), DomainError);
  EXPECT_THROW(f_rank(14, 12), DomainError);
  EXPECT_THROW(f_rank(14, 14), DomainError);
  EXPECT_THROW(f_rank_upper(14, -12), DomainError);
}
