#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "quiver/errors.hpp"
#include "quiver/qseries.hpp"

using namespace quiver;

namespace {

// Partitions of n with at most s parts, counted by recursion on the largest part.
long partitions_at_most_parts(int n, int s, int max_part) {
  if (n == 0) return 1;
  if (s == 0) return 0;
  long total = 0;
  for (int p = std::min(n, max_part); p >= 1; --p) total += partitions_at_most_parts(n - p, s - 1, p);
  return total;
}

QSeries random_series(std::mt19937& rng, int t) {
  std::uniform_int_distribution<int> dist(-5, 5);
  QSeries s(t);
  for (int k = 0; k <= t; ++k) s[k] = dist(rng);
  return s;
}

QSeries series_of(std::vector<long> c, int t) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return QSeries(v, t);
}

}  // namespace

TEST(QSeries, Arithmetic) {
  const int t = 10;
  QSeries one_minus_q = series_of({1, -1}, t);
  QSeries geometric(t);
  for (int k = 0; k <= t; ++k) geometric[k] = 1;
  EXPECT_EQ(one_minus_q * geometric, QSeries::one(t));
  EXPECT_EQ(series_inverse(one_minus_q), geometric);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_series(rng, t), b = random_series(rng, t), c = random_series(rng, t);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
  EXPECT_THROW(series_inverse(series_of({2, 1}, 3)), InvalidInput);
  EXPECT_EQ(series_inverse(series_of({-1, 1}, 3)) * series_of({-1, 1}, 3), QSeries::one(3));
}

TEST(QSeries, TruncationIsMinimum) {
  auto a = QSeries::one(5), b = QSeries::one(3);
  EXPECT_EQ((a + b).truncation(), 3);
  EXPECT_EQ((a * b).truncation(), 3);
  EXPECT_EQ(QSeries::monomial(2, 3).shifted(2).is_zero(), true);
}

TEST(QSeries, Rendering) {
  EXPECT_EQ(series_of({0, 0, 0, 1, 6}, 4).to_string(), "q^3 + 6q^4 + O(q^5)");
  EXPECT_EQ(series_of({1, -2}, 1).to_string(), "1 - 2q + O(q^2)");
  EXPECT_EQ(QSeries(2).to_string(), "0 + O(q^3)");
}

TEST(Pochhammer, InverseCountsPartitions) {
  EXPECT_EQ(pochhammer_inverse(0, 5), QSeries::one(5));
  for (int k = 0; k <= 8; ++k) EXPECT_EQ(pochhammer_inverse(1, 8)[k], 1);
  EXPECT_EQ(pochhammer_inverse(2, 5), series_of({1, 1, 2, 2, 3, 3}, 5));
  for (int s = 0; s <= 5; ++s) {
    const auto p = pochhammer_inverse(s, 15);
    for (int n = 0; n <= 15; ++n) EXPECT_EQ(p[n], partitions_at_most_parts(n, s, n)) << s << " " << n;
  }
}

TEST(Pochhammer, MultiAndInverse) {
  EXPECT_EQ(pochhammer_multi({}, 4), QSeries::one(4));
  const auto p11 = pochhammer_multi({1, 1}, 9);
  for (int n = 0; n <= 9; ++n) EXPECT_EQ(p11[n], n + 1);
  for (int s = 0; s <= 6; ++s) {
    EXPECT_EQ(series_inverse(pochhammer(s, 12)), pochhammer_inverse(s, 12));
    EXPECT_EQ(pochhammer(s, 12) * pochhammer_inverse(s, 12), QSeries::one(12));
  }
  EXPECT_EQ(pochhammer_multi({2, 0, 3, 1}, 7)[0], 1);
}

TEST(QSeriesQ, KnownSeriesBruteForce) {
  EXPECT_EQ(q_series_bruteforce(DimensionVector({2, 2, 2}), 0, 4), series_of({0, 0, 0, 1, 6}, 4));
  EXPECT_EQ(q_series_bruteforce(DimensionVector({2, 3, 2}), 0, 5), series_of({0, 0, 0, 0, 2, 7}, 5));
  EXPECT_EQ(q_series_bruteforce(DimensionVector({3, 0, 2}), 0, 5)[0], 1);
  EXPECT_EQ(q_series_bruteforce(DimensionVector({3, 3, 3}), 0, 11),
            series_of({0, 0, 0, 0, 0, 0, 0, 2, 8, 27, 67, 151}, 11));
}

TEST(QSeriesQ, KnownSeriesClosed) {
  EXPECT_EQ(q_series_closed(DimensionVector({3, 3, 3}), 0, 11),
            series_of({0, 0, 0, 0, 0, 0, 0, 2, 8, 27, 67, 151}, 11));
  EXPECT_EQ(q_series_closed(DimensionVector({2, 4, 2}), 0, 5), series_of({0, 0, 0, 0, 1, 4}, 5));
  const auto big = q_series_closed(DimensionVector({4, 4, 4, 5, 5, 5, 5, 5, 5, 6, 6, 6}), 0, 15);
  for (int k = 0; k < 12; ++k) EXPECT_EQ(big[k], 0);
  EXPECT_EQ(big[12], 28);
  EXPECT_EQ(big[13], 508);
  EXPECT_EQ(big[14], 5129);
  EXPECT_EQ(big[15], 37424);
}

TEST(QSeriesQ, ClosedMatchesBruteForceSmall) {
  for (auto e : std::vector<std::vector<int>>{{2, 2, 3}, {3, 1, 2, 2}, {2, 3, 3}, {1, 4}, {2, 2, 2, 2}}) {
    DimensionVector d(e);
    for (int r = 0; r <= d.min(); ++r) {
      EXPECT_EQ(q_series_closed(d, r, 10), q_series_bruteforce(d, r, 10)) << d.to_string() << " r=" << r;
    }
  }
}

TEST(QSeriesQ, SumOverRanksIsPd) {
  for (auto e : std::vector<std::vector<int>>{{2, 2, 2}, {3, 1, 2}, {2, 3, 2, 2}}) {
    DimensionVector d(e);
    QSeries sum(8);
    for (int r = 0; r <= d.min(); ++r) sum = sum + q_series_bruteforce(d, r, 8);
    EXPECT_EQ(sum, pochhammer_multi(e, 8));
  }
}

TEST(QSeriesQ, ShiftIdentity) {
  for (auto e : std::vector<std::vector<int>>{{2, 2, 3}, {3, 3, 3}, {3, 4, 3, 5}}) {
    DimensionVector d(e);
    for (int s = 0; s <= d.min(); ++s) {
      for (int r = 0; r <= s; ++r) {
        QSeries factor = QSeries::one(10);
        for (int i = s - r + 1; i <= s; ++i) factor = factor * (QSeries::one(10) - QSeries::monomial(i, 10));
        EXPECT_EQ(q_series_bruteforce(d.shifted(-r), s - r, 10), factor * q_series_bruteforce(d, s, 10));
      }
    }
  }
}

TEST(QSeriesQ, EulerDoubleSeries) {
  // prod_{i>=0} (1 - x q^i) against sum_s (-1)^s q^{s(s-1)/2} P_s x^s.
  const int tq = 8, tx = 6;
  std::vector<QSeries> poly(tx + 1, QSeries(tq));
  poly[0] = QSeries::one(tq);
  for (int i = 0; i <= tq; ++i) {
    for (int s = tx; s >= 1; --s) poly[s] = poly[s] - poly[s - 1].shifted(i);
  }
  for (int s = 0; s <= tx; ++s) {
    QSeries expected = pochhammer_inverse(s, tq).shifted(s * (s - 1) / 2);
    if (s % 2) expected = expected.negated();
    EXPECT_EQ(poly[s], expected) << s;
  }
}

TEST(QSeriesQ, ClosedIsPermutationInvariant) {
  std::vector<int> e{1, 2, 2, 4};
  const auto ref = q_series_closed(DimensionVector(e), 1, 12);
  do {
    EXPECT_EQ(q_series_closed(DimensionVector(e), 1, 12), ref);
  } while (std::next_permutation(e.begin(), e.end()));
}

TEST(Extract, Examples) {
  EXPECT_EQ(extract_C_theta(series_of({0, 0, 0, 1, 6}, 4)), (std::pair<int, BigInt>{3, 1}));
  EXPECT_EQ(extract_C_theta(series_of({0, 0, 0, 0, 2, 7}, 5)), (std::pair<int, BigInt>{4, 2}));
  EXPECT_EQ(extract_C_theta(QSeries::one(0)), (std::pair<int, BigInt>{0, 1}));
  EXPECT_THROW(extract_C_theta(QSeries(6)), NotFound);
}
