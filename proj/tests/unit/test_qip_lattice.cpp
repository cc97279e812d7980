#include <gtest/gtest.h>

#include <random>

#include "quiver/errors.hpp"
#include "quiver/qip_lattice.hpp"

using namespace quiver;

namespace {

using BigVec = std::vector<BigInt>;

BigVec big(std::vector<long> v) {
  BigVec out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// The defining double sum, without the telescoping used by qip_objective.
long objective_by_definition(const DimensionVector& d, const std::vector<int>& e) {
  long g = 0;
  for (int i = 1; i <= d.arrows(); ++i)
    for (int j = 1; j <= i; ++j) g += static_cast<long>(e[i - 1]) * (e[j - 1] + d[j] - d[j - 1]);
  return g;
}

}  // namespace

TEST(Qip, ObjectiveExamples) {
  QipInstance inst(DimensionVector({2, 2, 3}));
  EXPECT_EQ(qip_objective(inst, {1, 1}), 4);
  EXPECT_EQ(qip_objective(inst, {2, 0}), 4);
  EXPECT_EQ(qip_objective(inst, {0, 0}), 0);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) EXPECT_EQ(qip_objective(inst, {a, b}), a * a + a * b + b * b + b);
  EXPECT_THROW(qip_objective(inst, {1}), InvalidInput);
}

TEST(Qip, ObjectiveMatchesDefinitionAndSquareIdentity) {
  std::mt19937 rng(11);
  DimensionVector d({3, 4, 4, 6, 9, 10});
  QipInstance inst(d);
  std::uniform_int_distribution<int> dist(0, 6);
  for (int t = 0; t < 200; ++t) {
    std::vector<int> e(5);
    for (auto& x : e) x = dist(rng);
    const long g = qip_objective(inst, e);
    EXPECT_EQ(g, objective_by_definition(d, e));
    // Only meaningful on the budget hyperplane.
    int sum = 0;
    for (int x : e) sum += x;
    if (sum != d[0]) continue;
    long lhs = 2 * g - static_cast<long>(d[0]) * d[0];
    long rhs = 0;
    for (int i = 1; i <= 5; ++i) {
      rhs += static_cast<long>(e[i - 1] - (d[0] - d[i])) * (e[i - 1] - (d[0] - d[i]));
      rhs -= static_cast<long>(d[i] - d[0]) * (d[i] - d[0]);
    }
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Qip, EnumerateExamples) {
  auto s = qip_enumerate(QipInstance(DimensionVector({2, 2, 3})));
  EXPECT_EQ(s.optimum, 4);
  EXPECT_EQ(s.minimizers, (std::vector<std::vector<int>>{{1, 1}, {2, 0}}));

  auto n8 = qip_enumerate(QipInstance(DimensionVector({8, 8, 11, 11, 11, 13, 13, 13, 15})));
  EXPECT_EQ(n8.optimum, 55);
  ASSERT_EQ(n8.count(), 4u);
  EXPECT_NE(std::find(n8.minimizers.begin(), n8.minimizers.end(), std::vector<int>{4, 2, 1, 1, 0, 0, 0, 0}),
            n8.minimizers.end());
  EXPECT_NE(std::find(n8.minimizers.begin(), n8.minimizers.end(), std::vector<int>{5, 1, 1, 1, 0, 0, 0, 0}),
            n8.minimizers.end());

  auto zero = qip_enumerate(QipInstance(DimensionVector({0, 3, 4})));
  EXPECT_EQ(zero.optimum, 0);
  EXPECT_EQ(zero.minimizers, (std::vector<std::vector<int>>{{0, 0}}));
  EXPECT_THROW(qip_enumerate(QipInstance(DimensionVector({8, 8, 11, 11, 11, 13, 13, 13, 15})), 100), ResourceLimit);
}

TEST(Qip, InstanceSortsInput) {
  QipInstance inst(DimensionVector({3, 2, 2}));
  EXPECT_EQ(inst.d_sorted, DimensionVector({2, 2, 3}));
  EXPECT_EQ(inst.permutation, (std::vector<std::size_t>{1, 2, 0}));
}

TEST(RelevantCount, Examples) {
  EXPECT_EQ(relevant_count(DimensionVector({7, 7, 8, 9, 12, 13})), 3);
  // l=4: 8+8+11+11+11 = 49 >= 44; l=5: 62 < 65.
  EXPECT_EQ(relevant_count(DimensionVector({8, 8, 11, 11, 11, 13, 13, 13, 15})), 4);
  EXPECT_EQ(relevant_count(DimensionVector({5, 5, 5, 5})), 3);
  EXPECT_THROW(relevant_count(DimensionVector({0, 2})), InvalidInput);
  EXPECT_THROW(relevant_count(DimensionVector({3, 2})), InvalidInput);
}

TEST(ClosestPoint, Walkthrough) {
  const auto c = closest_simplex_points(DimensionVector({7, 7, 8, 9, 12, 13}));
  EXPECT_EQ(c.m_relevant, 3);
  EXPECT_EQ(c.S, 31);
  EXPECT_EQ(c.s_hat, big({0, -1, -2}));
  EXPECT_EQ(c.p_hat, (std::vector<Rational>{Rational(10, 3), Rational(7, 3), Rational(4, 3)}));
  EXPECT_EQ(c.rounded, big({3, 2, 1}));
  EXPECT_EQ(c.delta, 1);
  EXPECT_EQ(c.epsilon, 1);
  EXPECT_EQ(c.v_hats, (std::vector<BigVec>{big({4, 2, 1}), big({3, 3, 1}), big({3, 2, 2})}));
  EXPECT_EQ(c.D_hat, 34);
  EXPECT_EQ(c.D, 34 + 25 + 36);
  EXPECT_EQ(c.G_opt, 39);
}

TEST(ClosestPoint, ConstantAndDeltaCases) {
  const auto c = closest_simplex_points(DimensionVector({4, 4}));
  EXPECT_EQ(c.s_hat, big({0}));
  EXPECT_EQ(c.p_hat, std::vector<Rational>{Rational(4)});
  EXPECT_EQ(c.delta, 0);
  EXPECT_EQ(c.v_hats.size(), 1u);
  // The hyperplane x_1 = 4 holds a single point, at distance 4 from s_hat.
  EXPECT_EQ(c.D_hat, 16);
  EXPECT_EQ(c.G_opt, 16);

  const auto t = closest_simplex_points(DimensionVector({2, 2, 3}));
  // m {S/m} = 2 * {7/2} = 1, and the rounding of 7/2 goes up.
  EXPECT_EQ(t.delta, -1);
  EXPECT_EQ(Rational(BigInt(abs(t.delta))), 2 * frac(Rational(7, 2)));
}

TEST(ClosestPoint, DeltaCaseSplit) {
  // delta = m{S/m} when {S/m} < 1/2, and m{S/m} - m otherwise.
  for (int m = 1; m <= 20; ++m) {
    for (int s = 0; s <= 200; ++s) {
      const Rational x = ratio(s, m);
      const Rational f = frac(x);
      const BigInt direct = BigInt(s) - BigInt(m) * round_half_up(x);
      const Rational split = f < Rational(1, 2) ? Rational(Rational(m) * f) : Rational(Rational(m) * f - m);
      EXPECT_EQ(Rational(direct), split);
      const BigInt rounded = f < Rational(1, 2) ? floor(x) : BigInt(floor(x) + 1);
      EXPECT_EQ(round_half_up(x), rounded);
    }
  }
}

TEST(ClosestPoint, GeometryOnManyVectors) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> dist(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> e(2 + trial % 5);
    for (auto& x : e) x = dist(rng);
    const auto d = DimensionVector(e).sorted();
    const auto c = closest_simplex_points(d);
    const int m = c.m_relevant;
    EXPECT_EQ(c.v_hats.size(), binomial(m, BigInt(abs(c.delta)).get_ui()));
    for (const auto& v : c.v_hats) {
      BigInt sum = 0, dist2 = 0;
      for (int i = 0; i < m; ++i) {
        sum += v[i];
        dist2 += (c.s_hat[i] - v[i]) * (c.s_hat[i] - v[i]);
      }
      EXPECT_EQ(sum, d[0]);
      EXPECT_EQ(dist2, c.D_hat);
    }
    // D_hat = m{S/m}(1 - {S/m}) + S^2/m + m d_0^2 - 2 d_0 S.
    const Rational f = frac(ratio(c.S, m));
    EXPECT_EQ(Rational(c.D_hat), Rational(m * f * (1 - f) + ratio(c.S * c.S, m) + m * d[0] * d[0] - 2 * d[0] * c.S));
    BigInt tail = 0;
    for (int i = m + 1; i <= d.arrows(); ++i) tail += BigInt(d[i] - d[0]) * (d[i] - d[0]);
    EXPECT_EQ(c.D, c.D_hat + tail);

    // No lattice point on the hyperplane within L-infinity radius 2 of the
    // rounding is closer to s_hat.
    if (m > 4) continue;
    std::vector<int> off(static_cast<std::size_t>(m), -2);
    while (true) {
      BigInt sum = 0, dist2 = 0;
      for (int i = 0; i < m; ++i) {
        const BigInt x = c.rounded[i] + off[i];
        sum += x;
        dist2 += (c.s_hat[i] - x) * (c.s_hat[i] - x);
      }
      if (sum == d[0]) EXPECT_GE(dist2, c.D_hat);
      int k = 0;
      while (k < m && off[k] == 2) off[k++] = -2;
      if (k == m) break;
      ++off[k];
    }
  }
}

TEST(ClosedForm, Examples) {
  EXPECT_EQ(codim_closed_form(DimensionVector({7, 7, 8, 9, 12, 13}), 0), 39);
  EXPECT_EQ(theta_closed_form(DimensionVector({7, 7, 8, 9, 12, 13}), 0), 3);
  EXPECT_EQ(codim_closed_form(DimensionVector({3, 3, 3}), 0), 7);
  EXPECT_EQ(codim_closed_form(DimensionVector({5, 5, 6, 6, 6, 6}), 0), 19);
  EXPECT_EQ(theta_closed_form(DimensionVector({5, 5, 6, 6, 6, 6}), 0), 5);
  EXPECT_EQ(codim_closed_form(DimensionVector({2, 2, 3}), 0), 4);
  EXPECT_EQ(theta_closed_form(DimensionVector({2, 2, 3}), 0), 2);
  EXPECT_EQ(theta_closed_form(DimensionVector({2, 2, 2}), 0), 1);
  EXPECT_EQ(codim_closed_form(DimensionVector({3, 0, 3}), 0), 0);
  EXPECT_EQ(theta_closed_form(DimensionVector({3, 0, 3}), 0), 1);
  EXPECT_EQ(codim_closed_form(DimensionVector({4, 4, 4, 5, 5, 5, 5, 5, 5, 6, 6, 6}), 0), 12);
  EXPECT_EQ(theta_closed_form(DimensionVector({4, 4, 4, 5, 5, 5, 5, 5, 5, 6, 6, 6}), 0), 28);
  EXPECT_THROW(codim_closed_form(DimensionVector({2, 3}), 3), InvalidInput);
}

TEST(ClosedForm, ReducedRelevantCountForPositiveRank) {
  // d' - r = (1,1,3): m = 2 and theta = 1. The unreduced (3,3,5) has m = 2 as
  // well but S = 11 gives |delta| = 1 and theta = 2.
  EXPECT_EQ(theta_closed_form(DimensionVector({3, 3, 5}), 2), 1);
  EXPECT_EQ(codim_closed_form(DimensionVector({3, 3, 5}), 2), codim_closed_form(DimensionVector({1, 1, 3}), 0));
}

TEST(ClosedForm, MatchesQipEnumeration) {
  std::vector<int> e;
  // All weakly increasing vectors with entries 1..5 and N <= 4.
  auto rec = [&](auto&& self, int lo) -> void {
    if (e.size() >= 2) {
      DimensionVector d(e);
      auto sol = qip_enumerate(QipInstance(d));
      EXPECT_EQ(codim_closed_form(d, 0), sol.optimum) << d.to_string();
      EXPECT_EQ(theta_closed_form(d, 0), sol.count()) << d.to_string();
      EXPECT_EQ(closest_simplex_points(d).G_opt, sol.optimum);
      const int m = relevant_count(d);
      for (const auto& x : sol.minimizers)
        for (std::size_t i = m; i < x.size(); ++i) EXPECT_EQ(x[i], 0);
    }
    if (e.size() == 5) return;
    for (int v = lo; v <= 5; ++v) {
      e.push_back(v);
      self(self, v);
      e.pop_back();
    }
  };
  rec(rec, 1);
}
