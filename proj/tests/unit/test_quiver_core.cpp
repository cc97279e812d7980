#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "quiver/errors.hpp"
#include "quiver/quiver_core.hpp"

using namespace quiver;

namespace {

KostantPartition first_example() {
  return KostantPartition::from_rows({{2, 1, 1, 1}, {2, 0, 1}, {0, 2}, {2}});
}

// Independent oracle: all nonnegative fillings of the triangle bounded by
// min(d) per cell, kept when the column sums match.
std::size_t count_by_filling(const DimensionVector& d) {
  const int n = static_cast<int>(d.size());
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) cells.emplace_back(i, j);
  const int bound = *std::max_element(d.entries().begin(), d.entries().end());
  std::vector<int> v(cells.size(), 0);
  std::size_t count = 0;
  while (true) {
    std::vector<int> col(n, 0);
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (int k = cells[c].first; k <= cells[c].second; ++k) col[k] += v[c];
    if (col == d.entries()) ++count;
    std::size_t c = 0;
    while (c < v.size() && v[c] == bound) v[c++] = 0;
    if (c == v.size()) break;
    ++v[c];
  }
  return count;
}

}  // namespace

TEST(DimensionVector, Validation) {
  EXPECT_THROW(DimensionVector({3}), InvalidInput);
  EXPECT_THROW(DimensionVector({1, -1}), InvalidInput);
  DimensionVector d({3, 1, 2});
  EXPECT_EQ(d.sorted(), DimensionVector({1, 2, 3}));
  EXPECT_EQ(d.sorting_permutation(), (std::vector<std::size_t>{1, 2, 0}));
  EXPECT_EQ(d.to_string(), "(3,1,2)");
}

TEST(RepDim, Examples) {
  EXPECT_EQ(rep_dim(DimensionVector({2, 2, 3})), 10);
  EXPECT_EQ(rep_dim(DimensionVector({2, 3, 2})), 12);
  EXPECT_EQ(rep_dim(DimensionVector({0, 5})), 0);
}

TEST(Enumerate, SmallCases) {
  EXPECT_EQ(enumerate_kostant_partitions(DimensionVector({0, 0, 0})).size(), 1u);
  auto one = enumerate_kostant_partitions(DimensionVector({1, 1}));
  ASSERT_EQ(one.size(), 2u);
  // Row-major lex: (m00, m01, m11) = (0,1,0) before (1,0,1).
  EXPECT_EQ(one[0], KostantPartition::from_rows({{0, 1}, {0}}));
  EXPECT_EQ(one[1], KostantPartition::from_rows({{1, 0}, {1}}));
}

TEST(Enumerate, TwoTwoTwoTopZeroSubsetHasSix) {
  DimensionVector d({2, 2, 2});
  auto all = enumerate_kostant_partitions(d);
  EXPECT_EQ(all.size(), 10u);
  std::size_t top_zero = std::count_if(all.begin(), all.end(), [](const auto& m) { return m.top() == 0; });
  EXPECT_EQ(top_zero, 6u);
}

TEST(Enumerate, MatchesFillingOracleAndIsSortedUnique) {
  for (auto e : std::vector<std::vector<int>>{{1, 2}, {2, 2, 2}, {2, 2, 3}, {1, 3, 2, 1}, {0, 2, 1}, {3, 1, 2}}) {
    DimensionVector d(e);
    auto all = enumerate_kostant_partitions(d);
    EXPECT_EQ(all.size(), count_by_filling(d)) << d.to_string();
    EXPECT_EQ(BigInt(static_cast<unsigned long>(all.size())), count_kostant_partitions(d));
    for (std::size_t k = 1; k < all.size(); ++k) EXPECT_LT(all[k - 1].entries(), all[k].entries());
    for (const auto& m : all) EXPECT_EQ(m.dimension_vector(), d);
  }
}

TEST(Enumerate, CapThrows) {
  EXPECT_THROW(enumerate_kostant_partitions(DimensionVector({2, 2, 2}), 5), ResourceLimit);
  EXPECT_NO_THROW(enumerate_kostant_partitions(DimensionVector({2, 2, 2}), 10));
}

TEST(Count, RestrictedToTop) {
  DimensionVector d({2, 2, 2});
  EXPECT_EQ(count_kostant_partitions(d, 0), 6);
  EXPECT_EQ(count_kostant_partitions(d, 1), 3);
  EXPECT_EQ(count_kostant_partitions(d, 2), 1);
}

TEST(RankPatterns, FirstExample) {
  const auto m = first_example();
  EXPECT_EQ(m.dimension_vector(), DimensionVector({5, 6, 5, 6}));
  const auto r = kostant_to_rank(m);
  EXPECT_EQ(r, RankPattern::from_rows({{5, 3, 2, 1}, {6, 3, 2}, {5, 4}, {6}}));
  EXPECT_EQ(rank_to_kostant(r), m);
  EXPECT_TRUE(is_orbit_rank_pattern(r));
  EXPECT_EQ(orbit_codim(m), 18);
  EXPECT_EQ(rep_dim(m.dimension_vector()) - orbit_codim(m), 72);

  auto bad = r;
  bad.at(1, 3) = 1;
  EXPECT_FALSE(is_orbit_rank_pattern(bad));
  EXPECT_EQ(rank_to_kostant(bad).at(2, 2), -1);
}

TEST(RankPatterns, TrivialCases) {
  const auto z = kostant_to_rank(KostantPartition(3));
  for (int v : z.entries()) EXPECT_EQ(v, 0);
  const auto m = rank_to_kostant(RankPattern::from_rows({{1, 1}, {1}}));
  EXPECT_EQ(m, KostantPartition::from_rows({{0, 1}, {0}}));
}

TEST(RankPatterns, RoundTripRandomSample) {
  std::mt19937 rng(7);
  for (auto e : std::vector<std::vector<int>>{{2, 3, 2, 3}, {3, 3, 3}, {1, 2, 3, 2, 1}}) {
    auto all = enumerate_kostant_partitions(DimensionVector(e));
    for (int t = 0; t < 40; ++t) {
      const auto& m = all[rng() % all.size()];
      EXPECT_EQ(rank_to_kostant(kostant_to_rank(m)), m);
    }
  }
}

TEST(OrbitCodim, DenseOrbitAndBilinearForm) {
  auto dense = KostantPartition(4);
  dense.at(0, 3) = 3;
  EXPECT_EQ(orbit_codim(dense), 0);
  EXPECT_EQ(orbit_codim_exact(dense), 0);
  // m_00 = m_11 = 1 on (1,1): Ext(M_00, M_11) = 1.
  EXPECT_EQ(orbit_codim(KostantPartition::from_rows({{1, 0}, {1}})), 1);
  EXPECT_EQ(orbit_codim(KostantPartition::from_rows({{0, 1}, {0}})), 0);
}

TEST(OrbitCodim, OrbitDimensionAgreesWithStabilizerCount) {
  // codim = rep_dim - dim G + dim End, where dim End(M) = sum m m' Hom(M_ab, M_uv)
  // and Hom(M_ab, M_uv) = 1 iff u <= a <= v <= b.
  for (auto e : std::vector<std::vector<int>>{{2, 2, 2}, {2, 2, 3}, {1, 3, 2, 2}}) {
    DimensionVector d(e);
    std::int64_t dim_g = 0;
    for (int x : e) dim_g += static_cast<std::int64_t>(x) * x;
    for (const auto& m : enumerate_kostant_partitions(d)) {
      std::int64_t end = 0;
      const int n = m.vertices();
      for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
          for (int u = 0; u < n; ++u)
            for (int v = u; v < n; ++v)
              if (u <= a && a <= v && v <= b) end += std::int64_t(m.at(a, b)) * m.at(u, v);
      EXPECT_EQ(orbit_codim(m), rep_dim(d) - dim_g + end) << m.to_string();
    }
  }
}

TEST(OrbitCodim, ShiftInvariance) {
  for (const auto& m : enumerate_kostant_partitions(DimensionVector({2, 2, 2}))) {
    const auto s = longest_root_shift(m, 3);
    EXPECT_EQ(s.dimension_vector(), DimensionVector({5, 5, 5}));
    EXPECT_EQ(orbit_codim(s), orbit_codim(m));
  }
  auto m = KostantPartition::from_rows({{0, 1}, {0}});
  EXPECT_EQ(longest_root_shift(m, 0), m);
  EXPECT_EQ(longest_root_shift(m, 1).dimension_vector(), DimensionVector({2, 2}));
  EXPECT_THROW(longest_root_shift(m, -2), InvalidInput);
}

TEST(Components, ClosureExamples) {
  auto codims = [](const std::vector<OrbitDescriptor>& v) {
    std::multiset<std::int64_t> s;
    for (const auto& o : v) s.insert(o.codim);
    return s;
  };
  EXPECT_EQ(codims(enumerate_components(DimensionVector({2, 2, 2}), 0)), (std::multiset<std::int64_t>{3, 4, 4}));
  EXPECT_EQ(codims(enumerate_components(DimensionVector({2, 3, 2}), 0)), (std::multiset<std::int64_t>{4, 4}));
  EXPECT_EQ(codims(enumerate_components(DimensionVector({2, 4, 2}), 0)), (std::multiset<std::int64_t>{4}));
  EXPECT_EQ(codims(enumerate_components(DimensionVector({2, 2, 3}), 0)), (std::multiset<std::int64_t>{4, 4, 6}));
  EXPECT_EQ(codims(enumerate_components(DimensionVector({3, 2, 2}), 0)), (std::multiset<std::int64_t>{4, 4, 6}));
  EXPECT_THROW(enumerate_components(DimensionVector({2, 4, 2}), 3), InvalidInput);
  EXPECT_THROW(enumerate_components(DimensionVector({2, 4, 2}), -1), InvalidInput);
}

TEST(Components, EveryOrbitLiesBelowAComponent) {
  for (auto e : std::vector<std::vector<int>>{{2, 2, 2}, {2, 3, 1, 2}, {3, 3, 3}}) {
    DimensionVector d(e);
    for (int r = 0; r <= d.min(); ++r) {
      const auto comps = enumerate_components(d, r);
      for (const auto& m : enumerate_kostant_partitions(d)) {
        if (m.top() > r) continue;
        const auto rk = kostant_to_rank(m);
        EXPECT_TRUE(std::any_of(comps.begin(), comps.end(), [&](const auto& c) { return rk.dominated_by(c.rank); }));
      }
      // Components of the closure all have top rank exactly r.
      for (const auto& c : comps) EXPECT_EQ(c.top_rank, r);
    }
  }
}

TEST(Components, BruteForceExamples) {
  auto a = top_components_bruteforce(DimensionVector({3, 3, 3}), 0);
  EXPECT_EQ(a.codim, 7);
  EXPECT_EQ(a.count, 2);
  EXPECT_EQ(a.witnesses.size(), 2u);
  auto z = top_components_bruteforce(DimensionVector({0, 3, 2}), 0);
  EXPECT_EQ(z.codim, 0);
  EXPECT_EQ(z.count, 1);
}

TEST(Components, LargeExample) {
  auto a = top_components_bruteforce(DimensionVector({5, 5, 6, 6, 6, 6}), 0);
  EXPECT_EQ(a.codim, 19);
  EXPECT_EQ(a.count, 5);
}

TEST(Laces, RepresentativeReproducesRanks) {
  for (auto e : std::vector<std::vector<int>>{{2, 2, 2}, {2, 2, 3}, {3, 1, 2}}) {
    for (const auto& m : enumerate_kostant_partitions(DimensionVector(e))) {
      EXPECT_EQ(rank_pattern_of(lace_representative(m)), kostant_to_rank(m)) << m.to_string();
    }
  }
  const auto m = first_example();
  EXPECT_EQ(rank_pattern_of(lace_representative(m)), kostant_to_rank(m));
  const auto single = lace_representative(KostantPartition::from_rows({{0, 1}, {0}}));
  EXPECT_EQ(single.map(1)(0, 0), 1);
}

TEST(Laces, Horizontal) {
  EXPECT_THROW(horizontal_lace_diagram(KostantPartition::from_rows({{0, 1, 0}, {0, 1}, {0}})), InvalidInput);
  for (const auto& m : enumerate_kostant_partitions(DimensionVector({2, 2, 3}))) {
    const auto l = horizontal_lace_diagram(m);
    EXPECT_TRUE(l.is_horizontal());
    EXPECT_EQ(l.kostant(), m);
    EXPECT_EQ(rank_pattern_of(l.representative()), kostant_to_rank(m));
  }
  auto block = KostantPartition(3);
  block.at(0, 2) = 4;
  const auto l = horizontal_lace_diagram(block);
  EXPECT_EQ(l.laces().size(), 4u);
  EXPECT_TRUE(l.is_horizontal());
}

TEST(Laces, RejectsSharedDots) {
  DimensionVector d({1, 1});
  EXPECT_THROW(LaceDiagram(d, {Lace{0, 1, {0, 0}}, Lace{0, 0, {0}}}), InvalidInput);
  EXPECT_THROW(LaceDiagram(d, {Lace{0, 0, {0}}}), InvalidInput);
}

TEST(RankPatternOf, TrivialTuples) {
  DimensionVector d({2, 2, 2});
  const auto z = rank_pattern_of(MatrixTuple::zero(d));
  EXPECT_EQ(z, RankPattern::from_rows({{2, 0, 0}, {2, 0}, {2}}));
  MatrixTuple id(d, {RationalMatrix::identity(2), RationalMatrix::identity(2)});
  EXPECT_EQ(rank_pattern_of(id), RankPattern::from_rows({{2, 2, 2}, {2, 2}, {2}}));
  // Non-integral entries take the rational path.
  RationalMatrix a(2, 2);
  a(0, 0) = Rational(1, 3);
  a(1, 1) = Rational(2, 5);
  RationalMatrix b(2, 2);
  b(0, 0) = 1;
  b(0, 1) = 1;
  MatrixTuple t(d, {a, b});
  EXPECT_EQ(rank_pattern_of(t), RankPattern::from_rows({{2, 2, 1}, {2, 1}, {2}}));
}
