#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "liecg/errors.hpp"
#include "liecg/liealg.hpp"

using namespace liecg;

namespace {

std::vector<LieAlgebra> small_algebras() {
  std::vector<LieAlgebra> v;
  for (int r = 1; r <= 4; ++r) v.emplace_back(Family::A, r);
  for (int r = 2; r <= 4; ++r) v.emplace_back(Family::B, r);
  for (int r = 2; r <= 4; ++r) v.emplace_back(Family::C, r);
  for (int r = 3; r <= 4; ++r) v.emplace_back(Family::D, r);
  v.emplace_back(Family::F4);
  v.emplace_back(Family::G2);
  v.emplace_back(Family::E6);
  return v;
}

Weight unit(int n, int i) {
  Weight w(n, 0);
  w[i] = 1;
  return w;
}

}  // namespace

TEST(Algebra, Validation) {
  EXPECT_THROW(LieAlgebra(Family::A, 0), std::invalid_argument);
  EXPECT_THROW(LieAlgebra(Family::B, 1), std::invalid_argument);
  EXPECT_THROW(LieAlgebra(Family::D, 2), std::invalid_argument);
  EXPECT_EQ(LieAlgebra(Family::E8).rank(), 8);
  EXPECT_EQ(LieAlgebra(Family::A, 2).name(), "SU(3)");
  EXPECT_EQ(LieAlgebra(Family::B, 3).name(), "SO(7)");
  EXPECT_EQ(LieAlgebra(Family::C, 2).name(), "Sp(4)");
  EXPECT_EQ(LieAlgebra(Family::D, 5).name(), "SO(10)");
  EXPECT_EQ(LieAlgebra::parse("g2"), LieAlgebra(Family::G2));
  EXPECT_EQ(LieAlgebra::parse("D4"), LieAlgebra(Family::D, 4));
  EXPECT_THROW(LieAlgebra::parse("E5"), std::invalid_argument);
}

TEST(Cartan, Matrices) {
  CartanMatrix a2(2, 2), g2(2, 2), b2(2, 2);
  a2 << 2, -1, -1, 2;
  g2 << 2, -1, -3, 2;
  b2 << 2, -2, -1, 2;
  EXPECT_EQ(cartan(LieAlgebra(Family::A, 2)), a2);
  EXPECT_EQ(cartan(LieAlgebra(Family::G2)), g2);
  EXPECT_EQ(cartan(LieAlgebra(Family::B, 2)), b2);
  CartanMatrix b3 = cartan(LieAlgebra(Family::B, 3));
  EXPECT_EQ(b3.row(1), Eigen::RowVector3i(-1, 2, -2));
  EXPECT_EQ(b3.row(2), Eigen::RowVector3i(0, -1, 2));
}

TEST(Cartan, SymmetrizedByRootWeights) {
  // A_ji w_i = A_ij w_j  (2 a_j.a_i is symmetric)
  for (const auto& la : small_algebras()) {
    auto a = cartan(la);
    auto w = root_weights(la);
    for (int i = 0; i < la.rank(); ++i)
      for (int j = 0; j < la.rank(); ++j) EXPECT_EQ(a(j, i) * w[i], a(i, j) * w[j]) << la.code();
  }
}

TEST(Roots, RootWeights) {
  EXPECT_EQ(root_weights(LieAlgebra(Family::A, 3)), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(root_weights(LieAlgebra(Family::G2)), (std::vector<int>{1, 3}));
  EXPECT_EQ(root_weights(LieAlgebra(Family::F4)), (std::vector<int>{1, 1, 2, 2}));
}

TEST(Roots, Positive) {
  auto a2 = positive_roots(LieAlgebra(Family::A, 2));
  std::set<Weight> s(a2.begin(), a2.end());
  EXPECT_EQ(s, (std::set<Weight>{{1, 0}, {0, 1}, {1, 1}}));
  EXPECT_EQ(positive_roots(LieAlgebra(Family::G2)).size(), 6u);
  EXPECT_EQ(positive_roots(LieAlgebra(Family::B, 3)).size(), 9u);
  EXPECT_EQ(positive_roots(LieAlgebra(Family::E7)).size(), 63u);
  EXPECT_EQ(positive_roots(LieAlgebra(Family::E8)).size(), 120u);
  EXPECT_EQ(positive_roots(LieAlgebra(Family::D, 5)).size(), 20u);
}

TEST(Roots, ClosedUnderSimpleReflections) {
  // independent check of every root table: s_i(alpha) = alpha - <alpha, a_i> a_i
  for (const auto& la : small_algebras()) {
    const auto& roots = positive_roots(la);
    std::set<Weight> all(roots.begin(), roots.end());
    for (const auto& r : roots) {
      Weight d = root_dynkin(la, r);
      for (int i = 0; i < la.rank(); ++i) {
        if (r == unit(la.rank(), i)) continue;
        Weight s = r;
        s[i] -= d[i];
        EXPECT_TRUE(all.contains(s)) << la.code() << " " << format_weight(r);
      }
    }
  }
}

TEST(Roots, LowestRoot) {
  EXPECT_EQ(lowest_root_label(LieAlgebra(Family::A, 2), {1, 1}), -2);
  EXPECT_EQ(lowest_root_label(LieAlgebra(Family::E6), {1, 0, 0, 0, 0, 0}), -1);
  EXPECT_EQ(lowest_root_label(LieAlgebra(Family::G2), {0, 1}), -2);
  EXPECT_EQ(lowest_root_label(LieAlgebra(Family::F4), {1, 1, 1, 1}), -8);
  EXPECT_EQ(lowest_root(LieAlgebra(Family::G2)), (Weight{-3, -2}));
  EXPECT_EQ(lowest_root(LieAlgebra(Family::E8)), (Weight{-2, -4, -6, -5, -4, -3, -2, -3}));
  EXPECT_EQ(lowest_root(LieAlgebra(Family::B, 3)), (Weight{-1, -2, -2}));
  EXPECT_EQ(lowest_root(LieAlgebra(Family::C, 3)), (Weight{-2, -2, -1}));
  EXPECT_EQ(lowest_root(LieAlgebra(Family::D, 5)), (Weight{-1, -2, -2, -1, -1}));
}

TEST(Descent, Examples) {
  auto a1 = complete_descent(LieAlgebra(Family::A, 1), {2});
  ASSERT_EQ(a1.size(), 3u);
  EXPECT_EQ(a1[1].dynkin, Weight{0});
  EXPECT_EQ(a1[2].level, 2);

  auto e6 = complete_descent(LieAlgebra(Family::E6), {1, 0, 0, 0, 0, 0});
  ASSERT_EQ(e6.size(), 27u);
  EXPECT_EQ(e6.back().level, 16);
  EXPECT_EQ(e6.back().dynkin, (Weight{0, 0, 0, 0, -1, 0}));
  EXPECT_EQ(complete_descent(LieAlgebra(Family::A, 2), {1, 1}).size(), 7u);
}

TEST(Descent, E6Order) {
  auto e6 = complete_descent(LieAlgebra(Family::E6), {1, 0, 0, 0, 0, 0});
  EXPECT_EQ(e6[8].dynkin, (Weight{0, 0, 1, 0, -1, -1}));
  EXPECT_EQ(e6[9].dynkin, (Weight{0, 1, -1, 0, 1, 0}));
  EXPECT_EQ(e6[9].descent, (Weight{1, 1, 2, 1, 0, 1}));
}

TEST(Freudenthal, Examples) {
  auto a2 = freudenthal(LieAlgebra(Family::A, 2), {1, 1});
  EXPECT_EQ(a2[3].dynkin, (Weight{0, 0}));
  EXPECT_EQ(a2[3].degeneracy, 2);
  for (const auto& r : freudenthal(LieAlgebra(Family::A, 1), {2})) EXPECT_EQ(r.degeneracy, 1);
  auto a22 = freudenthal(LieAlgebra(Family::A, 2), {2, 2});
  int m0 = 0;
  for (const auto& r : a22)
    if (r.dynkin == Weight{0, 0}) m0 = r.degeneracy;
  EXPECT_EQ(m0, 3);
}

TEST(Weyl, Dimensions) {
  EXPECT_EQ(weyl_dim(LieAlgebra(Family::A, 2), {1, 1}), 8);
  EXPECT_EQ(weyl_dim(LieAlgebra(Family::E6), {1, 0, 0, 0, 0, 0}), 27);
  EXPECT_EQ(weyl_dim(LieAlgebra(Family::E8), {0, 0, 0, 0, 0, 0, 1, 0}), 248);
  EXPECT_EQ(weyl_dim(LieAlgebra(Family::E8), {0, 0, 0, 0, 0, 0, 2, 0}), 27000);
  EXPECT_EQ(weyl_dim(LieAlgebra(Family::E7), {0, 0, 0, 0, 0, 1, 0}), 56);
  EXPECT_EQ(weyl_dim(LieAlgebra(Family::G2), {1, 0}), 7);
  EXPECT_EQ(weyl_dim(LieAlgebra(Family::F4), {1, 0, 0, 0}), 26);
  EXPECT_EQ(weyl_dim(LieAlgebra(Family::B, 3), {0, 0, 1}), 8);
  EXPECT_THROW(weyl_dim(LieAlgebra(Family::A, 2), {1}), std::invalid_argument);
}

TEST(LevelVector, Examples) {
  EXPECT_EQ(level_vector(LieAlgebra(Family::A, 1)), Weight{1});
  EXPECT_EQ(level_vector(LieAlgebra(Family::A, 2)), (Weight{2, 2}));
  EXPECT_EQ(level_vector(LieAlgebra(Family::E6))[0], 16);
}

TEST(Adjoint, HighestWeight) {
  EXPECT_EQ(adjoint_hw(LieAlgebra(Family::A, 2)), (Weight{1, 1}));
  EXPECT_EQ(adjoint_hw(LieAlgebra(Family::E8)), (Weight{0, 0, 0, 0, 0, 0, 1, 0}));
  EXPECT_EQ(adjoint_hw(LieAlgebra(Family::A, 1)), Weight{2});
  EXPECT_EQ(adjoint_hw(LieAlgebra(Family::G2)), (Weight{0, 1}));
}

// Property suite over all small algebras, fundamentals and adjoint.
TEST(WeightSystemProperty, DimensionsRootsLevels) {
  for (const auto& la : small_algebras()) {
    const int n = la.rank();
    auto a = cartan(la);
    auto rv = level_vector(la);
    std::vector<HighestWeight> hws;
    for (int i = 0; i < n; ++i) hws.push_back(unit(n, i));
    hws.push_back(adjoint_hw(la));
    for (const auto& hw : hws) {
      auto recs = freudenthal(la, hw);
      long total = 0;
      int maxlev = 0;
      std::map<int, long> by_level;
      for (const auto& r : recs) {
        total += r.degeneracy;
        maxlev = std::max(maxlev, r.level);
        by_level[r.level] += r.degeneracy;
        int lev = 0;
        for (int x : r.descent) lev += x;
        EXPECT_EQ(lev, r.level);
        for (int i = 0; i < n; ++i) {
          int d = hw[i];
          for (int j = 0; j < n; ++j) d -= r.descent[j] * a(j, i);
          EXPECT_EQ(d, r.dynkin[i]);
        }
      }
      EXPECT_EQ(total, weyl_dim(la, hw)) << la.code() << format_weight(hw);
      EXPECT_EQ(maxlev, dot(rv, hw)) << la.code() << format_weight(hw);
      for (const auto& [l, c] : by_level) EXPECT_EQ(c, by_level[maxlev - l]);
    }
    // adjoint
    auto adj = freudenthal(la, adjoint_hw(la));
    long dim = weyl_dim(la, adjoint_hw(la));
    EXPECT_EQ(positive_roots(la).size(), static_cast<std::size_t>((dim - n) / 2));
    std::multiset<Weight> nonzero, expect;
    for (const auto& r : adj) {
      if (r.dynkin == Weight(n, 0))
        EXPECT_EQ(r.degeneracy, n);
      else
        for (int k = 0; k < r.degeneracy; ++k) nonzero.insert(r.dynkin);
    }
    for (const auto& p : positive_roots(la)) {
      Weight d = root_dynkin(la, p);
      expect.insert(d);
      for (int& x : d) x = -x;
      expect.insert(d);
    }
    EXPECT_EQ(nonzero, expect) << la.code();
  }
}

TEST(LevelVectorProperty, SampledHighestWeights) {
  for (const auto& la : {LieAlgebra(Family::A, 3), LieAlgebra(Family::B, 2),
                         LieAlgebra(Family::G2), LieAlgebra(Family::C, 3)}) {
    auto rv = level_vector(la);
    const int n = la.rank();
    Weight hw(n, 0);
    for (int code = 1; code < 27 && code < static_cast<int>(std::pow(3, n)); code += 5) {
      int c = code;
      for (int i = 0; i < n; ++i, c /= 3) hw[i] = c % 3;
      auto recs = complete_descent(la, hw);
      EXPECT_EQ(recs.back().level, dot(rv, hw));
    }
  }
}

TEST(Format, Weights) {
  EXPECT_EQ(format_weight({1, 0, -1}), "(1,0,-1)");
  EXPECT_EQ(format_weight_trailing({1, 0, -1}), "(1,0,-1,)");
}
