#include "hedgelab/cond_calc.hpp"

#include "support/generators.hpp"
#include "support/models.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

namespace hedgelab {
namespace {

using testing::Gen;

TEST(CondEsssup, AtomWiseMaximum) {
  const auto space = testing::menu_example_space();
  EXPECT_EQ(cond_esssup(space, 0, RandomVariable{1, 2, 3, 4}), (RandomVariable{2, 2, 4, 4}));
  EXPECT_EQ(cond_esssup(space, 1, RandomVariable{1, 2, 3, 4}), (RandomVariable{1, 2, 3, 4}));
  EXPECT_EQ(cond_essinf(space, 0, RandomVariable{1, 2, 3, 4}), (RandomVariable{1, 1, 3, 3}));
}

TEST(CondEsssup, MenuExampleSecondEntry) {
  const auto space = testing::menu_example_space();
  const auto h = testing::menu_example_claim();
  const auto v2 = testing::menu_example_menu().entries[1];
  EXPECT_EQ(h - v2, (RandomVariable{2, 0, 0, 0}));
  EXPECT_EQ(cond_esssup(space, 0, h - v2), (RandomVariable{2, 2, 0, 0}));
}

TEST(CondSupport, AttainedValuesPerAtom) {
  const auto model = testing::one_period(1, {2, Rational(1, 2)});
  const auto support = cond_support(model.space(), 0, model.prices().at(1));
  ASSERT_EQ(support.size(), 1u);
  EXPECT_EQ(support[0], (std::vector<Point>{{2}, {Rational(1, 2)}}));

  const auto space = testing::menu_example_space();
  const RandomVector x({{1}, {2}, {3}, {4}}, 1);
  const auto s = cond_support(space, 0, x);
  EXPECT_EQ(s[0], (std::vector<Point>{{1}, {2}}));
  EXPECT_EQ(s[1], (std::vector<Point>{{3}, {4}}));
  const RandomVector flat({{5}, {5}, {5}, {5}}, 1);
  for (const auto& cell : cond_support(space, 0, flat)) EXPECT_EQ(cell.size(), 1u);
}

TEST(ConvexHull, InteriorPointHasWeights) {
  const auto r = in_convex_hull({1}, {{Rational(1, 2)}, {2}});
  ASSERT_TRUE(r.member);
  EXPECT_EQ(r.weights, (std::vector<Rational>{Rational(2, 3), Rational(1, 3)}));
}

TEST(ConvexHull, CloudMemberIsInside) {
  const std::vector<Point> cloud{{0, 0}, {2, 1}, {1, 3}};
  for (const auto& p : cloud) EXPECT_TRUE(in_convex_hull(p, cloud).member);
}

TEST(ConvexHull, OutsidePointGetsTightSeparator) {
  const auto r = in_convex_hull({1}, {{2}, {3}});
  ASSERT_FALSE(r.member);
  EXPECT_EQ(r.normal, (Point{1}));
  EXPECT_EQ(r.offset, 2);
  EXPECT_LT(r.separator({1}), 0);
  EXPECT_EQ(r.separator({2}), 0);
}

TEST(ConvexHull, DegenerateCloudAndErrors) {
  EXPECT_TRUE(in_convex_hull({1, 1}, {{1, 1}, {1, 1}}).member);
  EXPECT_FALSE(in_convex_hull({1, 2}, {{1, 1}, {1, 1}}).member);
  EXPECT_THROW(in_convex_hull({1}, {}), InputError);
  EXPECT_THROW(in_convex_hull({1}, {{1, 2}}), InputError);
}

// Tower property, pull-out and monotonicity on random trees, against the
// brute-force outcome scan.
TEST(CondEsssupProperties, TowerPullOutMonotonicity) {
  Gen g(31);
  for (int i = 0; i < 300; ++i) {
    const auto space = testing::random_tree_space(g, 4, 3);
    const auto x = testing::random_variable(g, space.outcome_count());
    const auto t = static_cast<std::size_t>(g.uniform(0, static_cast<int>(space.last_time())));
    const auto u = static_cast<std::size_t>(g.uniform(0, static_cast<int>(t)));
    ASSERT_EQ(cond_esssup(space, t, x), oracle::esssup(space, t, x));
    ASSERT_EQ(cond_esssup(space, u, cond_esssup(space, t, x)), cond_esssup(space, u, x));

    auto alpha = testing::random_measurable(g, space, t, 0, 3);
    ASSERT_EQ(cond_esssup(space, t, alpha * x), alpha * cond_esssup(space, t, x));

    auto y = x;
    for (std::size_t w = 0; w < y.size(); ++w) y[w] += g.rational(0, 2);
    ASSERT_TRUE(pointwise_le(cond_esssup(space, t, x), cond_esssup(space, t, y)));
  }
}

// Hull membership agrees with Caratheodory enumeration on clouds of up to 8 points.
TEST(ConvexHullProperties, AgreesWithCaratheodory) {
  Gen g(32);
  for (int i = 0; i < 1500; ++i) {
    const std::size_t d = static_cast<std::size_t>(g.uniform(1, 3));
    std::vector<Point> cloud(static_cast<std::size_t>(g.uniform(1, 8)), Point(d));
    for (auto& p : cloud) {
      for (auto& v : p) v = Rational(g.uniform(-3, 3));
    }
    Point x(d);
    for (auto& v : x) v = g.rational(-3, 3);
    const auto r = in_convex_hull(x, cloud);
    ASSERT_EQ(r.member, oracle::in_hull(x, cloud));
    if (r.member) {
      Point combo(d);
      Rational total = 0;
      for (std::size_t k = 0; k < cloud.size(); ++k) {
        ASSERT_GE(r.weights[k], 0);
        total += r.weights[k];
        for (std::size_t j = 0; j < d; ++j) combo[j] += r.weights[k] * cloud[k][j];
      }
      ASSERT_EQ(total, 1);
      ASSERT_EQ(combo, x);
    } else {
      ASSERT_LT(r.separator(x), 0);
      for (const auto& c : cloud) ASSERT_GE(r.separator(c), 0);
    }
  }
}

}  // namespace
}  // namespace hedgelab
