#include "hedgelab/maxingale.hpp"

#include "hedgelab/cond_calc.hpp"

#include "support/generators.hpp"
#include "support/models.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

namespace hedgelab {
namespace {

using testing::Gen;

FilteredSpace binary(std::size_t depth) { return make_tree_space(uniform_shape(depth, 2)); }

// Every vector in {0..N}^n that passes the stopping-time test.
std::vector<std::vector<std::size_t>> brute_stopping_times(const FilteredSpace& space) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> tau(space.outcome_count(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t w) {
    if (w == tau.size()) {
      if (is_stopping_time(space, tau)) out.push_back(tau);
      return;
    }
    for (std::size_t t = 0; t <= space.last_time(); ++t) {
      tau[w] = t;
      rec(w + 1);
    }
  };
  rec(0);
  return out;
}

TEST(SigmaAt, CellsFollowTheStoppedAtom) {
  const auto space = binary(2);
  EXPECT_EQ(sigma_at(space, StoppingTime::constant(space, 0)), Partition::trivial(4));
  EXPECT_EQ(sigma_at(space, StoppingTime::constant(space, 2)), Partition::singletons(4));
  const StoppingTime first_up(space, {1, 1, 2, 2});
  EXPECT_EQ(sigma_at(space, first_up), Partition({{0, 1}, {2}, {3}}, 4));
  EXPECT_EQ(cond_esssup_at(space, first_up, RandomVariable{1, 5, 2, 3}), (RandomVariable{5, 5, 2, 3}));
  EXPECT_THROW(StoppingTime(space, {0, 1, 1, 1}), InputError);
}

TEST(Stopping, StoppedValueAndProcess) {
  const auto space = binary(2);
  const ScalarProcess m{RandomVariable(4, Rational(0)), RandomVariable{1, 1, 2, 2}, RandomVariable{3, 4, 5, 6}};
  const StoppingTime tau(space, {1, 1, 2, 2});
  EXPECT_EQ(stopped_value(m, tau), (RandomVariable{1, 1, 5, 6}));
  const auto stopped = stopped_process(m, tau);
  EXPECT_EQ(stopped[0], m[0]);
  EXPECT_EQ(stopped[2], (RandomVariable{1, 1, 5, 6}));
}

TEST(SubMaxingale, FirstViolationIsReported) {
  const auto space = testing::one_step_space(2);
  const ScalarProcess m{RandomVariable{3, 3}, RandomVariable{1, 2}};
  const auto v = sub_maxingale_violation(space, m);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->u, 0u);
  EXPECT_EQ(v->t, 1u);
  EXPECT_TRUE(is_super_maxingale(space, m));
  EXPECT_TRUE(is_sub_maxingale(space, {RandomVariable{2, 2}, RandomVariable{1, 2}}));
}

TEST(Enumeration, BinaryTreeCounts) {
  EXPECT_EQ(count_stopping_times(binary(1)), 2u);
  EXPECT_EQ(count_stopping_times(binary(2)), 5u);
  EXPECT_EQ(count_stopping_times(binary(3)), 26u);
  const auto all = enumerate_stopping_times(binary(2), 100);
  ASSERT_EQ(all.size(), 5u);
  EXPECT_EQ(all.front(), StoppingTime::constant(binary(2), 0));
  EXPECT_THROW(enumerate_stopping_times(binary(3), 10), InputError);
}

TEST(Enumeration, PlanIncludesEveryDeterministicPair) {
  const auto space = binary(4);
  const auto plan = plan_pairs(space, 64, 9);
  EXPECT_FALSE(plan.exhaustive);
  EXPECT_EQ(plan.pairs.size(), 64u);
  for (std::size_t s = 0; s <= 4; ++s) {
    for (std::size_t t = 0; t <= 4; ++t) {
      const std::pair pair{StoppingTime::constant(space, s), StoppingTime::constant(space, t)};
      EXPECT_NE(std::find(plan.pairs.begin(), plan.pairs.end(), pair), plan.pairs.end());
    }
  }
  EXPECT_EQ(plan_pairs(space, 64, 9).pairs, plan.pairs);
}

TEST(Dyadic, RefinementRoundsUpToTheGrid) {
  const auto space = testing::with_dyadic_times(binary(2));
  const StoppingTime tau(space, {1, 1, 2, 2});
  const auto level1 = dyadic_refine(space, tau, 1);
  EXPECT_EQ(level1.value, (std::vector<Rational>{Rational(1, 2), Rational(1, 2), 1, 1}));
  const auto level0 = dyadic_refine(space, tau, 0);
  EXPECT_EQ(level0.value, std::vector<Rational>(4, Rational(1)));
  const auto at_zero = dyadic_refine(space, StoppingTime::constant(space, 0), 2);
  EXPECT_EQ(at_zero.value, std::vector<Rational>(4, Rational(1, 4)));
  EXPECT_EQ(dyadic_embedding_level(space), 1u);
  EXPECT_THROW(dyadic_refine(testing::menu_example_space(), StoppingTime::constant(testing::menu_example_space(), 0), 1),
               InputError);
}

// Enumeration against brute force, minimality of the stopped esssup, and the
// pair criterion against the stopped-process definition.
TEST(MaxingaleProperties, EnumerationAndStrongCriterion) {
  Gen g(81);
  for (int i = 0; i < 120; ++i) {
    const auto space = testing::random_tree_space(g, 3, 2);
    if (space.outcome_count() > 6) continue;
    const auto brute = brute_stopping_times(space);
    const auto all = enumerate_stopping_times(space, 10000);
    ASSERT_EQ(count_stopping_times(space), brute.size());
    ASSERT_EQ(all.size(), brute.size());
    for (const auto& tau : all) {
      ASSERT_NE(std::find(brute.begin(), brute.end(), tau.values()), brute.end());
      const auto x = testing::random_variable(g, space.outcome_count());
      const auto sigma = sigma_at(space, tau);
      const auto sup = cond_esssup_at(space, tau, x);
      ASSERT_TRUE(sigma.is_measurable(sup));
      ASSERT_TRUE(pointwise_le(x, sup));
      // Lowering the value on any cell breaks domination.
      for (const auto& cell : sigma.cells()) {
        Rational best = x[cell.front()];
        for (auto w : cell) best = std::max(best, x[w]);
        ASSERT_EQ(sup[cell.front()], best);
      }
    }

    const auto m = g.coin() ? testing::random_sub_maxingale(g, space) : testing::random_process(g, space);
    const auto v = is_strong_sub_maxingale(space, m, 1u << 14, 3);
    ASSERT_TRUE(v.exhaustive);
    ASSERT_TRUE(v.definition_verdict);
    ASSERT_EQ(v.strong, *v.definition_verdict);
    if (v.strong) {
      ASSERT_TRUE(is_sub_maxingale(space, m));
    }
    if (!v.strong) {
      const auto& [s, tau] = *v.violating_pair;
      const auto lhs = stopped_value(m, min(s, tau));
      const auto rhs = cond_esssup_at(space, s, stopped_value(m, tau));
      ASSERT_LT(rhs[*v.violating_outcome], lhs[*v.violating_outcome]);
    }
  }
}

TEST(MaxingaleProperties, LemmaSuiteHasNoViolations) {
  Gen g(82);
  for (int i = 0; i < 60; ++i) {
    const auto space = testing::with_dyadic_times(testing::random_tree_space(g, 3, 2));
    const auto m = testing::random_sub_maxingale(g, space);
    std::vector<RandomVariable> xs;
    for (int k = 0; k < 3; ++k) xs.push_back(testing::random_variable(g, space.outcome_count()));
    const auto report = run_lemma_suite(space, m, xs, 1u << 12, 4);
    ASSERT_TRUE(report.sub_maxingale);
    for (const auto& c : report.checks) ASSERT_EQ(c.violations, 0u) << c.name << ": " << c.first_violation;
    ASSERT_EQ(report.violations(), 0u);
  }
}

}  // namespace
}  // namespace hedgelab
