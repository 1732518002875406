#include "hedgelab/prob_space.hpp"

#include "support/generators.hpp"
#include "support/models.hpp"

#include <gtest/gtest.h>

namespace hedgelab {
namespace {

using testing::Gen;

TEST(Rationals, ParseAndFormat) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(format_rational(Rational(-2, 4)), "-1/2");
  EXPECT_EQ(format_rational(Rational(3)), "3/1");
  EXPECT_EQ(pretty_rational(Rational(3)), "3");
  EXPECT_THROW(parse_rational("0.5"), InputError);
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational(""), InputError);
}

TEST(Rationals, ExtendedOrder) {
  const auto lo = ExtendedRational::minus_infinity();
  const auto hi = ExtendedRational::plus_infinity();
  EXPECT_LT(lo, ExtendedRational(-1000));
  EXPECT_LT(ExtendedRational(1000), hi);
  EXPECT_EQ(format_extended(lo), "-inf");
  EXPECT_EQ(parse_extended("+inf"), hi);
  EXPECT_EQ(parse_extended("2/4"), ExtendedRational(Rational(1, 2)));
  EXPECT_THROW(lo.value(), std::logic_error);
}

TEST(AtomOf, FindsTheCellContainingAnOutcome) {
  const auto space = testing::menu_example_space();
  EXPECT_EQ(atom_of(space, 0, 0).members, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(atom_of(space, 1, 2).members, (std::vector<std::size_t>{2}));
  EXPECT_THROW(atom_of(space, 2, 0), InputError);
  EXPECT_THROW(atom_of(space, 0, 9), InputError);
}

TEST(AtomOf, DepthThreeTreeThirdLeafLiesInRightChild) {
  const auto space = make_tree_space(uniform_shape(3, 2));
  const auto atom = atom_of(space, 1, 4);
  EXPECT_EQ(atom.members, (std::vector<std::size_t>{4, 5, 6, 7}));
  EXPECT_EQ(atom.index, 1u);
}

TEST(Measurability, IndicatorOfAtomAndConstants) {
  const auto space = testing::menu_example_space();
  EXPECT_TRUE(is_measurable(space, 0, RandomVariable{1, 1, 0, 0}));
  EXPECT_TRUE(is_measurable(space, 0, RandomVariable(4, Rational(7))));
  EXPECT_FALSE(is_measurable(space, 0, RandomVariable{1, 2, 3, 4}));
  EXPECT_TRUE(is_measurable(space, 1, RandomVariable{1, 2, 3, 4}));
}

TEST(StoppingTimes, ConstantHittingAndAnticipating) {
  const auto space = make_tree_space(uniform_shape(2, 2));
  EXPECT_TRUE(is_stopping_time(space, {1, 1, 1, 1}));
  // First time an up move has happened: after step 1 on the up branch, else at 2.
  EXPECT_TRUE(is_stopping_time(space, {1, 1, 2, 2}));
  // Stopping at 0 only on the first leaf needs terminal information.
  EXPECT_FALSE(is_stopping_time(space, {0, 2, 2, 2}));
  EXPECT_THROW(is_stopping_time(space, {0, 0, 0, 3}), InputError);
}

TEST(SpaceValidation, ReportsEveryViolation) {
  SpaceSpec spec;
  spec.outcomes = {"a", "b", "c", "d"};
  spec.probabilities = {Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(3, 20)};
  spec.times = {"0", "1", "2"};
  spec.partitions = {{{0, 1, 2, 3}}, {{0, 1}, {2, 3}}, {{0, 2}, {1}, {3}}};
  const auto problems = check_space(spec);
  ASSERT_GE(problems.size(), 2u);
  EXPECT_EQ(problems[0], "probabilities sum to 9/10 ≠ 1");
  EXPECT_NE(problems[1].find("does not refine"), std::string::npos);
  EXPECT_NE(problems[1].find("{a,c}"), std::string::npos);
  EXPECT_THROW(FilteredSpace{spec}, InputError);
}

TEST(SpaceValidation, RelaxedTerminalIsStored) {
  SpaceSpec spec;
  spec.outcomes = {"a", "b"};
  spec.probabilities = {Rational(1, 2), Rational(1, 2)};
  spec.times = {"0"};
  spec.partitions = {{{0, 1}}};
  EXPECT_FALSE(check_space(spec).empty());
  spec.relaxed_terminal = true;
  EXPECT_TRUE(check_space(spec).empty());
  EXPECT_TRUE(FilteredSpace(spec).relaxed_terminal());
}

TEST(SpaceValidation, RejectsNonPositiveProbability) {
  SpaceSpec spec;
  spec.outcomes = {"a", "b"};
  spec.probabilities = {Rational(0), Rational(1)};
  spec.times = {"0", "1"};
  spec.partitions = {{{0, 1}}, {{0}, {1}}};
  EXPECT_FALSE(check_space(spec).empty());
}

TEST(Restriction, ConditionalProbabilitiesAndTimes) {
  const auto space = make_tree_space(uniform_shape(2, 2), std::vector<Rational>{
                                                               Rational(1, 8), Rational(1, 8), Rational(1, 4),
                                                               Rational(1, 2)});
  std::vector<std::size_t> map;
  const auto sub = space.restrict_to(1, 1, &map);
  EXPECT_EQ(map, (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(sub.time_count(), 2u);
  EXPECT_EQ(sub.probabilities(), (std::vector<Rational>{Rational(1, 3), Rational(2, 3)}));
}

// Refinement, partition and measurability invariants on random trees.
TEST(SpaceProperties, RandomTreesSatisfyFiltrationInvariants) {
  Gen g(11);
  for (int i = 0; i < 200; ++i) {
    const auto space = testing::random_tree_space(g, 4, 3);
    for (std::size_t t = 0; t < space.time_count(); ++t) {
      const auto& p = space.partition(t);
      std::vector<int> seen(space.outcome_count(), 0);
      for (const auto& cell : p.cells()) {
        for (auto w : cell) ++seen[w];
      }
      for (auto s : seen) ASSERT_EQ(s, 1);
      if (t > 0) {
        ASSERT_TRUE(p.refines(space.partition(t - 1)));
      }

      const auto x = testing::random_measurable(g, space, t);
      for (std::size_t u = t; u < space.time_count(); ++u) ASSERT_TRUE(is_measurable(space, u, x));
    }
    ASSERT_EQ(space.partition(space.last_time()), Partition::singletons(space.outcome_count()));
  }
}

TEST(SpaceProperties, StoppingTimeEventsAreMeasurable) {
  Gen g(12);
  for (int i = 0; i < 200; ++i) {
    const auto space = testing::random_tree_space(g, 3, 3);
    // Stop at each reached atom with probability one half.
    std::vector<std::size_t> tau(space.outcome_count(), space.last_time());
    std::vector<bool> stopped(space.outcome_count(), false);
    for (std::size_t t = 0; t < space.last_time(); ++t) {
      for (const auto& cell : space.partition(t).cells()) {
        if (stopped[cell.front()] || !g.coin()) continue;
        for (auto w : cell) {
          tau[w] = t;
          stopped[w] = true;
        }
      }
    }
    ASSERT_TRUE(is_stopping_time(space, tau));
    for (std::size_t t = 0; t < space.time_count(); ++t) {
      std::vector<std::size_t> members;
      for (std::size_t w = 0; w < tau.size(); ++w) {
        if (tau[w] <= t) members.push_back(w);
      }
      ASSERT_TRUE(is_measurable(space, t, indicator(space.outcome_count(), members)));
    }
  }
}

}  // namespace
}  // namespace hedgelab
