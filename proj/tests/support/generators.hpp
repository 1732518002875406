#pragma once

#include "hedgelab/market.hpp"
#include "hedgelab/topology.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace hedgelab::testing {

/// Small deterministic random source for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  /// num/den with num in [lo*den, hi*den] and den in {1, 2, 3, 4}.
  Rational rational(int lo, int hi);
  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(uniform(0, static_cast<int>(items.size()) - 1))];
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Tree with 1..max_branching children per node, exactly `depth` levels below the root.
TreeShape random_shape(Gen& g, std::size_t depth, std::size_t max_branching);
/// Random positive probabilities with small denominators.
std::vector<Rational> random_probabilities(Gen& g, std::size_t outcomes);
FilteredSpace random_tree_space(Gen& g, std::size_t max_depth, std::size_t max_branching);

/// Relabels times as 0, 1/2^(N-1), ..., 1/2, 1 so that dyadic grids embed.
FilteredSpace with_dyadic_times(const FilteredSpace& space);

/// Every tree of the given depth where each node has one or two children.
std::vector<TreeShape> all_binary_shapes(std::size_t depth);

/// Nonnegative adapted prices. With probability `straddle` a node's children
/// are drawn around the parent value, otherwise independently, so both
/// arbitrage-free and arbitrage models appear. With `straddle` >= 1 every
/// node moves with zero uniform mean, so the model is arbitrage free.
MarketModel random_market(Gen& g, const FilteredSpace& space, std::size_t dim, double straddle = 0.6);

RandomVariable random_variable(Gen& g, std::size_t outcomes, int lo = -3, int hi = 3);
RandomVariable random_measurable(Gen& g, const FilteredSpace& space, std::size_t t, int lo = -3, int hi = 3);
/// Adapted scalar process with values in [lo, hi].
ScalarProcess random_process(Gen& g, const FilteredSpace& space, int lo = -2, int hi = 2);
/// A sub-maxingale: each atom value is at most the largest child value.
ScalarProcess random_sub_maxingale(Gen& g, const FilteredSpace& space);

PortfolioMenu random_menu(Gen& g, const FilteredSpace& space, std::size_t anchor, std::size_t entries);

/// Convergent sequence whose terms are glued menu entries or values below
/// them. The tail rule is drawn among constant, periodic and monotone.
SequenceSpec random_menu_sequence(Gen& g, const FilteredSpace& space, const PortfolioMenu& menu);

/// Sequence with arbitrary tail over small values; `allow_divergent` lets
/// monotone tails run to -inf.
SequenceSpec random_sequence(Gen& g, std::size_t outcomes, bool allow_divergent);

}  // namespace hedgelab::testing
