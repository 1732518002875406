#pragma once

#include "hedgelab/market.hpp"
#include "hedgelab/topology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hedgelab {

/// Per time, an F_t-measurable value in Q extended with -inf and +inf.
struct PriceProcess {
  std::vector<std::vector<ExtendedRational>> values;  ///< [time][outcome]

  const ExtendedRational& at(std::size_t t, std::size_t outcome) const { return values.at(t).at(outcome); }
  bool finite_everywhere() const;
};

struct SuperhedgeResult {
  PriceProcess price;
  /// [time k < N][atom at k]: minimizing position, absent where the price is -inf.
  std::vector<std::vector<std::optional<Point>>> hedge;
  /// Grid strategy assembled from the hedges, present when every price is finite.
  std::optional<SimpleStrategy> strategy;
};

/// Backward recursion: at each atom, min p s.t. p + theta.(S_{k+1}(c) - S_k) >= pi_{k+1}(c)
/// for every child c with finite price. An unbounded program gives -inf.
/// Every finite node is post-checked for the local superhedge inequality.
SuperhedgeResult superhedge_dp(const MarketModel& model, const RandomVariable& claim);

/// Infimum of the id-extension price set and where it is attained.
struct PriceSetDescription {
  std::size_t time = 0;
  std::vector<ExtendedRational> pi;  ///< per outcome; +inf for an empty menu
  std::vector<bool> lambda;          ///< per outcome: inside the closed part [pi, inf)
  IdAssignment attaining;            ///< entry reaching the minimum on each atom
};

struct MenuPricing {
  std::vector<RandomVariable> entry_prices;  ///< esssup_{F_t}(h - V) per entry
  PriceSetDescription description;
};

/// Prices of every menu entry at its anchor time and the id-extension infimum.
MenuPricing menu_price_set(const FilteredSpace& space, const PortfolioMenu& menu,
                           const RandomVariable& claim);
RandomVariable entry_price(const FilteredSpace& space, std::size_t t, const RandomVariable& claim,
                           const RandomVariable& value);

/// p >= pi on lambda and p > pi elsewhere. Throws InputError when p is not
/// measurable at the description time.
bool menu_price_membership(const FilteredSpace& space, const PriceSetDescription& desc,
                           const RandomVariable& p);
/// p dominates the price of a single raw menu entry (no gluing).
bool raw_menu_membership(const FilteredSpace& space, const PortfolioMenu& menu,
                         const RandomVariable& claim, const RandomVariable& p);

struct LimitPrice {
  RandomVariable limit;
  bool canonical = true;  ///< limit is inf_n X_n rather than a supplied one
  RandomVariable price;
};

struct ClosedPriceReport {
  std::vector<LimitPrice> limits;
  std::vector<ExtendedRational> pi_before;
  std::vector<ExtendedRational> pi_after;
  bool invariant = false;
};

/// Adjoins limits of the given sequences to the menu and reprices. A supplied
/// limit (same position as its sequence) must pass is_limit; otherwise the
/// canonical limit inf_n X_n is used. Throws InputError on a non-convergent
/// sequence or a rejected limit.
ClosedPriceReport closed_price_invariance(const FilteredSpace& space, const PortfolioMenu& menu,
                                          const RandomVariable& claim,
                                          const std::vector<SequenceSpec>& sequences,
                                          const std::vector<std::optional<RandomVariable>>& chosen = {});

}  // namespace hedgelab
