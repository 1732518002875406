#pragma once

#include "hedgelab/maxingale.hpp"
#include "hedgelab/prob_space.hpp"

#include <string>
#include <vector>

namespace hedgelab {

/// Risky assets S (d coordinates, nonnegative) on a filtered space. The bond
/// is the numeraire and is implicitly 1.
class MarketModel {
 public:
  /// Throws InputError on shape mismatch, non-adapted or negative prices.
  MarketModel(FilteredSpace space, AdaptedProcess prices);

  const FilteredSpace& space() const { return space_; }
  const AdaptedProcess& prices() const { return prices_; }
  std::size_t dim() const { return prices_.dim(); }
  const Point& price(std::size_t t, std::size_t outcome) const { return prices_.value(t, outcome); }

  /// The model seen from one atom at time t onward.
  MarketModel restrict_to(std::size_t t, std::size_t atom) const;

 private:
  FilteredSpace space_;
  AdaptedProcess prices_;
};

/// Positions revised at stopping times tau_0 <= tau_1 <= ... <= tau_n;
/// positions[i] is held on (tau_i, tau_{i+1}] and is F_{tau_i}-measurable.
/// tau_0 must be a constant time, the anchor.
struct SimpleStrategy {
  std::vector<StoppingTime> revisions;
  std::vector<RandomVector> positions;

  /// Revisions at the grid times `times` (strictly increasing indices).
  static SimpleStrategy on_grid(const FilteredSpace& space, const std::vector<std::size_t>& times,
                                std::vector<RandomVector> positions);
  std::size_t anchor() const { return revisions.front()[0]; }
};

/// Throws InputError when the strategy is malformed for the model.
void validate_strategy(const MarketModel& model, const SimpleStrategy& strategy);

/// I_u(theta) = sum_i theta_{tau_{i-1}} . (S_{tau_i ^ u} - S_{tau_{i-1} ^ u}).
RandomVariable portfolio_value(const MarketModel& model, const SimpleStrategy& strategy,
                               std::size_t u);
/// I_u(theta) >= -floor at every grid time u >= anchor.
bool is_admissible(const MarketModel& model, const SimpleStrategy& strategy, const Rational& floor);

/// Finite set of terminal values from zero capital at the anchor time.
struct PortfolioMenu {
  std::size_t anchor = 0;
  std::vector<std::string> names;
  std::vector<RandomVariable> entries;
};

/// One menu entry index per atom of the anchor partition.
using IdAssignment = std::vector<std::size_t>;

/// sum over anchor atoms a of V^{assignment[a]} 1_a.
RandomVariable menu_id_entry(const FilteredSpace& space, const PortfolioMenu& menu,
                             const IdAssignment& assignment);
/// Every assignment, lexicographic with the first atom most significant.
std::vector<IdAssignment> all_id_assignments(const FilteredSpace& space, const PortfolioMenu& menu,
                                             std::size_t limit = 1u << 16);
/// Distinct glued entries of the id-extension, in assignment order.
std::vector<RandomVariable> id_extension_entries(const FilteredSpace& space,
                                                 const PortfolioMenu& menu,
                                                 std::size_t limit = 1u << 16);

}  // namespace hedgelab
