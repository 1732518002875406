#include "hedgelab/market.hpp"

#include <algorithm>

namespace hedgelab {

MarketModel::MarketModel(FilteredSpace space, AdaptedProcess prices)
    : space_(std::move(space)), prices_(std::move(prices)) {
  if (prices_.time_count() != space_.time_count()) {
    throw InputError("price process does not match the time grid");
  }
  for (std::size_t t = 0; t < space_.time_count(); ++t) {
    if (prices_.at(t).size() != space_.outcome_count()) {
      throw InputError("price process does not match the outcomes");
    }
    if (!space_.partition(t).is_measurable(prices_.at(t))) {
      throw InputError("prices are not adapted at time " + space_.time_label(t));
    }
    for (std::size_t w = 0; w < space_.outcome_count(); ++w) {
      for (const auto& v : prices_.value(t, w)) {
        if (v.sign() < 0) {
          throw InputError("negative price at time " + space_.time_label(t) + ", outcome " +
                           space_.outcome_label(w));
        }
      }
    }
  }
}

MarketModel MarketModel::restrict_to(std::size_t t, std::size_t atom) const {
  std::vector<std::size_t> map;
  FilteredSpace sub = space_.restrict_to(t, atom, &map);
  std::vector<RandomVector> slices;
  for (std::size_t u = t; u < space_.time_count(); ++u) {
    std::vector<Point> points;
    for (auto w : map) points.push_back(prices_.value(u, w));
    slices.emplace_back(std::move(points), dim());
  }
  AdaptedProcess prices(sub, std::move(slices));
  return MarketModel(std::move(sub), std::move(prices));
}

SimpleStrategy SimpleStrategy::on_grid(const FilteredSpace& space,
                                       const std::vector<std::size_t>& times,
                                       std::vector<RandomVector> positions) {
  SimpleStrategy s;
  for (auto t : times) s.revisions.push_back(StoppingTime::constant(space, t));
  s.positions = std::move(positions);
  return s;
}

void validate_strategy(const MarketModel& model, const SimpleStrategy& strategy) {
  const auto& space = model.space();
  if (strategy.revisions.empty()) throw InputError("strategy has no revision times");
  if (strategy.positions.size() + 1 != strategy.revisions.size()) {
    throw InputError("strategy needs one position per revision except the last");
  }
  if (!strategy.revisions.front().is_constant()) throw InputError("first revision must be a constant time");
  for (const auto& tau : strategy.revisions) {
    if (!is_stopping_time(space, tau.values())) throw InputError("revision is not a stopping time");
  }
  for (std::size_t i = 1; i < strategy.revisions.size(); ++i) {
    for (std::size_t w = 0; w < space.outcome_count(); ++w) {
      if (strategy.revisions[i][w] < strategy.revisions[i - 1][w]) {
        throw InputError("revision times decrease at outcome " + space.outcome_label(w));
      }
    }
  }
  for (std::size_t i = 0; i < strategy.positions.size(); ++i) {
    const auto& theta = strategy.positions[i];
    if (theta.size() != space.outcome_count() || theta.dim() != model.dim()) {
      throw InputError("position " + std::to_string(i) + " has the wrong shape");
    }
    if (!sigma_at(space, strategy.revisions[i]).is_measurable(theta)) {
      throw InputError("position " + std::to_string(i) + " is not known at its revision time");
    }
  }
}

RandomVariable portfolio_value(const MarketModel& model, const SimpleStrategy& strategy,
                               std::size_t u) {
  validate_strategy(model, strategy);
  if (u >= model.space().time_count()) throw InputError("unknown time index " + std::to_string(u));
  if (u < strategy.anchor()) throw InputError("valuation time precedes the strategy anchor");
  RandomVariable value(model.space().outcome_count());
  for (std::size_t i = 1; i < strategy.revisions.size(); ++i) {
    const auto& from = strategy.revisions[i - 1];
    const auto& to = strategy.revisions[i];
    const auto& theta = strategy.positions[i - 1];
    for (std::size_t w = 0; w < value.size(); ++w) {
      const auto& s1 = model.price(std::min(to[w], u), w);
      const auto& s0 = model.price(std::min(from[w], u), w);
      for (std::size_t j = 0; j < model.dim(); ++j) value[w] += theta[w][j] * (s1[j] - s0[j]);
    }
  }
  return value;
}

bool is_admissible(const MarketModel& model, const SimpleStrategy& strategy, const Rational& floor) {
  if (floor.sign() < 0) throw InputError("admissibility floor must be nonnegative");
  for (std::size_t u = strategy.anchor(); u < model.space().time_count(); ++u) {
    for (const auto& v : portfolio_value(model, strategy, u)) {
      if (v < -floor) return false;
    }
  }
  return true;
}

RandomVariable menu_id_entry(const FilteredSpace& space, const PortfolioMenu& menu,
                             const IdAssignment& assignment) {
  const auto& p = space.partition(menu.anchor);
  if (assignment.size() != p.size()) {
    throw InputError("assignment covers " + std::to_string(assignment.size()) + " atoms, anchor has " +
                     std::to_string(p.size()));
  }
  RandomVariable out(space.outcome_count());
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (assignment[a] >= menu.entries.size()) throw InputError("assignment names an unknown entry");
    const auto& v = menu.entries[assignment[a]];
    require_keyed(space, v);
    for (auto w : p.cell(a)) out[w] = v[w];
  }
  return out;
}

std::vector<IdAssignment> all_id_assignments(const FilteredSpace& space, const PortfolioMenu& menu,
                                             std::size_t limit) {
  const std::size_t atoms = space.partition(menu.anchor).size();
  const std::size_t k = menu.entries.size();
  std::vector<IdAssignment> out;
  if (k == 0) return out;
  IdAssignment current(atoms, 0);
  for (;;) {
    out.push_back(current);
    if (out.size() > limit) throw InputError("id-extension too large to enumerate");
    std::size_t pos = atoms;
    while (pos > 0 && current[pos - 1] + 1 == k) current[--pos] = 0;
    if (pos == 0) break;
    ++current[pos - 1];
  }
  return out;
}

std::vector<RandomVariable> id_extension_entries(const FilteredSpace& space,
                                                 const PortfolioMenu& menu, std::size_t limit) {
  std::vector<RandomVariable> out;
  for (const auto& a : all_id_assignments(space, menu, limit)) {
    auto v = menu_id_entry(space, menu, a);
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace hedgelab
