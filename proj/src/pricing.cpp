#include "hedgelab/pricing.hpp"

#include "hedgelab/cond_calc.hpp"
#include "hedgelab/lp.hpp"

#include <stdexcept>

namespace hedgelab {

bool PriceProcess::finite_everywhere() const {
  for (const auto& slice : values) {
    for (const auto& v : slice) {
      if (!v.is_finite()) return false;
    }
  }
  return true;
}

SuperhedgeResult superhedge_dp(const MarketModel& model, const RandomVariable& claim) {
  const auto& space = model.space();
  require_keyed(space, claim);
  const std::size_t last = space.last_time();
  const std::size_t d = model.dim();

  SuperhedgeResult out;
  out.price.values.assign(space.time_count(), {});
  out.price.values[last].assign(claim.begin(), claim.end());
  out.hedge.resize(last);

  for (std::size_t k = last; k-- > 0;) {
    auto& slice = out.price.values[k];
    slice.assign(space.outcome_count(), ExtendedRational::minus_infinity());
    const auto& cells = space.partition(k).cells();
    out.hedge[k].assign(cells.size(), std::nullopt);
    for (std::size_t a = 0; a < cells.size(); ++a) {
      const auto& here = model.price(k, cells[a].front());
      LinearProgram lp(1 + d, Sense::Minimize);
      lp.objective[0] = 1;
      lp.bounds.assign(1 + d, VariableBounds::free());
      std::vector<std::size_t> finite_children;
      for (auto c : space.children(k, a)) {
        const auto w = space.partition(k + 1).cell(c).front();
        const auto& next = out.price.values[k + 1][w];
        if (!next.is_finite()) continue;
        finite_children.push_back(w);
        std::vector<Rational> row(1 + d);
        row[0] = 1;
        for (std::size_t j = 0; j < d; ++j) row[1 + j] = model.price(k + 1, w)[j] - here[j];
        lp.add(std::move(row), Relation::GreaterEqual, next.value());
      }
      if (finite_children.empty()) continue;
      const auto result = solve_lp(lp);
      if (result.status != LpStatus::Optimal) continue;

      const Rational& p = result.solution[0];
      Point theta(result.solution.begin() + 1, result.solution.end());
      for (auto w : finite_children) {
        Rational gain = 0;
        for (std::size_t j = 0; j < d; ++j) gain += theta[j] * (model.price(k + 1, w)[j] - here[j]);
        if (p + gain < out.price.values[k + 1][w].value()) {
          throw std::logic_error("superhedge fails at a child node");
        }
      }
      for (auto w : cells[a]) slice[w] = p;
      out.hedge[k][a] = std::move(theta);
    }
  }

  if (out.price.finite_everywhere()) {
    std::vector<std::size_t> times;
    std::vector<RandomVector> positions;
    for (std::size_t k = 0; k <= last; ++k) times.push_back(k);
    for (std::size_t k = 0; k < last; ++k) {
      RandomVector theta(space.outcome_count(), d);
      for (std::size_t w = 0; w < space.outcome_count(); ++w) {
        theta[w] = *out.hedge[k][space.partition(k).cell_of(w)];
      }
      positions.push_back(std::move(theta));
    }
    out.strategy = SimpleStrategy::on_grid(space, times, std::move(positions));
    const auto gains = portfolio_value(model, *out.strategy, last);
    for (std::size_t w = 0; w < space.outcome_count(); ++w) {
      if (out.price.values[0][w].value() + gains[w] < claim[w]) {
        throw std::logic_error("superhedging strategy does not dominate the claim");
      }
    }
  }
  return out;
}

RandomVariable entry_price(const FilteredSpace& space, std::size_t t, const RandomVariable& claim,
                           const RandomVariable& value) {
  require_keyed(space, claim);
  require_keyed(space, value);
  return cond_esssup(space, t, claim - value);
}

MenuPricing menu_price_set(const FilteredSpace& space, const PortfolioMenu& menu,
                           const RandomVariable& claim) {
  MenuPricing out;
  auto& desc = out.description;
  desc.time = menu.anchor;
  const auto& cells = space.partition(menu.anchor).cells();
  for (const auto& v : menu.entries) out.entry_prices.push_back(entry_price(space, menu.anchor, claim, v));

  desc.pi.assign(space.outcome_count(), ExtendedRational::plus_infinity());
  desc.lambda.assign(space.outcome_count(), false);
  if (menu.entries.empty()) return out;
  desc.attaining.assign(cells.size(), 0);
  for (std::size_t a = 0; a < cells.size(); ++a) {
    const auto w0 = cells[a].front();
    for (std::size_t i = 1; i < out.entry_prices.size(); ++i) {
      if (out.entry_prices[i][w0] < out.entry_prices[desc.attaining[a]][w0]) desc.attaining[a] = i;
    }
    for (auto w : cells[a]) {
      desc.pi[w] = out.entry_prices[desc.attaining[a]][w0];
      desc.lambda[w] = true;
    }
  }
  return out;
}

bool menu_price_membership(const FilteredSpace& space, const PriceSetDescription& desc,
                           const RandomVariable& p) {
  require_keyed(space, p);
  if (!space.partition(desc.time).is_measurable(p)) {
    throw InputError("price is not measurable at time " + space.time_label(desc.time));
  }
  for (std::size_t w = 0; w < p.size(); ++w) {
    const ExtendedRational value = p[w];
    if (desc.lambda[w] ? value < desc.pi[w] : value <= desc.pi[w]) return false;
  }
  return true;
}

bool raw_menu_membership(const FilteredSpace& space, const PortfolioMenu& menu,
                         const RandomVariable& claim, const RandomVariable& p) {
  require_keyed(space, p);
  if (!space.partition(menu.anchor).is_measurable(p)) {
    throw InputError("price is not measurable at time " + space.time_label(menu.anchor));
  }
  for (const auto& v : menu.entries) {
    if (pointwise_le(entry_price(space, menu.anchor, claim, v), p)) return true;
  }
  return false;
}

ClosedPriceReport closed_price_invariance(const FilteredSpace& space, const PortfolioMenu& menu,
                                          const RandomVariable& claim,
                                          const std::vector<SequenceSpec>& sequences,
                                          const std::vector<std::optional<RandomVariable>>& chosen) {
  const std::size_t t = menu.anchor;
  ClosedPriceReport out;
  out.pi_before = menu_price_set(space, menu, claim).description.pi;
  out.pi_after = out.pi_before;
  for (std::size_t i = 0; i < sequences.size(); ++i) {
    const auto conv = converges(space, t, sequences[i]);
    if (!conv.convergent) {
      throw InputError("sequence " + std::to_string(i) + " does not converge: inf_n X_n = -inf at outcome " +
                       space.outcome_label(*conv.violating_outcome));
    }
    LimitPrice lp{*conv.limit, true, {}};
    if (i < chosen.size() && chosen[i]) {
      if (!is_limit(space, t, sequences[i], *chosen[i]).accepted) {
        throw InputError("supplied value is not a limit of sequence " + std::to_string(i));
      }
      lp.limit = *chosen[i];
      lp.canonical = false;
    }
    lp.price = entry_price(space, t, claim, lp.limit);
    for (std::size_t w = 0; w < space.outcome_count(); ++w) {
      if (ExtendedRational(lp.price[w]) < out.pi_after[w]) out.pi_after[w] = lp.price[w];
    }
    out.limits.push_back(std::move(lp));
  }
  out.invariant = out.pi_before == out.pi_after;
  return out;
}

}  // namespace hedgelab
