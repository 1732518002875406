#include "hedgelab/arbitrage.hpp"

#include <algorithm>
#include <stdexcept>

namespace hedgelab {

const char* to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::NaViolation: return "na-violation";
    case WitnessKind::InstantaneousProfit: return "instantaneous-profit";
    case WitnessKind::ConeDirection: return "cone-direction";
  }
  return "?";
}

namespace {

bool nonnegative_nonzero(const RandomVariable& v) {
  bool positive = false;
  for (const auto& x : v) {
    if (x.sign() < 0) return false;
    if (x.sign() > 0) positive = true;
  }
  return positive;
}

// Decision variables theta_{k, atom, j} of a grid strategy trading at every step.
class GridLayout {
 public:
  explicit GridLayout(const MarketModel& model) : model_(model) {
    const auto& space = model.space();
    for (std::size_t k = 0; k < space.last_time(); ++k) {
      base_.push_back(count_);
      count_ += space.partition(k).size() * model.dim();
    }
  }

  std::size_t variables() const { return count_; }
  std::size_t index(std::size_t k, std::size_t atom, std::size_t j) const {
    return base_[k] + atom * model_.dim() + j;
  }

  /// Coefficients of I_u(w) in the decision variables.
  std::vector<Rational> value_row(std::size_t u, std::size_t w) const {
    std::vector<Rational> row(count_);
    const auto& space = model_.space();
    for (std::size_t k = 0; k < u; ++k) {
      const auto atom = space.partition(k).cell_of(w);
      const auto& s0 = model_.price(k, w);
      const auto& s1 = model_.price(k + 1, w);
      for (std::size_t j = 0; j < model_.dim(); ++j) row[index(k, atom, j)] = s1[j] - s0[j];
    }
    return row;
  }

  SimpleStrategy strategy(const std::vector<Rational>& x, const Rational& scale) const {
    const auto& space = model_.space();
    std::vector<std::size_t> times;
    std::vector<RandomVector> positions;
    for (std::size_t k = 0; k <= space.last_time(); ++k) times.push_back(k);
    for (std::size_t k = 0; k < space.last_time(); ++k) {
      RandomVector theta(space.outcome_count(), model_.dim());
      for (std::size_t w = 0; w < space.outcome_count(); ++w) {
        const auto atom = space.partition(k).cell_of(w);
        for (std::size_t j = 0; j < model_.dim(); ++j) theta[w][j] = scale * x[index(k, atom, j)];
      }
      positions.push_back(std::move(theta));
    }
    return SimpleStrategy::on_grid(space, times, std::move(positions));
  }

 private:
  const MarketModel& model_;
  std::vector<std::size_t> base_;
  std::size_t count_ = 0;
};

// Scale so that the smallest positive terminal value becomes 1.
Rational normalizing_scale(const RandomVariable& v) {
  std::optional<Rational> smallest;
  for (const auto& x : v) {
    if (x.sign() > 0 && (!smallest || x < *smallest)) smallest = x;
  }
  return smallest ? 1 / *smallest : Rational(1);
}

ArbitrageWitness grid_witness(const MarketModel& model, const GridLayout& layout,
                              const std::vector<Rational>& x, WitnessKind kind) {
  const auto& space = model.space();
  const auto raw = portfolio_value(model, layout.strategy(x, 1), space.last_time());
  ArbitrageWitness w;
  w.kind = kind;
  w.strategy = layout.strategy(x, normalizing_scale(raw));
  w.terminal_value = portfolio_value(model, w.strategy, space.last_time());
  if (!verify_witness(model, w)) throw std::logic_error("arbitrage witness does not verify");
  return w;
}

StoppingTime pathwise_max(const FilteredSpace& space, const StoppingTime& a, const StoppingTime& b) {
  std::vector<std::size_t> v(a.size());
  for (std::size_t w = 0; w < v.size(); ++w) v[w] = std::max(a[w], b[w]);
  return StoppingTime(space, std::move(v));
}

}  // namespace

bool verify_witness(const MarketModel& model, const ArbitrageWitness& witness) {
  const auto& space = model.space();
  const auto terminal = portfolio_value(model, witness.strategy, space.last_time());
  if (terminal != witness.terminal_value) return false;
  switch (witness.kind) {
    case WitnessKind::NaViolation:
      return nonnegative_nonzero(terminal);
    case WitnessKind::InstantaneousProfit: {
      if (!witness.price) return false;
      const auto price = cond_esssup(space, witness.strategy.anchor(), -terminal);
      if (price != *witness.price) return false;
      bool negative = false;
      for (const auto& p : price) {
        if (p.sign() > 0) return false;
        if (p.sign() < 0) negative = true;
      }
      return negative;
    }
    case WitnessKind::ConeDirection:
      for (std::size_t u = witness.strategy.anchor(); u <= space.last_time(); ++u) {
        for (const auto& v : portfolio_value(model, witness.strategy, u)) {
          if (v.sign() < 0) return false;
        }
      }
      return nonnegative_nonzero(terminal);
  }
  return false;
}

bool verify_emm(const MarketModel& model, const std::vector<Rational>& q) {
  const auto& space = model.space();
  if (q.size() != space.outcome_count()) return false;
  Rational total = 0;
  for (const auto& v : q) {
    if (v.sign() <= 0) return false;
    total += v;
  }
  if (total != 1) return false;
  for (std::size_t k = 0; k < space.last_time(); ++k) {
    for (const auto& cell : space.partition(k).cells()) {
      for (std::size_t j = 0; j < model.dim(); ++j) {
        Rational mean = 0;
        for (auto w : cell) mean += q[w] * (model.price(k + 1, w)[j] - model.price(k, w)[j]);
        if (!mean.is_zero()) return false;
      }
    }
  }
  return true;
}

AipVerdict check_aip(const MarketModel& model) {
  const auto& space = model.space();
  AipVerdict out;
  for (std::size_t k = 0; k < space.last_time(); ++k) {
    const auto support = cond_support(space, k, model.prices().at(k + 1));
    const auto& cells = space.partition(k).cells();
    for (std::size_t a = 0; a < cells.size(); ++a) {
      ++out.atoms_checked;
      const auto& point = model.price(k, cells[a].front());
      auto hull = in_convex_hull(point, support[a]);
      if (hull.member) continue;

      RandomVector theta(space.outcome_count(), model.dim());
      for (auto w : cells[a]) theta[w] = hull.normal;
      ArbitrageWitness witness;
      witness.kind = WitnessKind::InstantaneousProfit;
      witness.strategy = SimpleStrategy::on_grid(space, {k, k + 1}, {theta});
      witness.terminal_value = portfolio_value(model, witness.strategy, space.last_time());
      witness.price = cond_esssup(space, k, -witness.terminal_value);
      if (!verify_witness(model, witness)) throw std::logic_error("instantaneous profit does not verify");

      out.holds = false;
      out.step = k;
      out.atom = a;
      out.certificate = std::move(hull);
      out.witness = std::move(witness);
      return out;
    }
  }
  return out;
}

AipStoppingVerdict check_aip_stopping(const MarketModel& model, std::size_t budget,
                                      std::uint64_t seed) {
  const auto& space = model.space();
  const auto plan = plan_pairs(space, budget, seed);
  AipStoppingVerdict out;
  out.exhaustive = plan.exhaustive;
  out.seed = seed;
  for (const auto& [first, other] : plan.pairs) {
    bool ordered = true;
    for (std::size_t w = 0; w < first.size(); ++w) ordered = ordered && first[w] <= other[w];
    if (plan.exhaustive && !ordered) continue;
    const StoppingTime second = ordered ? other : pathwise_max(space, first, other);
    ++out.pairs_checked;
    const auto sigma = sigma_at(space, first);
    for (const auto& cell : sigma.cells()) {
      std::vector<Point> cloud;
      for (auto w : cell) {
        const auto& p = model.price(second[w], w);
        if (std::find(cloud.begin(), cloud.end(), p) == cloud.end()) cloud.push_back(p);
      }
      auto hull = in_convex_hull(model.price(first[cell.front()], cell.front()), cloud);
      if (hull.member) continue;
      out.holds = false;
      out.failing_pair = {first, second};
      out.failing_cell = cell;
      out.certificate = std::move(hull);
      return out;
    }
  }
  return out;
}

EmmResult find_emm(const MarketModel& model) {
  const auto& space = model.space();
  const std::size_t n = space.outcome_count();
  EmmResult out;

  LinearProgram lp(n + 1, Sense::Maximize);
  lp.objective[n] = 1;
  for (std::size_t w = 0; w < n; ++w) {
    std::vector<Rational> row(n + 1);
    row[w] = 1;
    row[n] = -1;
    lp.add(std::move(row), Relation::GreaterEqual, 0);
  }
  {
    std::vector<Rational> row(n + 1, 1);
    row[n] = 0;
    lp.add(std::move(row), Relation::Equal, 1);
  }
  for (std::size_t k = 0; k < space.last_time(); ++k) {
    for (const auto& cell : space.partition(k).cells()) {
      for (std::size_t j = 0; j < model.dim(); ++j) {
        std::vector<Rational> row(n + 1);
        bool moves = false;
        for (auto w : cell) {
          row[w] = model.price(k + 1, w)[j] - model.price(k, w)[j];
          moves = moves || !row[w].is_zero();
        }
        if (moves) lp.add(std::move(row), Relation::Equal, 0);
      }
    }
  }
  const auto result = solve_lp(lp);
  if (result.status == LpStatus::Optimal) out.epsilon = result.objective_value;
  if (out.epsilon.sign() > 0) {
    EmmWitness emm;
    emm.q.assign(result.solution.begin(), result.solution.begin() + static_cast<std::ptrdiff_t>(n));
    emm.margin = *std::min_element(emm.q.begin(), emm.q.end());
    if (!verify_emm(model, emm.q)) throw std::logic_error("martingale measure does not verify");
    out.emm = std::move(emm);
    return out;
  }

  GridLayout layout(model);
  LinearProgram arb(layout.variables(), Sense::Maximize);
  arb.bounds.assign(layout.variables(), VariableBounds::free());
  for (std::size_t w = 0; w < n; ++w) {
    const auto row = layout.value_row(space.last_time(), w);
    for (std::size_t i = 0; i < row.size(); ++i) arb.objective[i] += row[i];
    arb.add(row, Relation::GreaterEqual, 0);
    arb.add(row, Relation::LessEqual, 1);
  }
  const auto found = solve_lp(arb);
  if (found.status != LpStatus::Optimal || found.objective_value.sign() <= 0) {
    throw std::logic_error("no martingale measure and no arbitrage: contradiction");
  }
  out.arbitrage = grid_witness(model, layout, found.solution, WitnessKind::NaViolation);
  return out;
}

NupbrVerdict check_nupbr(const MarketModel& model, const Rational& floor) {
  if (floor.sign() <= 0) throw InputError("NUPBR floor must be positive");
  const auto& space = model.space();
  GridLayout layout(model);
  LinearProgram lp(layout.variables(), Sense::Maximize);
  lp.bounds.assign(layout.variables(), VariableBounds::free());
  for (std::size_t w = 0; w < space.outcome_count(); ++w) {
    for (std::size_t u = 1; u <= space.last_time(); ++u) {
      lp.add(layout.value_row(u, w), Relation::GreaterEqual, 0);
    }
    const auto terminal = layout.value_row(space.last_time(), w);
    for (std::size_t i = 0; i < terminal.size(); ++i) lp.objective[i] += terminal[i];
    lp.add(terminal, Relation::LessEqual, 1);
  }
  const auto result = solve_lp(lp);
  if (result.status != LpStatus::Optimal) throw std::logic_error("NUPBR program is not bounded");
  NupbrVerdict out;
  out.optimum = result.objective_value;
  if (out.optimum.sign() > 0) {
    out.holds = false;
    out.witness = grid_witness(model, layout, result.solution, WitnessKind::ConeDirection);
    if (!is_admissible(model, out.witness->strategy, floor)) {
      throw std::logic_error("cone direction is not admissible");
    }
  }
  return out;
}

}  // namespace hedgelab
