#pragma once

#include "hedgelab/cond_calc.hpp"
#include "hedgelab/market.hpp"

#include <optional>
#include <vector>

namespace hedgelab {

/// Strictly positive probability under which every one-step price increment
/// has zero conditional mean.
struct EmmWitness {
  std::vector<Rational> q;
  Rational margin = 0;  ///< min over outcomes of q
};

enum class WitnessKind { NaViolation, InstantaneousProfit, ConeDirection };
const char* to_string(WitnessKind kind);

struct ArbitrageWitness {
  WitnessKind kind = WitnessKind::NaViolation;
  SimpleStrategy strategy;
  RandomVariable terminal_value;
  /// Instantaneous profit only: the nonpositive, nonzero F_t-measurable price
  /// esssup_{F_t}(-terminal_value) at the strategy anchor.
  std::optional<RandomVariable> price;
};

/// Recomputes the evidence from the strategy and checks the defining
/// inequality of its kind exactly.
bool verify_witness(const MarketModel& model, const ArbitrageWitness& witness);
/// Positivity, normalization and every conditional one-step mean.
bool verify_emm(const MarketModel& model, const std::vector<Rational>& q);

struct AipVerdict {
  bool holds = true;
  std::size_t atoms_checked = 0;
  std::optional<std::size_t> step;  ///< time index t_k of the failing pair (t_k, t_{k+1})
  std::optional<std::size_t> atom;  ///< atom index at t_k
  std::optional<HullMembership> certificate;
  std::optional<ArbitrageWitness> witness;
};

/// Hull test of S_{t_k} against the values of S_{t_{k+1}} on each atom, for
/// every consecutive pair. The first failure in (step, atom) order is reported.
AipVerdict check_aip(const MarketModel& model);

struct AipStoppingVerdict {
  bool holds = true;
  bool exhaustive = false;
  std::size_t pairs_checked = 0;
  std::uint64_t seed = 0;
  std::optional<std::pair<StoppingTime, StoppingTime>> failing_pair;
  std::optional<std::vector<std::size_t>> failing_cell;  ///< cell of F_{tau_1}
  std::optional<HullMembership> certificate;
};

/// The hull condition S_{tau_1} in conv(supp_{F_{tau_1}} S_{tau_2}) over pairs
/// tau_1 <= tau_2: all pairs when the stopping-time count squared fits the
/// budget, otherwise every deterministic pair plus sampled ones.
AipStoppingVerdict check_aip_stopping(const MarketModel& model, std::size_t budget,
                                      std::uint64_t seed);

struct EmmResult {
  std::optional<EmmWitness> emm;
  std::optional<ArbitrageWitness> arbitrage;
  Rational epsilon = 0;  ///< optimal margin of the search LP (0 when infeasible)
};

/// Maximizes the smallest weight of a martingale measure. A positive optimum
/// yields an EmmWitness; otherwise a normalized arbitrage strategy is found.
EmmResult find_emm(const MarketModel& model);
inline bool check_na(const MarketModel& model) { return find_emm(model).emm.has_value(); }

struct NupbrVerdict {
  bool holds = true;
  Rational optimum = 0;  ///< max of sum_w I_T(w) with I >= 0 and I_T <= 1
  std::optional<ArbitrageWitness> witness;
};

/// Looks for a strategy whose value never drops below zero and ends
/// nonnegative and nonzero. The verdict does not depend on `floor` (> 0).
NupbrVerdict check_nupbr(const MarketModel& model, const Rational& floor);

}  // namespace hedgelab
