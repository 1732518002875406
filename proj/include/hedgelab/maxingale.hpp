#pragma once

#include "hedgelab/prob_space.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace hedgelab {

/// Grid-valued stopping time, stored as a time index per outcome.
class StoppingTime {
 public:
  StoppingTime() = default;
  /// Throws InputError unless `tau` is a stopping time of `space`.
  StoppingTime(const FilteredSpace& space, std::vector<std::size_t> tau);
  static StoppingTime constant(const FilteredSpace& space, std::size_t t);

  std::size_t operator[](std::size_t outcome) const { return tau_[outcome]; }
  std::size_t size() const { return tau_.size(); }
  const std::vector<std::size_t>& values() const { return tau_; }
  bool is_constant() const;

  friend bool operator==(const StoppingTime& a, const StoppingTime& b) = default;
  friend StoppingTime min(const StoppingTime& a, const StoppingTime& b);

 private:
  std::vector<std::size_t> tau_;
};

/// Pointwise minimum; again a stopping time.
StoppingTime min(const StoppingTime& a, const StoppingTime& b);

/// F_tau as a partition: the cell of w is its atom at time tau(w).
Partition sigma_at(const FilteredSpace& space, const StoppingTime& tau);
RandomVariable cond_esssup_at(const FilteredSpace& space, const StoppingTime& tau,
                              const RandomVariable& x);

/// M_tau(w) = M_{tau(w)}(w).
RandomVariable stopped_value(const ScalarProcess& m, const StoppingTime& tau);
/// The stopped process t -> M_{tau ^ t}.
ScalarProcess stopped_process(const ScalarProcess& m, const StoppingTime& tau);

struct MaxingaleViolation {
  std::size_t u = 0;     ///< conditioning time
  std::size_t t = 0;     ///< later time
  std::size_t atom = 0;  ///< atom index at u
  std::size_t outcome = 0;
};

/// First pair u <= t (u-major, then t, then atom order) where
/// esssup_{F_u} M_t >= M_u fails; nullopt for a sub-maxingale.
std::optional<MaxingaleViolation> sub_maxingale_violation(const FilteredSpace& space,
                                                          const ScalarProcess& m);
/// Same for esssup_{F_u} M_t <= M_u.
std::optional<MaxingaleViolation> super_maxingale_violation(const FilteredSpace& space,
                                                            const ScalarProcess& m);
inline bool is_sub_maxingale(const FilteredSpace& space, const ScalarProcess& m) {
  return !sub_maxingale_violation(space, m);
}
inline bool is_super_maxingale(const FilteredSpace& space, const ScalarProcess& m) {
  return !super_maxingale_violation(space, m);
}

/// Number of stopping times of the space, saturating at UINT64_MAX.
std::uint64_t count_stopping_times(const FilteredSpace& space);
/// Every stopping time, in the canonical order of the backward stop/continue
/// recursion (stop before continue, children in atom order). Throws
/// InputError when there are more than `limit`.
std::vector<StoppingTime> enumerate_stopping_times(const FilteredSpace& space, std::size_t limit);

/// Draws stopping times by stopping at each reached atom with probability 1/2.
class StoppingTimeSampler {
 public:
  StoppingTimeSampler(const FilteredSpace& space, std::uint64_t seed);
  StoppingTime next();

 private:
  const FilteredSpace* space_;
  std::mt19937_64 rng_;
};

/// Pairs (S, tau) examined by stopping-time based checks.
struct PairPlan {
  std::vector<std::pair<StoppingTime, StoppingTime>> pairs;
  bool exhaustive = false;
  std::uint64_t stopping_times = 0;  ///< total count (saturating)
  std::uint64_t seed = 0;
};

/// All ordered pairs when count^2 <= budget; otherwise every pair of constant
/// times followed by sampled pairs up to `budget`.
PairPlan plan_pairs(const FilteredSpace& space, std::size_t budget, std::uint64_t seed);

struct StrongSubMaxingaleVerdict {
  bool strong = false;
  bool exhaustive = false;
  std::size_t pairs_checked = 0;
  std::uint64_t stopping_times = 0;
  std::uint64_t seed = 0;
  /// First pair (S, tau) and outcome where esssup_{F_S} M_tau >= M_{S ^ tau} fails.
  std::optional<std::pair<StoppingTime, StoppingTime>> violating_pair;
  std::optional<std::size_t> violating_outcome;
  /// Exhaustive mode only: every stopped process M^tau is a sub-maxingale.
  std::optional<bool> definition_verdict;
};

StrongSubMaxingaleVerdict is_strong_sub_maxingale(const FilteredSpace& space,
                                                  const ScalarProcess& m, std::size_t budget,
                                                  std::uint64_t seed);

/// One level of the dyadic approximation from above of a stopping time.
struct DyadicLevel {
  unsigned level = 0;
  /// Grid T*i/2^n, i = 0..2^n; the partition at s is that of the latest model
  /// time <= s.
  FilteredSpace space;
  StoppingTime tau;             ///< tau^n on `space`
  std::vector<Rational> value;  ///< tau^n as a time, per outcome
};

/// Requires numeric, increasing time labels starting at 0. tau^n(w) =
/// T(i+1)/2^n for Ti/2^n < tau(w) <= T(i+1)/2^n, and T/2^n when tau(w) = 0.
DyadicLevel dyadic_refine(const FilteredSpace& space, const StoppingTime& tau, unsigned n);
/// Smallest n at which every model time lies on the dyadic grid of level n.
std::optional<unsigned> dyadic_embedding_level(const FilteredSpace& space, unsigned max_level = 20);

struct LemmaCheck {
  std::string name;
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::string first_violation;
};

struct LemmaSuiteReport {
  bool sub_maxingale = false;
  bool exhaustive = false;
  std::uint64_t stopping_times = 0;
  std::vector<LemmaCheck> checks;

  std::size_t violations() const;
};

/// Executable forms of the stopping-time lemmas behind the strong
/// sub-maxingale characterization, for the process `m` (the inequalities are
/// only asserted when m is a sub-maxingale) and the test variables `xs`.
/// The dyadic check runs when time labels are numeric and start at 0.
LemmaSuiteReport run_lemma_suite(const FilteredSpace& space, const ScalarProcess& m,
                                 const std::vector<RandomVariable>& xs, std::size_t budget,
                                 std::uint64_t seed);

}  // namespace hedgelab
