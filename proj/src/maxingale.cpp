#include "hedgelab/maxingale.hpp"

#include "hedgelab/cond_calc.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace hedgelab {

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

}  // namespace

StoppingTime::StoppingTime(const FilteredSpace& space, std::vector<std::size_t> tau)
    : tau_(std::move(tau)) {
  if (!is_stopping_time(space, tau_)) throw InputError("not a stopping time");
}

StoppingTime StoppingTime::constant(const FilteredSpace& space, std::size_t t) {
  return StoppingTime(space, std::vector<std::size_t>(space.outcome_count(), t));
}

bool StoppingTime::is_constant() const {
  return std::adjacent_find(tau_.begin(), tau_.end(), std::not_equal_to<>()) == tau_.end();
}

StoppingTime min(const StoppingTime& a, const StoppingTime& b) {
  StoppingTime out = a;
  for (std::size_t w = 0; w < out.tau_.size(); ++w) out.tau_[w] = std::min(a[w], b[w]);
  return out;
}

Partition sigma_at(const FilteredSpace& space, const StoppingTime& tau) {
  if (tau.size() != space.outcome_count()) throw InputError("stopping time not keyed to space");
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> groups;
  for (std::size_t w = 0; w < tau.size(); ++w) {
    groups[{tau[w], space.partition(tau[w]).cell_of(w)}].push_back(w);
  }
  std::vector<std::vector<std::size_t>> cells;
  for (auto& [key, members] : groups) cells.push_back(std::move(members));
  return Partition(std::move(cells), space.outcome_count());
}

RandomVariable cond_esssup_at(const FilteredSpace& space, const StoppingTime& tau,
                              const RandomVariable& x) {
  require_keyed(space, x);
  return esssup_on(sigma_at(space, tau), x);
}

RandomVariable stopped_value(const ScalarProcess& m, const StoppingTime& tau) {
  RandomVariable out(tau.size());
  for (std::size_t w = 0; w < tau.size(); ++w) out[w] = m.at(tau[w])[w];
  return out;
}

ScalarProcess stopped_process(const ScalarProcess& m, const StoppingTime& tau) {
  ScalarProcess out(m.size(), RandomVariable(tau.size()));
  for (std::size_t t = 0; t < m.size(); ++t) {
    for (std::size_t w = 0; w < tau.size(); ++w) out[t][w] = m[std::min(t, tau[w])][w];
  }
  return out;
}

namespace {

std::optional<MaxingaleViolation> maxingale_violation(const FilteredSpace& space,
                                                      const ScalarProcess& m, bool sub) {
  require_adapted(space, m);
  for (std::size_t u = 0; u < m.size(); ++u) {
    for (std::size_t t = u; t < m.size(); ++t) {
      const auto sup = cond_esssup(space, u, m[t]);
      const auto& cells = space.partition(u).cells();
      for (std::size_t a = 0; a < cells.size(); ++a) {
        const auto w = cells[a].front();
        if (sub ? sup[w] < m[u][w] : sup[w] > m[u][w]) return MaxingaleViolation{u, t, a, w};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<MaxingaleViolation> sub_maxingale_violation(const FilteredSpace& space,
                                                          const ScalarProcess& m) {
  return maxingale_violation(space, m, true);
}

std::optional<MaxingaleViolation> super_maxingale_violation(const FilteredSpace& space,
                                                            const ScalarProcess& m) {
  return maxingale_violation(space, m, false);
}

// ---------------------------------------------------------------- enumeration

namespace {

std::uint64_t count_from(const FilteredSpace& space, std::size_t t, std::size_t atom) {
  std::uint64_t continuing = 0;
  if (t < space.last_time()) {
    continuing = 1;
    for (auto c : space.children(t, atom)) {
      continuing = saturating_mul(continuing, count_from(space, t + 1, c));
    }
  }
  return saturating_add(1, continuing);
}

using Partial = std::vector<std::size_t>;

void product_into(std::vector<Partial>& acc, const std::vector<Partial>& options,
                  std::size_t limit) {
  std::vector<Partial> next;
  for (const auto& base : acc) {
    for (const auto& opt : options) {
      Partial merged = base;
      for (std::size_t w = 0; w < opt.size(); ++w) {
        if (opt[w] != kUnset) merged[w] = opt[w];
      }
      next.push_back(std::move(merged));
      if (next.size() > limit) throw InputError("too many stopping times to enumerate");
    }
  }
  acc = std::move(next);
}

std::vector<Partial> options_from(const FilteredSpace& space, std::size_t t, std::size_t atom,
                                  std::size_t limit) {
  std::vector<Partial> out;
  Partial stop(space.outcome_count(), kUnset);
  for (auto w : space.partition(t).cell(atom)) stop[w] = t;
  out.push_back(std::move(stop));
  if (t < space.last_time()) {
    std::vector<Partial> acc{Partial(space.outcome_count(), kUnset)};
    for (auto c : space.children(t, atom)) product_into(acc, options_from(space, t + 1, c, limit), limit);
    for (auto& p : acc) out.push_back(std::move(p));
  }
  if (out.size() > limit) throw InputError("too many stopping times to enumerate");
  return out;
}

void sample_from(const FilteredSpace& space, std::size_t t, std::size_t atom,
                 std::mt19937_64& rng, std::vector<std::size_t>& tau) {
  if (t == space.last_time() || (rng() & 1U)) {
    for (auto w : space.partition(t).cell(atom)) tau[w] = t;
    return;
  }
  for (auto c : space.children(t, atom)) sample_from(space, t + 1, c, rng, tau);
}

}  // namespace

std::uint64_t count_stopping_times(const FilteredSpace& space) {
  std::uint64_t total = 1;
  for (std::size_t a = 0; a < space.partition(0).size(); ++a) {
    total = saturating_mul(total, count_from(space, 0, a));
  }
  return total;
}

std::vector<StoppingTime> enumerate_stopping_times(const FilteredSpace& space, std::size_t limit) {
  if (count_stopping_times(space) > limit) throw InputError("too many stopping times to enumerate");
  std::vector<Partial> acc{Partial(space.outcome_count(), kUnset)};
  for (std::size_t a = 0; a < space.partition(0).size(); ++a) {
    product_into(acc, options_from(space, 0, a, limit), limit);
  }
  std::vector<StoppingTime> out;
  for (auto& p : acc) out.emplace_back(space, std::move(p));
  return out;
}

StoppingTimeSampler::StoppingTimeSampler(const FilteredSpace& space, std::uint64_t seed)
    : space_(&space), rng_(seed) {}

StoppingTime StoppingTimeSampler::next() {
  std::vector<std::size_t> tau(space_->outcome_count(), kUnset);
  for (std::size_t a = 0; a < space_->partition(0).size(); ++a) sample_from(*space_, 0, a, rng_, tau);
  return StoppingTime(*space_, std::move(tau));
}

PairPlan plan_pairs(const FilteredSpace& space, std::size_t budget, std::uint64_t seed) {
  PairPlan plan;
  plan.seed = seed;
  plan.stopping_times = count_stopping_times(space);
  if (saturating_mul(plan.stopping_times, plan.stopping_times) <= budget) {
    plan.exhaustive = true;
    const auto all = enumerate_stopping_times(space, budget);
    for (const auto& s : all) {
      for (const auto& tau : all) plan.pairs.emplace_back(s, tau);
    }
    return plan;
  }
  for (std::size_t u = 0; u < space.time_count(); ++u) {
    for (std::size_t t = 0; t < space.time_count(); ++t) {
      plan.pairs.emplace_back(StoppingTime::constant(space, u), StoppingTime::constant(space, t));
    }
  }
  StoppingTimeSampler sampler(space, seed);
  while (plan.pairs.size() < budget) {
    auto s = sampler.next();
    auto tau = sampler.next();
    plan.pairs.emplace_back(std::move(s), std::move(tau));
  }
  return plan;
}

StrongSubMaxingaleVerdict is_strong_sub_maxingale(const FilteredSpace& space,
                                                  const ScalarProcess& m, std::size_t budget,
                                                  std::uint64_t seed) {
  require_adapted(space, m);
  const auto plan = plan_pairs(space, budget, seed);
  StrongSubMaxingaleVerdict out;
  out.exhaustive = plan.exhaustive;
  out.stopping_times = plan.stopping_times;
  out.seed = seed;
  out.strong = true;
  for (const auto& [s, tau] : plan.pairs) {
    ++out.pairs_checked;
    const auto lhs = cond_esssup_at(space, s, stopped_value(m, tau));
    const auto rhs = stopped_value(m, min(s, tau));
    for (std::size_t w = 0; w < lhs.size(); ++w) {
      if (lhs[w] < rhs[w]) {
        out.strong = false;
        out.violating_pair = {s, tau};
        out.violating_outcome = w;
        break;
      }
    }
    if (!out.strong) break;
  }
  if (plan.exhaustive) {
    bool all_stopped_sub = true;
    for (const auto& tau : enumerate_stopping_times(space, budget)) {
      if (!is_sub_maxingale(space, stopped_process(m, tau))) {
        all_stopped_sub = false;
        break;
      }
    }
    out.definition_verdict = all_stopped_sub;
  }
  return out;
}

// ---------------------------------------------------------------- dyadic

namespace {

const std::vector<Rational>& dyadic_times(const FilteredSpace& space) {
  const auto& nt = space.numeric_times();
  if (!nt || nt->front() != 0 || nt->size() < 2) {
    throw InputError("dyadic refinement needs numeric increasing time labels starting at 0");
  }
  return *nt;
}

// Smallest integer >= q for q >= 0.
boost::multiprecision::mpz_int ceil_nonnegative(const Rational& q) {
  const auto num = numerator(q);
  const auto den = denominator(q);
  return (num + den - 1) / den;
}

}  // namespace

std::optional<unsigned> dyadic_embedding_level(const FilteredSpace& space, unsigned max_level) {
  const auto& nt = dyadic_times(space);
  const Rational& horizon = nt.back();
  Rational scale = 1;
  for (unsigned n = 0; n <= max_level; ++n, scale *= 2) {
    const bool fits = std::all_of(nt.begin(), nt.end(), [&](const Rational& s) {
      return denominator(Rational(s * scale / horizon)) == 1;
    });
    if (fits) return n;
  }
  return std::nullopt;
}

DyadicLevel dyadic_refine(const FilteredSpace& space, const StoppingTime& tau, unsigned n) {
  if (n > 12) throw InputError("dyadic level above 12 is not supported");
  const auto& nt = dyadic_times(space);
  const Rational horizon = nt.back();
  const std::size_t cells = std::size_t{1} << n;
  const Rational scale = static_cast<unsigned long>(cells);

  SpaceSpec base = space.spec();
  SpaceSpec spec;
  spec.outcomes = base.outcomes;
  spec.probabilities = base.probabilities;
  spec.relaxed_terminal = base.relaxed_terminal;
  for (std::size_t i = 0; i <= cells; ++i) {
    const Rational s = horizon * static_cast<unsigned long>(i) / scale;
    std::size_t k = 0;
    while (k + 1 < nt.size() && nt[k + 1] <= s) ++k;
    spec.times.push_back(pretty_rational(s));
    spec.partitions.push_back(base.partitions[k]);
  }
  FilteredSpace refined(std::move(spec));

  std::vector<std::size_t> index(tau.size());
  std::vector<Rational> value(tau.size());
  for (std::size_t w = 0; w < tau.size(); ++w) {
    const Rational& t = nt.at(tau[w]);
    std::size_t i = 1;
    if (t.sign() > 0) i = ceil_nonnegative(t * scale / horizon).convert_to<std::size_t>();
    index[w] = i;
    value[w] = horizon * static_cast<unsigned long>(i) / scale;
  }
  StoppingTime refined_tau(refined, std::move(index));
  return DyadicLevel{n, std::move(refined), std::move(refined_tau), std::move(value)};
}

// ---------------------------------------------------------------- lemma suite

std::size_t LemmaSuiteReport::violations() const {
  std::size_t total = 0;
  for (const auto& c : checks) total += c.violations;
  return total;
}

namespace {

std::string describe_tau(const FilteredSpace& space, const StoppingTime& tau) {
  std::ostringstream out;
  out << "(";
  for (std::size_t w = 0; w < tau.size(); ++w) out << (w ? "," : "") << space.time_label(tau[w]);
  out << ")";
  return out.str();
}

LemmaCheck named(std::string name) {
  LemmaCheck check;
  check.name = std::move(name);
  return check;
}

void record(LemmaCheck& check, bool ok, const std::string& what) {
  ++check.checks;
  if (ok) return;
  if (check.violations++ == 0) check.first_violation = what;
}

std::vector<std::size_t> range_of(const StoppingTime& tau) {
  std::set<std::size_t> values(tau.values().begin(), tau.values().end());
  return {values.begin(), values.end()};
}

}  // namespace

LemmaSuiteReport run_lemma_suite(const FilteredSpace& space, const ScalarProcess& m,
                                 const std::vector<RandomVariable>& xs, std::size_t budget,
                                 std::uint64_t seed) {
  require_adapted(space, m);
  LemmaSuiteReport report;
  report.sub_maxingale = is_sub_maxingale(space, m);
  const auto plan = plan_pairs(space, budget, seed);
  report.exhaustive = plan.exhaustive;
  report.stopping_times = plan.stopping_times;

  std::vector<StoppingTime> taus;
  for (const auto& [s, tau] : plan.pairs) {
    if (std::find(taus.begin(), taus.end(), tau) == taus.end()) taus.push_back(tau);
  }

  LemmaCheck fixed = named("fixed-time inequality for stopped values");
  LemmaCheck localize = named("stopped sigma-algebra localization identity");
  LemmaCheck paired = named("two-stopping-time inequality");
  LemmaCheck dyadic = named("dyadic approximation from above");
  LemmaCheck bridge = named("pair criterion agrees with stopped-process definition");

  for (const auto& tau : taus) {
    const auto m_tau = stopped_value(m, tau);
    const auto sigma = sigma_at(space, tau);
    for (auto t : range_of(tau)) {
      if (report.sub_maxingale) {
        const bool ok = pointwise_le(stopped_value(m, min(tau, StoppingTime::constant(space, t))),
                                     cond_esssup(space, t, m_tau));
        record(fixed, ok, "tau=" + describe_tau(space, tau) + " t=" + space.time_label(t));
      }
      std::vector<std::size_t> at_t;
      for (std::size_t w = 0; w < tau.size(); ++w) {
        if (tau[w] == t) at_t.push_back(w);
      }
      const auto on_t = indicator(space.outcome_count(), at_t);
      for (std::size_t k = 0; k < xs.size(); ++k) {
        const bool ok = esssup_on(sigma, xs[k] * on_t) == cond_esssup(space, t, xs[k]) * on_t;
        record(localize, ok,
               "tau=" + describe_tau(space, tau) + " t=" + space.time_label(t) + " x#" + std::to_string(k));
      }
    }
  }

  if (report.sub_maxingale) {
    for (const auto& [s, tau] : plan.pairs) {
      const bool ok = pointwise_le(stopped_value(m, min(s, tau)),
                                   cond_esssup_at(space, s, stopped_value(m, tau)));
      record(paired, ok, "S=" + describe_tau(space, s) + " tau=" + describe_tau(space, tau));
    }
  }

  const auto& nt = space.numeric_times();
  if (nt && nt->front() == 0 && nt->size() >= 2) {
    if (const auto n0 = dyadic_embedding_level(space, 8)) {
      const unsigned first = *n0 == 0 ? 0 : *n0 - 1;
      for (const auto& tau : taus) {
        std::vector<DyadicLevel> levels;
        for (unsigned n = first; n <= first + 2; ++n) levels.push_back(dyadic_refine(space, tau, n));
        const std::string where = "tau=" + describe_tau(space, tau);
        for (std::size_t l = 0; l < levels.size(); ++l) {
          for (std::size_t w = 0; w < tau.size(); ++w) {
            record(dyadic, levels[l].value[w] >= (*nt)[tau[w]], where + " above");
            if (l > 0) record(dyadic, levels[l].value[w] <= levels[l - 1].value[w], where + " monotone");
          }
        }
        for (const auto& x : xs) {
          const auto target = cond_esssup_at(space, tau, x);
          RandomVariable previous;
          for (std::size_t l = 0; l < levels.size(); ++l) {
            const auto approx = cond_esssup_at(levels[l].space, levels[l].tau, x);
            record(dyadic, pointwise_le(approx, target), where + " bounded");
            if (l > 0) record(dyadic, pointwise_le(previous, approx), where + " nondecreasing");
            previous = approx;
          }
          record(dyadic, previous == target, where + " limit reached");
        }
      }
    }
  }

  if (report.exhaustive) {
    const auto verdict = is_strong_sub_maxingale(space, m, budget, seed);
    record(bridge, verdict.strong == verdict.definition_verdict.value_or(!verdict.strong),
           "pair criterion " + std::string(verdict.strong ? "holds" : "fails"));
  }

  report.checks = {fixed, localize, paired, dyadic, bridge};
  return report;
}

}  // namespace hedgelab
