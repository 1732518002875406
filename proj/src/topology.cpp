#include "hedgelab/topology.hpp"

#include "hedgelab/cond_calc.hpp"

#include <algorithm>

namespace hedgelab {

const char* to_string(SequenceTail::Kind kind) {
  switch (kind) {
    case SequenceTail::Kind::Constant: return "constant";
    case SequenceTail::Kind::Periodic: return "periodic";
    case SequenceTail::Kind::Monotone: return "monotone";
  }
  return "?";
}

SequenceSpec SequenceSpec::constant(RandomVariable x) {
  SequenceSpec s;
  s.prefix.push_back(std::move(x));
  return s;
}

SequenceSpec SequenceSpec::periodic(std::vector<RandomVariable> prefix, std::size_t period) {
  SequenceSpec s;
  s.prefix = std::move(prefix);
  s.tail.kind = SequenceTail::Kind::Periodic;
  s.tail.period = period;
  s.validate();
  return s;
}

SequenceSpec SequenceSpec::monotone(std::vector<RandomVariable> prefix,
                                    std::vector<ExtendedRational> limit) {
  SequenceSpec s;
  s.prefix = std::move(prefix);
  s.tail.kind = SequenceTail::Kind::Monotone;
  s.tail.limit = std::move(limit);
  s.validate();
  return s;
}

void SequenceSpec::validate() const {
  if (prefix.empty()) throw InputError("sequence has an empty prefix");
  for (const auto& x : prefix) {
    if (x.size() != prefix.front().size()) throw InputError("sequence terms differ in size");
  }
  switch (tail.kind) {
    case SequenceTail::Kind::Constant:
      break;
    case SequenceTail::Kind::Periodic:
      if (tail.period == 0 || tail.period > prefix.size()) {
        throw InputError("periodic tail period must lie in 1.." + std::to_string(prefix.size()));
      }
      break;
    case SequenceTail::Kind::Monotone: {
      if (tail.limit.size() != outcome_count()) throw InputError("monotone tail limit has wrong size");
      const auto& last = prefix.back();
      for (std::size_t w = 0; w < outcome_count(); ++w) {
        if (prefix.size() < 2) break;
        const Rational step = last[w] - prefix[prefix.size() - 2][w];
        const auto& lim = tail.limit[w];
        const bool toward_up = lim > ExtendedRational(last[w]);
        const bool toward_down = lim < ExtendedRational(last[w]);
        if ((step.sign() > 0 && toward_down) || (step.sign() < 0 && toward_up)) {
          throw InputError("monotone tail is not monotone at outcome " + std::to_string(w));
        }
      }
      break;
    }
  }
}

RandomVariable SequenceSpec::term(std::size_t n) const {
  if (n == 0) throw InputError("sequence indices start at 1");
  const std::size_t k = prefix.size();
  if (n <= k) return prefix[n - 1];
  switch (tail.kind) {
    case SequenceTail::Kind::Constant:
      return prefix.back();
    case SequenceTail::Kind::Periodic:
      return prefix[k - tail.period + (n - k - 1) % tail.period];
    case SequenceTail::Kind::Monotone: {
      const Rational j = static_cast<unsigned long>(n - k);
      RandomVariable out = prefix.back();
      for (std::size_t w = 0; w < out.size(); ++w) {
        const auto& lim = tail.limit[w];
        if (lim.is_minus_infinity()) {
          out[w] -= j;
        } else if (lim.is_plus_infinity()) {
          out[w] += j;
        } else {
          out[w] = lim.value() + (out[w] - lim.value()) / (j + 1);
        }
      }
      return out;
    }
  }
  return prefix.back();
}

ScalarProcess ProcessSequenceSpec::term(std::size_t n) const {
  ScalarProcess out;
  for (const auto& s : per_time) out.push_back(s.term(n));
  return out;
}

void ProcessSequenceSpec::validate(const FilteredSpace& space) const {
  if (per_time.size() != space.time_count()) {
    throw InputError("process sequence has " + std::to_string(per_time.size()) +
                     " time slices, grid has " + std::to_string(space.time_count()));
  }
  for (const auto& s : per_time) {
    s.validate();
    if (s.length() != per_time.front().length() || s.tail.kind != per_time.front().tail.kind) {
      throw InputError("process sequence slices disagree on prefix length or tail rule");
    }
  }
}

Rational pdist(const FilteredSpace& space, const RandomVariable& x, const RandomVariable& y) {
  return space.expectation(capped(positive_part(x - y), 1));
}

Rational pdist_hat(const FilteredSpace& space, std::size_t t, const RandomVariable& x,
                   const RandomVariable& y) {
  return space.expectation(capped(cond_esssup(space, t, positive_part(x - y)), 1));
}

Rational process_pdist(const FilteredSpace& space, std::size_t t, const ScalarProcess& x,
                       const ScalarProcess& y) {
  if (x.size() != space.time_count() || y.size() != space.time_count()) {
    throw InputError("process does not match the time grid");
  }
  RandomVariable worst(space.outcome_count());
  for (std::size_t u = t; u < space.time_count(); ++u) {
    worst = pointwise_max(worst, cond_esssup(space, t, positive_part(x[u] - y[u])));
  }
  return space.expectation(capped(worst, 1));
}

std::vector<ExtendedRational> sequence_infimum(const SequenceSpec& seq) {
  seq.validate();
  std::vector<ExtendedRational> inf(seq.outcome_count());
  for (std::size_t w = 0; w < seq.outcome_count(); ++w) {
    Rational m = seq.prefix.front()[w];
    for (const auto& x : seq.prefix) m = std::min(m, x[w]);
    inf[w] = m;
    if (seq.tail.kind == SequenceTail::Kind::Monotone && seq.tail.limit[w] < inf[w]) {
      inf[w] = seq.tail.limit[w];
    }
  }
  return inf;
}

Convergence converges(const FilteredSpace& space, std::size_t t, const SequenceSpec& seq) {
  (void)space.partition(t);
  if (seq.outcome_count() != space.outcome_count()) throw InputError("sequence not keyed to space");
  Convergence out;
  out.infimum = sequence_infimum(seq);
  for (std::size_t w = 0; w < out.infimum.size(); ++w) {
    if (out.infimum[w].is_minus_infinity()) {
      out.violating_outcome = w;
      return out;
    }
  }
  out.convergent = true;
  RandomVariable limit(out.infimum.size());
  for (std::size_t w = 0; w < limit.size(); ++w) limit[w] = out.infimum[w].value();
  out.limit = std::move(limit);
  return out;
}

namespace {

void require_convergent(const FilteredSpace& space, std::size_t t, const SequenceSpec& seq) {
  const auto c = converges(space, t, seq);
  if (!c.convergent) {
    throw InputError("sequence does not converge: inf_n X_n = -inf at outcome " +
                     space.outcome_label(*c.violating_outcome));
  }
}

bool is_zero(const RandomVariable& x) {
  return std::all_of(x.begin(), x.end(), [](const Rational& v) { return v.is_zero(); });
}

// Indices (1-based) of the repeating window of a constant or periodic tail.
std::pair<std::size_t, std::size_t> tail_window(const SequenceSpec& seq) {
  const std::size_t k = seq.length();
  if (seq.tail.kind == SequenceTail::Kind::Periodic) return {k - seq.tail.period + 1, k};
  return {k, k};
}

}  // namespace

LimitWitness is_limit(const FilteredSpace& space, std::size_t t, const SequenceSpec& seq,
                      const RandomVariable& z) {
  require_convergent(space, t, seq);
  require_keyed(space, z);
  LimitWitness out;
  out.tail_kind = seq.tail.kind;
  for (const auto& x : seq.prefix) {
    out.alpha_prefix.push_back(cond_esssup(space, t, positive_part(z - x)));
  }
  if (seq.tail.kind == SequenceTail::Kind::Monotone) {
    RandomVariable gap(space.outcome_count());
    for (std::size_t w = 0; w < gap.size(); ++w) {
      const auto& lim = seq.tail.limit[w];
      if (lim.is_finite() && z[w] > lim.value()) gap[w] = z[w] - lim.value();
    }
    out.alpha_tail.push_back(cond_esssup(space, t, gap));
  } else {
    const auto [first, last] = tail_window(seq);
    for (std::size_t n = first; n <= last; ++n) out.alpha_tail.push_back(out.alpha_prefix[n - 1]);
  }
  out.accepted = std::all_of(out.alpha_tail.begin(), out.alpha_tail.end(), is_zero);
  return out;
}

FatouWitness fatou_check(const FilteredSpace& space, std::size_t t, const SequenceSpec& seq,
                         const RandomVariable& z) {
  require_convergent(space, t, seq);
  require_keyed(space, z);
  FatouWitness out;
  if (seq.tail.kind == SequenceTail::Kind::Monotone) {
    out.first = seq.length();
    out.liminf = seq.tail.limit;
    out.holds = true;
    for (std::size_t w = 0; w < z.size(); ++w) {
      if (ExtendedRational(z[w]) > out.liminf[w]) out.holds = false;
    }
    return out;
  }
  const auto [first, last] = tail_window(seq);
  const std::size_t step = last - first + 1;
  std::optional<Rational> best;
  for (std::size_t n = first; n <= last; ++n) {
    const auto& x = seq.prefix[n - 1];
    if (!pointwise_le(z, x)) continue;
    const Rational e = space.expectation(x);
    if (!best || e > *best) {
      best = e;
      out.holds = true;
      out.first = n;
      out.step = step;
      out.liminf.assign(x.begin(), x.end());
    }
  }
  return out;
}

CauchyVerdict is_cauchy(const FilteredSpace& space, std::size_t t, const SequenceSpec& seq) {
  seq.validate();
  if (seq.outcome_count() != space.outcome_count()) throw InputError("sequence not keyed to space");
  CauchyVerdict out;
  switch (seq.tail.kind) {
    case SequenceTail::Kind::Constant:
      out.cauchy = true;
      return out;
    case SequenceTail::Kind::Monotone:
      out.cauchy = std::all_of(seq.tail.limit.begin(), seq.tail.limit.end(),
                               [](const ExtendedRational& l) { return l.is_finite(); });
      break;
    case SequenceTail::Kind::Periodic: {
      const auto [first, last] = tail_window(seq);
      out.cauchy = true;
      for (std::size_t n = first; n <= last; ++n) {
        if (seq.prefix[n - 1] != seq.prefix[first - 1]) out.cauchy = false;
      }
      break;
    }
  }
  if (out.cauchy) return out;

  const auto [first, last] = tail_window(seq);
  bool found = false;
  for (int backward = 0; backward < 2; ++backward) {
    for (std::size_t n = first; n <= last; ++n) {
      const auto a = seq.term(n), b = seq.term(n + 1);
      const Rational d = backward ? pdist_hat(space, t, b, a) : pdist_hat(space, t, a, b);
      if (!found || d > out.distance) {
        found = true;
        out.distance = d;
        out.n = backward ? n + 1 : n;
        out.m = backward ? n : n + 1;
      }
    }
  }
  return out;
}

}  // namespace hedgelab
