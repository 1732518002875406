#pragma once

#include "hedgelab/prob_space.hpp"

#include <optional>
#include <vector>

namespace hedgelab {

/// How an infinite sequence continues after its explicit prefix X_1..X_K.
struct SequenceTail {
  enum class Kind { Constant, Periodic, Monotone };
  Kind kind = Kind::Constant;
  /// Periodic: the last `period` prefix terms repeat forever.
  std::size_t period = 1;
  /// Monotone: pointwise limit per outcome. Each outcome moves monotonically
  /// from X_K toward its limit.
  std::vector<ExtendedRational> limit;
};

const char* to_string(SequenceTail::Kind kind);

/// Finitely described infinite sequence of random variables, indexed from 1.
struct SequenceSpec {
  std::vector<RandomVariable> prefix;
  SequenceTail tail;

  static SequenceSpec constant(RandomVariable x);
  static SequenceSpec periodic(std::vector<RandomVariable> prefix, std::size_t period);
  static SequenceSpec monotone(std::vector<RandomVariable> prefix, std::vector<ExtendedRational> limit);

  std::size_t length() const { return prefix.size(); }
  std::size_t outcome_count() const { return prefix.front().size(); }
  /// X_n for n >= 1. Monotone tails are realized canonically: for a finite
  /// limit L, X_{K+j} = L + (X_K - L)/(j+1); for an infinite one, X_K -/+ j.
  RandomVariable term(std::size_t n) const;
  /// Throws InputError on an empty prefix, mixed sizes, a bad period or a
  /// monotone tail whose last prefix step moves away from the declared limit.
  void validate() const;
};

/// One SequenceSpec per grid time, sharing the index n.
struct ProcessSequenceSpec {
  std::vector<SequenceSpec> per_time;

  ScalarProcess term(std::size_t n) const;
  void validate(const FilteredSpace& space) const;
};

/// E[(X - Y)^+ ^ 1].
Rational pdist(const FilteredSpace& space, const RandomVariable& x, const RandomVariable& y);
/// E[esssup_{F_t}(X - Y)^+ ^ 1].
Rational pdist_hat(const FilteredSpace& space, std::size_t t, const RandomVariable& x,
                   const RandomVariable& y);
/// E[max over grid times u >= t of esssup_{F_t}(X_u - Y_u)^+ ^ 1].
Rational process_pdist(const FilteredSpace& space, std::size_t t, const ScalarProcess& x,
                       const ScalarProcess& y);

/// Pointwise inf over n of X_n, exact for every tail rule.
std::vector<ExtendedRational> sequence_infimum(const SequenceSpec& seq);

struct Convergence {
  bool convergent = false;
  std::vector<ExtendedRational> infimum;
  /// inf_n X_n when convergent.
  std::optional<RandomVariable> limit;
  /// First outcome where the infimum is -inf.
  std::optional<std::size_t> violating_outcome;
};

Convergence converges(const FilteredSpace& space, std::size_t t, const SequenceSpec& seq);

/// alpha_n = esssup_{F_t}(Z - X_n)^+, described like the sequence itself.
struct LimitWitness {
  bool accepted = false;
  std::vector<RandomVariable> alpha_prefix;
  SequenceTail::Kind tail_kind = SequenceTail::Kind::Constant;
  /// Constant: the eventual value. Periodic: one period. Monotone: the
  /// pointwise limit of alpha_n.
  std::vector<RandomVariable> alpha_tail;
};

/// Decides whether Z is a limit of the sequence for the d-hat_t topology.
/// Throws InputError when the sequence does not converge.
LimitWitness is_limit(const FilteredSpace& space, std::size_t t, const SequenceSpec& seq,
                      const RandomVariable& z);

struct FatouWitness {
  bool holds = false;
  /// Subsequence n_k = first + k * step (step 0 never occurs).
  std::size_t first = 0;
  std::size_t step = 1;
  std::vector<ExtendedRational> liminf;
};

/// Looks for a tail-aligned subsequence with Z <= liminf pointwise.
FatouWitness fatou_check(const FilteredSpace& space, std::size_t t, const SequenceSpec& seq,
                         const RandomVariable& z);

struct CauchyVerdict {
  bool cauchy = false;
  /// When not Cauchy: indices (n, m) in the tail with d-hat_t(X_n, X_m) = distance,
  /// recurring for arbitrarily large n.
  std::size_t n = 0;
  std::size_t m = 0;
  Rational distance = 0;
};

CauchyVerdict is_cauchy(const FilteredSpace& space, std::size_t t, const SequenceSpec& seq);

}  // namespace hedgelab
