#pragma once

#include "hedgelab/rational.hpp"

#include <optional>
#include <vector>

namespace hedgelab {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Sense { Maximize, Minimize, Feasibility };

struct Constraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::LessEqual;
  Rational rhs = 0;
};

/// Missing bound means unbounded on that side. Default is x >= 0.
struct VariableBounds {
  std::optional<Rational> lower = Rational(0);
  std::optional<Rational> upper;

  static VariableBounds free() { return {std::nullopt, std::nullopt}; }
  static VariableBounds between(Rational lo, Rational hi) { return {std::move(lo), std::move(hi)}; }
};

struct LinearProgram {
  std::size_t variables = 0;
  Sense sense = Sense::Feasibility;
  std::vector<Rational> objective;  ///< ignored for Feasibility; empty means zero
  std::vector<Constraint> constraints;
  std::vector<VariableBounds> bounds;  ///< empty means every variable >= 0

  explicit LinearProgram(std::size_t n = 0, Sense s = Sense::Feasibility)
      : variables(n), sense(s), objective(n), bounds(n) {}

  void add(std::vector<Rational> row, Relation relation, Rational rhs) {
    constraints.push_back({std::move(row), relation, std::move(rhs)});
  }
  const VariableBounds& bound(std::size_t j) const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* to_string(LpStatus status);

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  /// Optimal point; for Unbounded, a feasible point the ray starts from.
  std::vector<Rational> solution;
  Rational objective_value = 0;
  /// Infeasible only: one multiplier per constraint, applied to the row
  /// written as ">=" (a "<=" row is read as -a.x >= -b). Inequality
  /// multipliers are nonnegative, equality multipliers free.
  std::vector<Rational> farkas;
  /// Unbounded only: feasible direction along which the objective improves
  /// without limit.
  std::vector<Rational> ray;
};

/// Two-phase primal simplex over exact rationals with Bland's rule. Every
/// result is re-verified by the independent checkers below before return.
LpOutcome solve_lp(const LinearProgram& lp);

/// x satisfies every constraint and bound exactly.
bool verify_solution(const LinearProgram& lp, const std::vector<Rational>& x);
/// The weighted ">=" combination g.x >= beta of the rows is violated by every
/// x in the variable bound box, i.e. sup over the box of g.x < beta.
bool verify_farkas(const LinearProgram& lp, const std::vector<Rational>& multipliers);
/// `ray` is a recession direction of the feasible set that strictly improves
/// the objective, and `start` is feasible.
bool verify_ray(const LinearProgram& lp, const std::vector<Rational>& start,
                const std::vector<Rational>& ray);

}  // namespace hedgelab
