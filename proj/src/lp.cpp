#include "hedgelab/lp.hpp"

#include <stdexcept>

namespace hedgelab {

const VariableBounds& LinearProgram::bound(std::size_t j) const {
  static const VariableBounds nonnegative{};
  return bounds.empty() ? nonnegative : bounds.at(j);
}

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "?";
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

void check_shape(const LinearProgram& lp) {
  if (!lp.bounds.empty() && lp.bounds.size() != lp.variables) {
    throw InputError("linear program bounds size differs from variable count");
  }
  if (lp.sense != Sense::Feasibility && !lp.objective.empty() &&
      lp.objective.size() != lp.variables) {
    throw InputError("linear program objective size differs from variable count");
  }
  for (const auto& row : lp.constraints) {
    if (row.coefficients.size() != lp.variables) {
      throw InputError("linear program row length differs from variable count");
    }
  }
  for (std::size_t j = 0; j < lp.variables; ++j) {
    const auto& b = lp.bound(j);
    if (b.lower && b.upper && *b.lower > *b.upper) {
      throw InputError("variable " + std::to_string(j) + " has lower bound above upper bound");
    }
  }
}

Rational objective_coefficient(const LinearProgram& lp, std::size_t j) {
  if (lp.sense == Sense::Feasibility || lp.objective.empty()) return 0;
  return lp.objective[j];
}

// Original variable x_j = offset + sum of coef * y_col over its columns.
struct VariableImage {
  Rational offset = 0;
  std::vector<std::pair<std::size_t, int>> columns;
};

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : a_(rows, std::vector<Rational>(cols)), b_(rows), basis_(rows, kNone), d_(cols) {}

  std::size_t rows() const { return a_.size(); }
  std::size_t cols() const { return d_.size(); }
  Rational& at(std::size_t i, std::size_t j) { return a_[i][j]; }
  Rational& rhs(std::size_t i) { return b_[i]; }
  std::size_t& basis(std::size_t i) { return basis_[i]; }
  const Rational& reduced_cost(std::size_t j) const { return d_[j]; }

  void price(const std::vector<Rational>& cost) {
    cost_ = cost;
    d_ = cost;
    for (std::size_t i = 0; i < rows(); ++i) {
      const auto& cb = cost[basis_[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j < cols(); ++j) {
        if (!a_[i][j].is_zero()) d_[j] -= cb * a_[i][j];
      }
    }
  }

  Rational value() const {
    Rational z = 0;
    for (std::size_t i = 0; i < rows(); ++i) z += cost_[basis_[i]] * b_[i];
    return z;
  }

  void pivot(std::size_t r, std::size_t c) {
    auto& prow = a_[r];
    const Rational inv = 1 / prow[c];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < cols(); ++j) {
      if (!prow[j].is_zero()) {
        prow[j] *= inv;
        nz.push_back(j);
      }
    }
    b_[r] *= inv;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r || a_[i][c].is_zero()) continue;
      const Rational f = a_[i][c];
      for (auto j : nz) a_[i][j] -= f * prow[j];
      b_[i] -= f * b_[r];
    }
    if (!d_[c].is_zero()) {
      const Rational f = d_[c];
      for (auto j : nz) d_[j] -= f * prow[j];
    }
    basis_[r] = c;
  }

  // Bland's rule: lowest-index improving column; ratio ties go to the lowest
  // basic variable index. Returns kNone at optimum, else the column along
  // which the objective is unbounded.
  std::size_t minimize(const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < cols(); ++j) {
        if (allowed[j] && d_[j].sign() < 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return kNone;
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (a_[i][enter].sign() <= 0) continue;
        Rational ratio = b_[i] / a_[i][enter];
        if (leave == kNone || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == kNone) return enter;
      pivot(leave, enter);
    }
  }

  void drop_row(std::size_t i) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(i));
    b_.erase(b_.begin() + static_cast<std::ptrdiff_t>(i));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
  }

  std::vector<Rational> column_values() const {
    std::vector<Rational> y(cols());
    for (std::size_t i = 0; i < rows(); ++i) y[basis_[i]] = b_[i];
    return y;
  }

 private:
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> d_;
  std::vector<Rational> cost_;
};

std::vector<Rational> to_original(const std::vector<VariableImage>& images,
                                  const std::vector<Rational>& y, bool with_offset) {
  std::vector<Rational> x(images.size());
  for (std::size_t j = 0; j < images.size(); ++j) {
    if (with_offset) x[j] = images[j].offset;
    for (auto [col, coef] : images[j].columns) x[j] += coef * y[col];
  }
  return x;
}

Rational row_value(const std::vector<Rational>& row, const std::vector<Rational>& x) {
  Rational s = 0;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (!row[j].is_zero()) s += row[j] * x[j];
  }
  return s;
}

bool satisfies(const Rational& lhs, Relation rel, const Rational& rhs) {
  switch (rel) {
    case Relation::LessEqual: return lhs <= rhs;
    case Relation::Equal: return lhs == rhs;
    case Relation::GreaterEqual: return lhs >= rhs;
  }
  return false;
}

Relation flipped(Relation rel) {
  if (rel == Relation::LessEqual) return Relation::GreaterEqual;
  if (rel == Relation::GreaterEqual) return Relation::LessEqual;
  return rel;
}

}  // namespace

LpOutcome solve_lp(const LinearProgram& lp) {
  check_shape(lp);
  const std::size_t n = lp.variables;

  std::vector<VariableImage> images(n);
  std::size_t ny = 0;
  struct BoundRow {
    std::size_t column;
    Rational width;
  };
  std::vector<BoundRow> bound_rows;
  for (std::size_t j = 0; j < n; ++j) {
    const auto& b = lp.bound(j);
    if (b.lower) {
      images[j].offset = *b.lower;
      images[j].columns.push_back({ny, 1});
      if (b.upper) bound_rows.push_back({ny, *b.upper - *b.lower});
      ++ny;
    } else if (b.upper) {
      images[j].offset = *b.upper;
      images[j].columns.push_back({ny++, -1});
    } else {
      images[j].columns.push_back({ny++, 1});
      images[j].columns.push_back({ny++, -1});
    }
  }

  // Rows in y-space, with their flip sign so that rhs >= 0.
  struct Row {
    std::vector<Rational> coef;
    Relation relation;
    Rational rhs;
    int flip = 1;
  };
  std::vector<Row> rows;
  for (const auto& c : lp.constraints) {
    Row r{std::vector<Rational>(ny), c.relation, c.rhs};
    for (std::size_t j = 0; j < n; ++j) {
      if (c.coefficients[j].is_zero()) continue;
      r.rhs -= c.coefficients[j] * images[j].offset;
      for (auto [col, coef] : images[j].columns) r.coef[col] += coef * c.coefficients[j];
    }
    rows.push_back(std::move(r));
  }
  for (const auto& br : bound_rows) {
    Row r{std::vector<Rational>(ny), Relation::LessEqual, br.width};
    r.coef[br.column] = 1;
    rows.push_back(std::move(r));
  }
  for (auto& r : rows) {
    if (r.rhs.sign() < 0) {
      for (auto& v : r.coef) v = -v;
      r.rhs = -r.rhs;
      r.relation = flipped(r.relation);
      r.flip = -1;
    }
  }

  const std::size_t m = rows.size();
  std::size_t slack_count = 0, artificial_count = 0;
  for (const auto& r : rows) {
    if (r.relation != Relation::Equal) ++slack_count;
    if (r.relation != Relation::LessEqual) ++artificial_count;
  }
  const std::size_t first_artificial = ny + slack_count;
  const std::size_t cols = first_artificial + artificial_count;

  Tableau tab(m, cols);
  std::vector<std::size_t> unit_col(m);
  {
    std::size_t s = ny, a = first_artificial;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < ny; ++j) tab.at(i, j) = rows[i].coef[j];
      tab.rhs(i) = rows[i].rhs;
      switch (rows[i].relation) {
        case Relation::LessEqual:
          tab.at(i, s) = 1;
          unit_col[i] = s++;
          break;
        case Relation::GreaterEqual:
          tab.at(i, s++) = -1;
          tab.at(i, a) = 1;
          unit_col[i] = a++;
          break;
        case Relation::Equal:
          tab.at(i, a) = 1;
          unit_col[i] = a++;
          break;
      }
      tab.basis(i) = unit_col[i];
    }
  }

  LpOutcome out;
  if (artificial_count > 0) {
    std::vector<Rational> phase1(cols);
    for (std::size_t j = first_artificial; j < cols; ++j) phase1[j] = 1;
    tab.price(phase1);
    tab.minimize(std::vector<bool>(cols, true));  // bounded below by zero
    if (tab.value().sign() > 0) {
      out.status = LpStatus::Infeasible;
      out.farkas.assign(lp.constraints.size(), 0);
      for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
        const Rational y = phase1[unit_col[i]] - tab.reduced_cost(unit_col[i]);
        const int sigma = lp.constraints[i].relation == Relation::LessEqual ? -1 : 1;
        out.farkas[i] = y * rows[i].flip * sigma;
      }
      if (!verify_farkas(lp, out.farkas)) {
        throw std::logic_error("simplex produced an invalid infeasibility certificate");
      }
      return out;
    }
    for (std::size_t i = tab.rows(); i-- > 0;) {
      if (tab.basis(i) < first_artificial) continue;
      std::size_t c = kNone;
      for (std::size_t j = 0; j < first_artificial; ++j) {
        if (!tab.at(i, j).is_zero()) {
          c = j;
          break;
        }
      }
      if (c == kNone) {
        tab.drop_row(i);
      } else {
        tab.pivot(i, c);
      }
    }
  }

  std::vector<Rational> cost(cols);
  const Rational sign = lp.sense == Sense::Maximize ? -1 : 1;
  for (std::size_t j = 0; j < n; ++j) {
    const Rational cj = objective_coefficient(lp, j);
    if (cj.is_zero()) continue;
    for (auto [col, coef] : images[j].columns) cost[col] += sign * cj * coef;
  }
  tab.price(cost);
  std::vector<bool> allowed(cols, true);
  for (std::size_t j = first_artificial; j < cols; ++j) allowed[j] = false;
  const std::size_t unbounded_col = tab.minimize(allowed);

  const auto y = tab.column_values();
  out.solution = to_original(images, y, true);
  for (std::size_t j = 0; j < n; ++j) out.objective_value += objective_coefficient(lp, j) * out.solution[j];
  if (unbounded_col != kNone) {
    std::vector<Rational> dir(cols);
    dir[unbounded_col] = 1;
    for (std::size_t i = 0; i < tab.rows(); ++i) dir[tab.basis(i)] = -tab.at(i, unbounded_col);
    out.status = LpStatus::Unbounded;
    out.ray = to_original(images, dir, false);
    if (!verify_ray(lp, out.solution, out.ray)) {
      throw std::logic_error("simplex produced an invalid unbounded ray");
    }
    return out;
  }
  out.status = LpStatus::Optimal;
  if (!verify_solution(lp, out.solution)) {
    throw std::logic_error("simplex produced an infeasible optimum");
  }
  return out;
}

bool verify_solution(const LinearProgram& lp, const std::vector<Rational>& x) {
  if (x.size() != lp.variables) return false;
  for (std::size_t j = 0; j < lp.variables; ++j) {
    const auto& b = lp.bound(j);
    if (b.lower && x[j] < *b.lower) return false;
    if (b.upper && x[j] > *b.upper) return false;
  }
  for (const auto& c : lp.constraints) {
    if (!satisfies(row_value(c.coefficients, x), c.relation, c.rhs)) return false;
  }
  return true;
}

bool verify_farkas(const LinearProgram& lp, const std::vector<Rational>& multipliers) {
  if (multipliers.size() != lp.constraints.size()) return false;
  std::vector<Rational> g(lp.variables);
  Rational beta = 0;
  for (std::size_t i = 0; i < multipliers.size(); ++i) {
    const auto& c = lp.constraints[i];
    const auto& mu = multipliers[i];
    if (c.relation != Relation::Equal && mu.sign() < 0) return false;
    const Rational w = c.relation == Relation::LessEqual ? -mu : mu;
    for (std::size_t j = 0; j < lp.variables; ++j) g[j] += w * c.coefficients[j];
    beta += w * c.rhs;
  }
  Rational sup = 0;
  for (std::size_t j = 0; j < lp.variables; ++j) {
    const auto& b = lp.bound(j);
    if (g[j].sign() > 0) {
      if (!b.upper) return false;
      sup += g[j] * *b.upper;
    } else if (g[j].sign() < 0) {
      if (!b.lower) return false;
      sup += g[j] * *b.lower;
    }
  }
  return sup < beta;
}

bool verify_ray(const LinearProgram& lp, const std::vector<Rational>& start,
                const std::vector<Rational>& ray) {
  if (lp.sense == Sense::Feasibility || !verify_solution(lp, start)) return false;
  if (ray.size() != lp.variables) return false;
  for (std::size_t j = 0; j < lp.variables; ++j) {
    const auto& b = lp.bound(j);
    if (b.lower && ray[j].sign() < 0) return false;
    if (b.upper && ray[j].sign() > 0) return false;
  }
  for (const auto& c : lp.constraints) {
    if (!satisfies(row_value(c.coefficients, ray), c.relation, 0)) return false;
  }
  const Rational gain = row_value(lp.objective, ray);
  return lp.sense == Sense::Maximize ? gain.sign() > 0 : gain.sign() < 0;
}

}  // namespace hedgelab
