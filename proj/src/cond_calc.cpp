#include "hedgelab/cond_calc.hpp"

#include <algorithm>
#include <stdexcept>

namespace hedgelab {

RandomVariable esssup_on(const Partition& partition, const RandomVariable& x) {
  if (x.size() != partition.outcome_count()) throw InputError("random variable size mismatch");
  RandomVariable out(x.size());
  for (const auto& cell : partition.cells()) {
    Rational best = x[cell.front()];
    for (auto w : cell) best = std::max(best, x[w]);
    for (auto w : cell) out[w] = best;
  }
  return out;
}

RandomVariable cond_esssup(const FilteredSpace& space, std::size_t t, const RandomVariable& x) {
  require_keyed(space, x);
  return esssup_on(space.partition(t), x);
}

RandomVariable cond_essinf(const FilteredSpace& space, std::size_t t, const RandomVariable& x) {
  return -cond_esssup(space, t, -x);
}

std::vector<std::vector<Point>> cond_support(const FilteredSpace& space, std::size_t t,
                                             const RandomVector& x) {
  if (x.size() != space.outcome_count()) throw InputError("random vector size mismatch");
  std::vector<std::vector<Point>> out;
  for (const auto& cell : space.partition(t).cells()) {
    std::vector<Point> values;
    for (auto w : cell) {
      if (std::find(values.begin(), values.end(), x[w]) == values.end()) values.push_back(x[w]);
    }
    out.push_back(std::move(values));
  }
  return out;
}

namespace {

void normalize_separator(HullMembership& h, const std::vector<Point>& cloud) {
  Rational scale = 0;
  for (const auto& a : h.normal) scale = std::max(scale, abs(a));
  for (auto& a : h.normal) a /= scale;
  h.offset = dot(h.normal, cloud.front());
  for (const auto& c : cloud) h.offset = std::min(h.offset, dot(h.normal, c));
}

}  // namespace

HullMembership in_convex_hull(const Point& point, const std::vector<Point>& cloud) {
  if (cloud.empty()) throw InputError("convex hull of an empty cloud");
  const std::size_t d = point.size();
  for (const auto& c : cloud) {
    if (c.size() != d) throw InputError("convex hull point dimension mismatch");
  }

  HullMembership out;
  const bool degenerate =
      std::all_of(cloud.begin(), cloud.end(), [&](const Point& c) { return c == cloud.front(); });
  if (degenerate) {
    if (point == cloud.front()) {
      out.member = true;
      out.weights.assign(cloud.size(), 0);
      out.weights.front() = 1;
      return out;
    }
    out.normal.resize(d);
    for (std::size_t j = 0; j < d; ++j) out.normal[j] = cloud.front()[j] - point[j];
    normalize_separator(out, cloud);
    return out;
  }

  LinearProgram lp(cloud.size());
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<Rational> row(cloud.size());
    for (std::size_t i = 0; i < cloud.size(); ++i) row[i] = cloud[i][j];
    lp.add(std::move(row), Relation::Equal, point[j]);
  }
  lp.add(std::vector<Rational>(cloud.size(), 1), Relation::Equal, 1);
  const auto result = solve_lp(lp);
  if (result.status == LpStatus::Optimal) {
    out.member = true;
    out.weights = result.solution;
    return out;
  }
  // mu.c_i + mu_0 <= 0 on the cloud and mu.p + mu_0 > 0, so a = -mu separates.
  out.normal.resize(d);
  for (std::size_t j = 0; j < d; ++j) out.normal[j] = -result.farkas[j];
  normalize_separator(out, cloud);
  if (out.separator(point).sign() >= 0) {
    throw std::logic_error("convex hull separator does not separate");
  }
  return out;
}

}  // namespace hedgelab
