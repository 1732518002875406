#pragma once

#include "hedgelab/lp.hpp"
#include "hedgelab/prob_space.hpp"

#include <vector>

namespace hedgelab {

/// Atom-wise maximum of x over the cells of `partition`.
RandomVariable esssup_on(const Partition& partition, const RandomVariable& x);

/// Smallest F_t-measurable variable dominating x: the maximum of x on each atom at t.
RandomVariable cond_esssup(const FilteredSpace& space, std::size_t t, const RandomVariable& x);
/// -cond_esssup(t, -x).
RandomVariable cond_essinf(const FilteredSpace& space, std::size_t t, const RandomVariable& x);

/// Distinct values attained by x on each atom at t, in outcome order. Indexed
/// by atom.
std::vector<std::vector<Point>> cond_support(const FilteredSpace& space, std::size_t t,
                                             const RandomVector& x);

struct HullMembership {
  bool member = false;
  std::vector<Rational> weights;  ///< member: convex weights per cloud point
  /// Non-member: affine separator f(x) = normal.x - offset with f(point) < 0
  /// and f(c) >= 0 on the cloud, tight at some cloud point. The normal is
  /// scaled so its largest absolute coordinate is 1.
  Point normal;
  Rational offset = 0;

  Rational separator(const Point& x) const { return dot(normal, x) - offset; }
};

/// Exact test of point in conv(cloud). Throws InputError on an empty cloud or
/// dimension mismatch.
HullMembership in_convex_hull(const Point& point, const std::vector<Point>& cloud);

}  // namespace hedgelab
