#pragma once

#include "hedgelab/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hedgelab {

/// Scalar random variable on a finite outcome set, stored by outcome index.
class RandomVariable {
 public:
  RandomVariable() = default;
  explicit RandomVariable(std::size_t outcomes, const Rational& fill = 0)
      : values_(outcomes, fill) {}
  RandomVariable(std::vector<Rational> values) : values_(std::move(values)) {}  // NOLINT
  RandomVariable(std::initializer_list<Rational> values) : values_(values) {}

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t outcome) const { return values_[outcome]; }
  Rational& operator[](std::size_t outcome) { return values_[outcome]; }
  const std::vector<Rational>& values() const { return values_; }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  RandomVariable& operator+=(const RandomVariable& other);
  RandomVariable& operator-=(const RandomVariable& other);
  RandomVariable& operator*=(const Rational& factor);

  friend RandomVariable operator+(RandomVariable a, const RandomVariable& b) { return a += b; }
  friend RandomVariable operator-(RandomVariable a, const RandomVariable& b) { return a -= b; }
  friend RandomVariable operator*(RandomVariable a, const Rational& c) { return a *= c; }
  friend RandomVariable operator*(const Rational& c, RandomVariable a) { return a *= c; }
  friend RandomVariable operator-(RandomVariable a) { return a *= Rational(-1); }
  /// Pointwise product.
  friend RandomVariable operator*(const RandomVariable& a, const RandomVariable& b);
  friend bool operator==(const RandomVariable& a, const RandomVariable& b) = default;

 private:
  std::vector<Rational> values_;
};

RandomVariable positive_part(const RandomVariable& x);
RandomVariable pointwise_min(const RandomVariable& a, const RandomVariable& b);
RandomVariable pointwise_max(const RandomVariable& a, const RandomVariable& b);
/// min(x, cap) pointwise.
RandomVariable capped(const RandomVariable& x, const Rational& cap);
/// True when a(w) <= b(w) for every outcome.
bool pointwise_le(const RandomVariable& a, const RandomVariable& b);
RandomVariable indicator(std::size_t outcomes, const std::vector<std::size_t>& members);

/// Vector-valued random variable: one point of R^d per outcome.
class RandomVector {
 public:
  RandomVector() = default;
  RandomVector(std::size_t outcomes, std::size_t dim) : dim_(dim), points_(outcomes, Point(dim)) {}
  /// Throws InputError unless every point has the same dimension.
  RandomVector(std::vector<Point> points, std::size_t dim);

  std::size_t size() const { return points_.size(); }
  std::size_t dim() const { return dim_; }
  const Point& operator[](std::size_t outcome) const { return points_[outcome]; }
  Point& operator[](std::size_t outcome) { return points_[outcome]; }
  RandomVariable coordinate(std::size_t j) const;

  friend bool operator==(const RandomVector& a, const RandomVector& b) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Point> points_;
};

/// A partition of {0, ..., n-1}. Cells are kept sorted internally and ordered by
/// their smallest member, which is the canonical atom order used in reports.
class Partition {
 public:
  Partition() = default;
  /// Throws InputError when the cells overlap, miss an outcome or are empty.
  Partition(std::vector<std::vector<std::size_t>> cells, std::size_t outcomes);

  static Partition trivial(std::size_t outcomes);
  static Partition singletons(std::size_t outcomes);

  std::size_t size() const { return cells_.size(); }
  std::size_t outcome_count() const { return cell_of_.size(); }
  const std::vector<std::vector<std::size_t>>& cells() const { return cells_; }
  const std::vector<std::size_t>& cell(std::size_t index) const { return cells_[index]; }
  std::size_t cell_of(std::size_t outcome) const { return cell_of_[outcome]; }

  bool is_measurable(const RandomVariable& x) const;
  bool is_measurable(const RandomVector& x) const;
  /// Every cell of *this lies inside one cell of `coarser`.
  bool refines(const Partition& coarser) const;
  /// True when the event (membership flags per outcome) is a union of cells.
  bool contains_event(const std::vector<bool>& event) const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.cells_ == b.cells_; }

 private:
  std::vector<std::vector<std::size_t>> cells_;
  std::vector<std::size_t> cell_of_;
};

struct Atom {
  std::size_t time = 0;
  std::size_t index = 0;  ///< position in the canonical cell order at `time`
  std::vector<std::size_t> members;
};

/// Raw description of a filtered space, checked by `check_space`.
struct SpaceSpec {
  std::vector<std::string> outcomes;
  std::vector<Rational> probabilities;
  std::vector<std::string> times;
  std::vector<std::vector<std::vector<std::size_t>>> partitions;  ///< per time, cells of outcome indices
  bool relaxed_terminal = false;
};

/// Every violated invariant of `spec`, in document order. Empty when valid.
std::vector<std::string> check_space(const SpaceSpec& spec);

/// Finite filtered probability space: outcomes, a time grid and a refining
/// sequence of partitions. Immutable once built.
class FilteredSpace {
 public:
  /// Throws InputError carrying the first violation reported by check_space.
  explicit FilteredSpace(SpaceSpec spec);

  std::size_t outcome_count() const { return outcomes_.size(); }
  std::size_t time_count() const { return times_.size(); }
  std::size_t last_time() const { return times_.size() - 1; }
  bool relaxed_terminal() const { return relaxed_terminal_; }

  const std::vector<std::string>& outcome_labels() const { return outcomes_; }
  const std::vector<std::string>& time_labels() const { return times_; }
  const std::string& outcome_label(std::size_t w) const { return outcomes_.at(w); }
  const std::string& time_label(std::size_t t) const { return times_.at(t); }
  std::size_t time_index(std::string_view label) const;
  std::size_t outcome_index(std::string_view label) const;
  /// Time labels read as rationals, when every label parses and the grid is increasing.
  const std::optional<std::vector<Rational>>& numeric_times() const { return numeric_times_; }

  const std::vector<Rational>& probabilities() const { return probabilities_; }
  const Partition& partition(std::size_t t) const;
  /// Cells at t+1 contained in cell `atom` at t.
  const std::vector<std::size_t>& children(std::size_t t, std::size_t atom) const;

  Rational expectation(const RandomVariable& x) const;
  Rational probability(const std::vector<std::size_t>& members) const;

  /// Sub-space on the outcomes of one atom, from time t onward, with
  /// conditional probabilities. `outcome_map` receives the original indices.
  FilteredSpace restrict_to(std::size_t t, std::size_t atom,
                            std::vector<std::size_t>* outcome_map = nullptr) const;

  SpaceSpec spec() const;

 private:
  std::vector<std::string> outcomes_;
  std::vector<Rational> probabilities_;
  std::vector<std::string> times_;
  std::vector<Partition> partitions_;
  std::vector<std::vector<std::vector<std::size_t>>> children_;
  std::optional<std::vector<Rational>> numeric_times_;
  bool relaxed_terminal_ = false;
};

/// Adapted d-dimensional process: one RandomVector per grid time.
class AdaptedProcess {
 public:
  AdaptedProcess() = default;
  /// Throws InputError on shape mismatch or a non-measurable time slice.
  AdaptedProcess(const FilteredSpace& space, std::vector<RandomVector> values);

  std::size_t dim() const { return dim_; }
  std::size_t time_count() const { return values_.size(); }
  const RandomVector& at(std::size_t t) const { return values_.at(t); }
  const Point& value(std::size_t t, std::size_t outcome) const { return values_.at(t)[outcome]; }
  std::vector<RandomVariable> coordinate(std::size_t j) const;

 private:
  std::size_t dim_ = 0;
  std::vector<RandomVector> values_;
};

/// Scalar process given per grid time; adaptedness is checked by `require_adapted`.
using ScalarProcess = std::vector<RandomVariable>;

void require_adapted(const FilteredSpace& space, const ScalarProcess& process);
void require_keyed(const FilteredSpace& space, const RandomVariable& x);

Atom atom_of(const FilteredSpace& space, std::size_t t, std::size_t outcome);
bool is_measurable(const FilteredSpace& space, std::size_t t, const RandomVariable& x);
/// `tau` holds a time index per outcome.
bool is_stopping_time(const FilteredSpace& space, const std::vector<std::size_t>& tau);

/// Shape of an event tree: for each level, the number of children of every
/// node at that level, left to right. Leaves are the outcomes.
struct TreeShape {
  std::vector<std::vector<std::size_t>> children;
};

TreeShape uniform_shape(std::size_t depth, std::size_t branching);
/// Outcome labels w1..wn, time labels 0..N, trivial F_0, uniform probabilities
/// unless given.
FilteredSpace make_tree_space(const TreeShape& shape,
                              std::optional<std::vector<Rational>> probabilities = std::nullopt);

}  // namespace hedgelab
