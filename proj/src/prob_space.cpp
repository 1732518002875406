#include "hedgelab/prob_space.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hedgelab {

// ---------------------------------------------------------------- RandomVariable

RandomVariable& RandomVariable::operator+=(const RandomVariable& other) {
  if (other.size() != size()) throw InputError("random variable size mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

RandomVariable& RandomVariable::operator-=(const RandomVariable& other) {
  if (other.size() != size()) throw InputError("random variable size mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

RandomVariable& RandomVariable::operator*=(const Rational& factor) {
  for (auto& v : values_) v *= factor;
  return *this;
}

RandomVariable operator*(const RandomVariable& a, const RandomVariable& b) {
  if (a.size() != b.size()) throw InputError("random variable size mismatch");
  RandomVariable out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

RandomVariable positive_part(const RandomVariable& x) {
  RandomVariable out = x;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].sign() < 0) out[i] = 0;
  }
  return out;
}

RandomVariable pointwise_min(const RandomVariable& a, const RandomVariable& b) {
  if (a.size() != b.size()) throw InputError("random variable size mismatch");
  RandomVariable out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

RandomVariable pointwise_max(const RandomVariable& a, const RandomVariable& b) {
  if (a.size() != b.size()) throw InputError("random variable size mismatch");
  RandomVariable out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

RandomVariable capped(const RandomVariable& x, const Rational& cap) {
  RandomVariable out = x;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] > cap) out[i] = cap;
  }
  return out;
}

bool pointwise_le(const RandomVariable& a, const RandomVariable& b) {
  if (a.size() != b.size()) throw InputError("random variable size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

RandomVariable indicator(std::size_t outcomes, const std::vector<std::size_t>& members) {
  RandomVariable out(outcomes);
  for (auto w : members) out[w] = 1;
  return out;
}

// ---------------------------------------------------------------- RandomVector

RandomVector::RandomVector(std::vector<Point> points, std::size_t dim)
    : dim_(dim), points_(std::move(points)) {
  for (const auto& p : points_) {
    if (p.size() != dim_) throw InputError("random vector point has wrong dimension");
  }
}

RandomVariable RandomVector::coordinate(std::size_t j) const {
  RandomVariable out(points_.size());
  for (std::size_t w = 0; w < points_.size(); ++w) out[w] = points_[w].at(j);
  return out;
}

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<std::vector<std::size_t>> cells, std::size_t outcomes)
    : cells_(std::move(cells)), cell_of_(outcomes, outcomes) {
  for (auto& cell : cells_) {
    if (cell.empty()) throw InputError("partition has an empty cell");
    std::sort(cell.begin(), cell.end());
  }
  std::sort(cells_.begin(), cells_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    for (auto w : cells_[c]) {
      if (w >= outcomes) throw InputError("partition refers to an unknown outcome");
      if (cell_of_[w] != outcomes) throw InputError("partition cells overlap");
      cell_of_[w] = c;
    }
  }
  for (auto c : cell_of_) {
    if (c == outcomes) throw InputError("partition does not cover every outcome");
  }
}

Partition Partition::trivial(std::size_t outcomes) {
  std::vector<std::size_t> all(outcomes);
  std::iota(all.begin(), all.end(), std::size_t{0});
  return Partition({all}, outcomes);
}

Partition Partition::singletons(std::size_t outcomes) {
  std::vector<std::vector<std::size_t>> cells;
  for (std::size_t w = 0; w < outcomes; ++w) cells.push_back({w});
  return Partition(std::move(cells), outcomes);
}

bool Partition::is_measurable(const RandomVariable& x) const {
  for (const auto& cell : cells_) {
    for (auto w : cell) {
      if (x[w] != x[cell.front()]) return false;
    }
  }
  return true;
}

bool Partition::is_measurable(const RandomVector& x) const {
  for (const auto& cell : cells_) {
    for (auto w : cell) {
      if (x[w] != x[cell.front()]) return false;
    }
  }
  return true;
}

bool Partition::refines(const Partition& coarser) const {
  for (const auto& cell : cells_) {
    const auto parent = coarser.cell_of(cell.front());
    for (auto w : cell) {
      if (coarser.cell_of(w) != parent) return false;
    }
  }
  return true;
}

bool Partition::contains_event(const std::vector<bool>& event) const {
  for (const auto& cell : cells_) {
    for (auto w : cell) {
      if (event[w] != event[cell.front()]) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- FilteredSpace

namespace {

std::string describe_cell(const SpaceSpec& spec, const std::vector<std::size_t>& cell) {
  std::string out = "{";
  for (std::size_t i = 0; i < cell.size(); ++i) {
    if (i) out += ",";
    out += cell[i] < spec.outcomes.size() ? spec.outcomes[cell[i]] : "#" + std::to_string(cell[i]);
  }
  return out + "}";
}

}  // namespace

std::vector<std::string> check_space(const SpaceSpec& spec) {
  std::vector<std::string> problems;
  const std::size_t n = spec.outcomes.size();
  if (n == 0) problems.push_back("no outcomes");
  if (std::set<std::string>(spec.outcomes.begin(), spec.outcomes.end()).size() != n) {
    problems.push_back("outcome labels are not unique");
  }
  if (spec.probabilities.size() != n) {
    problems.push_back("expected " + std::to_string(n) + " probabilities, got " +
                       std::to_string(spec.probabilities.size()));
  } else {
    Rational total = 0;
    for (std::size_t w = 0; w < n; ++w) {
      if (spec.probabilities[w].sign() <= 0) {
        problems.push_back("probability of outcome " + spec.outcomes[w] + " is " +
                           format_rational(spec.probabilities[w]) + ", must be positive");
      }
      total += spec.probabilities[w];
    }
    if (total != 1) {
      problems.push_back("probabilities sum to " + pretty_rational(total) + " ≠ 1");
    }
  }
  if (spec.times.empty()) problems.push_back("no times");
  if (std::set<std::string>(spec.times.begin(), spec.times.end()).size() != spec.times.size()) {
    problems.push_back("time labels are not unique");
  }
  if (spec.partitions.size() != spec.times.size()) {
    problems.push_back("expected " + std::to_string(spec.times.size()) + " partitions, got " +
                       std::to_string(spec.partitions.size()));
    return problems;
  }

  std::vector<std::optional<Partition>> parsed(spec.times.size());
  for (std::size_t t = 0; t < spec.times.size(); ++t) {
    const auto& where = "partition at time " + spec.times[t];
    std::vector<int> seen(n, 0);
    bool ok = true;
    for (const auto& cell : spec.partitions[t]) {
      if (cell.empty()) {
        problems.push_back(where + " has an empty atom");
        ok = false;
      }
      for (auto w : cell) {
        if (w >= n) {
          problems.push_back(where + " refers to an unknown outcome");
          ok = false;
        } else if (seen[w]++) {
          problems.push_back(where + ": outcome " + spec.outcomes[w] + " lies in two atoms");
          ok = false;
        }
      }
    }
    for (std::size_t w = 0; w < n; ++w) {
      if (!seen[w]) {
        problems.push_back(where + ": outcome " + spec.outcomes[w] + " is not covered");
        ok = false;
      }
    }
    if (ok && n > 0) parsed[t] = Partition(spec.partitions[t], n);
  }

  for (std::size_t t = 1; t < spec.times.size(); ++t) {
    if (!parsed[t] || !parsed[t - 1]) continue;
    for (const auto& cell : parsed[t]->cells()) {
      const auto parent = parsed[t - 1]->cell_of(cell.front());
      for (auto w : cell) {
        if (parsed[t - 1]->cell_of(w) != parent) {
          problems.push_back("partition at time " + spec.times[t] + " does not refine time " +
                             spec.times[t - 1] + ": atom " + describe_cell(spec, cell) +
                             " is not contained in a single atom");
          break;
        }
      }
    }
  }

  if (!spec.relaxed_terminal && !spec.times.empty() && parsed.back() &&
      parsed.back()->size() != n) {
    problems.push_back("terminal partition at time " + spec.times.back() +
                       " is not the singleton partition (set relaxed_terminal to allow)");
  }
  return problems;
}

FilteredSpace::FilteredSpace(SpaceSpec spec) {
  const auto problems = check_space(spec);
  if (!problems.empty()) throw InputError(problems.front());
  const std::size_t n = spec.outcomes.size();
  outcomes_ = std::move(spec.outcomes);
  probabilities_ = std::move(spec.probabilities);
  times_ = std::move(spec.times);
  relaxed_terminal_ = spec.relaxed_terminal;
  for (auto& cells : spec.partitions) partitions_.emplace_back(std::move(cells), n);

  children_.resize(times_.size());
  for (std::size_t t = 0; t < times_.size(); ++t) {
    children_[t].resize(partitions_[t].size());
    if (t + 1 == times_.size()) continue;
    for (std::size_t c = 0; c < partitions_[t + 1].size(); ++c) {
      const auto parent = partitions_[t].cell_of(partitions_[t + 1].cell(c).front());
      children_[t][parent].push_back(c);
    }
  }

  std::vector<Rational> numeric;
  try {
    for (const auto& label : times_) numeric.push_back(parse_rational(label));
    if (std::adjacent_find(numeric.begin(), numeric.end(), std::greater_equal<>()) ==
        numeric.end()) {
      numeric_times_ = std::move(numeric);
    }
  } catch (const InputError&) {
  }
}

std::size_t FilteredSpace::time_index(std::string_view label) const {
  for (std::size_t t = 0; t < times_.size(); ++t) {
    if (times_[t] == label) return t;
  }
  throw InputError("unknown time \"" + std::string(label) + "\"");
}

std::size_t FilteredSpace::outcome_index(std::string_view label) const {
  for (std::size_t w = 0; w < outcomes_.size(); ++w) {
    if (outcomes_[w] == label) return w;
  }
  throw InputError("unknown outcome \"" + std::string(label) + "\"");
}

const Partition& FilteredSpace::partition(std::size_t t) const {
  if (t >= partitions_.size()) throw InputError("time index " + std::to_string(t) + " out of range");
  return partitions_[t];
}

const std::vector<std::size_t>& FilteredSpace::children(std::size_t t, std::size_t atom) const {
  return children_.at(t).at(atom);
}

Rational FilteredSpace::expectation(const RandomVariable& x) const {
  require_keyed(*this, x);
  Rational sum = 0;
  for (std::size_t w = 0; w < x.size(); ++w) sum += probabilities_[w] * x[w];
  return sum;
}

Rational FilteredSpace::probability(const std::vector<std::size_t>& members) const {
  Rational sum = 0;
  for (auto w : members) sum += probabilities_.at(w);
  return sum;
}

FilteredSpace FilteredSpace::restrict_to(std::size_t t, std::size_t atom,
                                         std::vector<std::size_t>* outcome_map) const {
  const auto& members = partition(t).cell(atom);
  std::vector<std::size_t> local(outcome_count(), outcome_count());
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = i;

  SpaceSpec sub;
  const Rational mass = probability(members);
  for (auto w : members) {
    sub.outcomes.push_back(outcomes_[w]);
    sub.probabilities.push_back(probabilities_[w] / mass);
  }
  sub.relaxed_terminal = relaxed_terminal_;
  for (std::size_t u = t; u < times_.size(); ++u) {
    sub.times.push_back(times_[u]);
    std::vector<std::vector<std::size_t>> cells;
    for (const auto& cell : partitions_[u].cells()) {
      if (local[cell.front()] == outcome_count()) continue;
      std::vector<std::size_t> mapped;
      for (auto w : cell) mapped.push_back(local[w]);
      cells.push_back(std::move(mapped));
    }
    sub.partitions.push_back(std::move(cells));
  }
  if (outcome_map) *outcome_map = members;
  return FilteredSpace(std::move(sub));
}

SpaceSpec FilteredSpace::spec() const {
  SpaceSpec out;
  out.outcomes = outcomes_;
  out.probabilities = probabilities_;
  out.times = times_;
  out.relaxed_terminal = relaxed_terminal_;
  for (const auto& p : partitions_) out.partitions.push_back(p.cells());
  return out;
}

// ---------------------------------------------------------------- AdaptedProcess

AdaptedProcess::AdaptedProcess(const FilteredSpace& space, std::vector<RandomVector> values)
    : values_(std::move(values)) {
  if (values_.size() != space.time_count()) {
    throw InputError("process has " + std::to_string(values_.size()) + " time slices, expected " +
                     std::to_string(space.time_count()));
  }
  dim_ = values_.front().dim();
  for (std::size_t t = 0; t < values_.size(); ++t) {
    if (values_[t].size() != space.outcome_count() || values_[t].dim() != dim_) {
      throw InputError("process slice at time " + space.time_label(t) + " has the wrong shape");
    }
    if (!space.partition(t).is_measurable(values_[t])) {
      throw InputError("process is not adapted at time " + space.time_label(t));
    }
  }
}

std::vector<RandomVariable> AdaptedProcess::coordinate(std::size_t j) const {
  std::vector<RandomVariable> out;
  for (const auto& slice : values_) out.push_back(slice.coordinate(j));
  return out;
}

void require_keyed(const FilteredSpace& space, const RandomVariable& x) {
  if (x.size() != space.outcome_count()) {
    throw InputError("random variable has " + std::to_string(x.size()) + " values, space has " +
                     std::to_string(space.outcome_count()) + " outcomes");
  }
}

void require_adapted(const FilteredSpace& space, const ScalarProcess& process) {
  if (process.size() != space.time_count()) throw InputError("process length differs from grid");
  for (std::size_t t = 0; t < process.size(); ++t) {
    require_keyed(space, process[t]);
    if (!space.partition(t).is_measurable(process[t])) {
      throw InputError("process is not adapted at time " + space.time_label(t));
    }
  }
}

// ---------------------------------------------------------------- operations

Atom atom_of(const FilteredSpace& space, std::size_t t, std::size_t outcome) {
  if (t >= space.time_count()) throw InputError("unknown time index " + std::to_string(t));
  if (outcome >= space.outcome_count()) {
    throw InputError("unknown outcome index " + std::to_string(outcome));
  }
  const auto& p = space.partition(t);
  const auto index = p.cell_of(outcome);
  return Atom{t, index, p.cell(index)};
}

bool is_measurable(const FilteredSpace& space, std::size_t t, const RandomVariable& x) {
  require_keyed(space, x);
  return space.partition(t).is_measurable(x);
}

bool is_stopping_time(const FilteredSpace& space, const std::vector<std::size_t>& tau) {
  if (tau.size() != space.outcome_count()) throw InputError("stopping time has wrong length");
  for (auto v : tau) {
    if (v >= space.time_count()) throw InputError("stopping time value outside the grid");
  }
  for (std::size_t t = 0; t < space.time_count(); ++t) {
    std::vector<bool> event(tau.size());
    for (std::size_t w = 0; w < tau.size(); ++w) event[w] = tau[w] <= t;
    if (!space.partition(t).contains_event(event)) return false;
  }
  return true;
}

TreeShape uniform_shape(std::size_t depth, std::size_t branching) {
  TreeShape shape;
  std::size_t nodes = 1;
  for (std::size_t k = 0; k < depth; ++k) {
    shape.children.emplace_back(nodes, branching);
    nodes *= branching;
  }
  return shape;
}

FilteredSpace make_tree_space(const TreeShape& shape,
                              std::optional<std::vector<Rational>> probabilities) {
  // Leaves of a level-order tree are contiguous ranges under every node.
  std::vector<std::vector<std::size_t>> widths;  // per level, leaves under each node
  std::vector<std::size_t> level_nodes{1};
  for (const auto& level : shape.children) {
    if (level.size() != level_nodes.back()) throw InputError("tree shape level has wrong length");
    std::size_t next = 0;
    for (auto c : level) {
      if (c == 0) throw InputError("tree node without children before the last level");
      next += c;
    }
    level_nodes.push_back(next);
  }
  const std::size_t depth = shape.children.size();
  widths.resize(depth + 1);
  widths[depth].assign(level_nodes[depth], 1);
  for (std::size_t k = depth; k-- > 0;) {
    std::size_t child = 0;
    for (auto c : shape.children[k]) {
      std::size_t w = 0;
      for (std::size_t i = 0; i < c; ++i) w += widths[k + 1][child++];
      widths[k].push_back(w);
    }
  }

  SpaceSpec spec;
  const std::size_t n = level_nodes[depth];
  for (std::size_t w = 0; w < n; ++w) spec.outcomes.push_back("w" + std::to_string(w + 1));
  spec.probabilities = probabilities ? *probabilities : std::vector<Rational>(n, Rational(1, n));
  for (std::size_t k = 0; k <= depth; ++k) {
    spec.times.push_back(std::to_string(k));
    std::vector<std::vector<std::size_t>> cells;
    std::size_t start = 0;
    for (auto width : widths[k]) {
      std::vector<std::size_t> cell(width);
      std::iota(cell.begin(), cell.end(), start);
      start += width;
      cells.push_back(std::move(cell));
    }
    spec.partitions.push_back(std::move(cells));
  }
  return FilteredSpace(std::move(spec));
}

}  // namespace hedgelab
