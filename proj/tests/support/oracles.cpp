#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace hedgelab::oracle {

RandomVariable esssup(const FilteredSpace& space, std::size_t t, const RandomVariable& x) {
  const auto& p = space.partition(t);
  RandomVariable out = x;
  for (std::size_t w = 0; w < x.size(); ++w) {
    for (std::size_t v = 0; v < x.size(); ++v) {
      if (p.cell_of(v) == p.cell_of(w) && x[v] > out[w]) out[w] = x[v];
    }
  }
  return out;
}

namespace {

// Unique solution of a (possibly tall) system with full column rank.
std::optional<std::vector<Rational>> solve_full_rank(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) return std::nullopt;  // rank deficient
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational inv = 1 / a[r][c];
    for (auto& v : a[r]) v *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!b[i].is_zero()) return std::nullopt;
  }
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             const std::function<bool(const std::vector<std::size_t>&)>& visit, bool& done) {
  if (done) return;
  if (cur.size() == k) {
    done = visit(cur);
    return;
  }
  for (std::size_t i = start; i < n && !done; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, visit, done);
    cur.pop_back();
  }
}

}  // namespace

std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  return solve_full_rank(std::move(a), std::move(b));
}

bool in_hull(const Point& point, const std::vector<Point>& cloud) {
  const std::size_t d = point.size();
  bool found = false;
  for (std::size_t k = 1; k <= std::min(d + 1, cloud.size()) && !found; ++k) {
    std::vector<std::size_t> cur;
    subsets(cloud.size(), k, 0, cur,
            [&](const std::vector<std::size_t>& idx) {
              std::vector<std::vector<Rational>> a(d + 1, std::vector<Rational>(k));
              std::vector<Rational> b(d + 1);
              for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t j = 0; j < k; ++j) a[i][j] = cloud[idx[j]][i];
                b[i] = point[i];
              }
              for (std::size_t j = 0; j < k; ++j) a[d][j] = 1;
              b[d] = 1;
              const auto lambda = solve_full_rank(std::move(a), std::move(b));
              return lambda && std::all_of(lambda->begin(), lambda->end(), [](const Rational& v) { return v.sign() >= 0; });
            },
            found);
  }
  return found;
}

std::optional<Point> local_arbitrage(const std::vector<Point>& increments) {
  if (increments.empty()) return std::nullopt;
  const std::size_t d = increments.front().size();
  if (d == 0) return std::nullopt;
  std::vector<Point> base;
  for (std::size_t j = 0; j < d; ++j) {
    Point e(d);
    e[j] = 1;
    base.push_back(e);
  }
  for (const auto& s : increments) {
    base.push_back(s);
    if (d == 2) base.push_back(Point{-s[1], s[0]});
  }
  std::vector<Point> candidates;
  for (const auto& b : base) {
    Point neg = b;
    for (auto& v : neg) v = -v;
    candidates.push_back(b);
    candidates.push_back(std::move(neg));
  }
  const std::size_t singles = candidates.size();
  for (std::size_t i = 0; i < singles; ++i) {
    for (std::size_t j = i + 1; j < singles; ++j) {
      Point sum(d);
      for (std::size_t k = 0; k < d; ++k) sum[k] = candidates[i][k] + candidates[j][k];
      candidates.push_back(std::move(sum));
    }
  }
  for (const auto& theta : candidates) {
    bool nonneg = true, positive = false;
    for (const auto& s : increments) {
      const Rational g = dot(theta, s);
      if (g.sign() < 0) nonneg = false;
      if (g.sign() > 0) positive = true;
    }
    if (nonneg && positive) return theta;
  }
  return std::nullopt;
}

bool has_arbitrage(const MarketModel& model) {
  const auto& space = model.space();
  for (std::size_t k = 0; k < space.last_time(); ++k) {
    const auto& cells = space.partition(k).cells();
    for (std::size_t a = 0; a < cells.size(); ++a) {
      const auto& here = model.price(k, cells[a].front());
      std::vector<Point> inc;
      for (auto c : space.children(k, a)) {
        const auto& next = model.price(k + 1, space.partition(k + 1).cell(c).front());
        Point s(here.size());
        for (std::size_t j = 0; j < s.size(); ++j) s[j] = next[j] - here[j];
        inc.push_back(std::move(s));
      }
      if (local_arbitrage(inc)) return true;
    }
  }
  return false;
}

bool aip(const MarketModel& model) {
  const auto& space = model.space();
  for (std::size_t k = 0; k < space.last_time(); ++k) {
    const auto& cells = space.partition(k).cells();
    for (std::size_t a = 0; a < cells.size(); ++a) {
      std::vector<Point> cloud;
      for (auto c : space.children(k, a)) cloud.push_back(model.price(k + 1, space.partition(k + 1).cell(c).front()));
      if (!in_hull(model.price(k, cells[a].front()), cloud)) return false;
    }
  }
  return true;
}

std::optional<Rational> one_step_price(const std::vector<Rational>& s, const std::vector<Rational>& v) {
  const bool all_up = std::all_of(s.begin(), s.end(), [](const Rational& x) { return x.sign() > 0; });
  const bool all_down = std::all_of(s.begin(), s.end(), [](const Rational& x) { return x.sign() < 0; });
  if (all_up || all_down) return std::nullopt;
  auto f = [&](const Rational& theta) {
    Rational best = v[0] - theta * s[0];
    for (std::size_t c = 1; c < s.size(); ++c) best = std::max(best, Rational(v[c] - theta * s[c]));
    return best;
  };
  Rational best = f(0);
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (s[a] == s[b]) continue;
      best = std::min(best, f((v[a] - v[b]) / (s[a] - s[b])));
    }
  }
  return best;
}

std::vector<std::vector<std::optional<Rational>>> superhedge_prices(const MarketModel& model,
                                                                    const RandomVariable& claim) {
  const auto& space = model.space();
  std::vector<std::vector<std::optional<Rational>>> pi(space.time_count(),
                                                       std::vector<std::optional<Rational>>(space.outcome_count()));
  for (std::size_t w = 0; w < claim.size(); ++w) pi.back()[w] = claim[w];
  for (std::size_t k = space.last_time(); k-- > 0;) {
    const auto& cells = space.partition(k).cells();
    for (std::size_t a = 0; a < cells.size(); ++a) {
      const Rational here = model.price(k, cells[a].front())[0];
      std::vector<Rational> s, v;
      for (auto c : space.children(k, a)) {
        const auto w = space.partition(k + 1).cell(c).front();
        if (!pi[k + 1][w]) continue;
        s.push_back(model.price(k + 1, w)[0] - here);
        v.push_back(*pi[k + 1][w]);
      }
      const auto p = s.empty() ? std::nullopt : one_step_price(s, v);
      for (auto w : cells[a]) pi[k][w] = p;
    }
  }
  return pi;
}

std::vector<std::vector<Rational>> binomial_emm_values(const MarketModel& model, const RandomVariable& claim) {
  const auto& space = model.space();
  std::vector<std::vector<Rational>> value(space.time_count(), std::vector<Rational>(space.outcome_count()));
  value.back() = claim.values();
  for (std::size_t k = space.last_time(); k-- > 0;) {
    const auto& cells = space.partition(k).cells();
    for (std::size_t a = 0; a < cells.size(); ++a) {
      const auto& kids = space.children(k, a);
      const auto up = space.partition(k + 1).cell(kids.at(0)).front();
      const auto down = space.partition(k + 1).cell(kids.at(1)).front();
      const Rational s = model.price(k, cells[a].front())[0];
      const Rational su = model.price(k + 1, up)[0];
      const Rational sd = model.price(k + 1, down)[0];
      const Rational q = (s - sd) / (su - sd);
      const Rational v = q * value[k + 1][up] + (1 - q) * value[k + 1][down];
      for (auto w : cells[a]) value[k][w] = v;
    }
  }
  return value;
}

std::vector<RandomVariable> unroll(const SequenceSpec& seq, std::size_t terms) {
  std::vector<RandomVariable> out;
  const std::size_t k = seq.prefix.size();
  for (std::size_t n = 1; n <= terms; ++n) {
    if (n <= k) {
      out.push_back(seq.prefix[n - 1]);
      continue;
    }
    const std::size_t j = n - k;
    switch (seq.tail.kind) {
      case SequenceTail::Kind::Constant:
        out.push_back(seq.prefix.back());
        break;
      case SequenceTail::Kind::Periodic: {
        const std::size_t p = seq.tail.period;
        out.push_back(seq.prefix[k - p + (j - 1) % p]);
        break;
      }
      case SequenceTail::Kind::Monotone: {
        RandomVariable x(seq.prefix.back().size());
        for (std::size_t w = 0; w < x.size(); ++w) {
          const auto& last = seq.prefix.back()[w];
          const auto& lim = seq.tail.limit[w];
          if (lim.is_finite()) {
            x[w] = lim.value() + (last - lim.value()) / Rational(static_cast<long>(j + 1));
          } else {
            x[w] = lim.is_minus_infinity() ? last - Rational(static_cast<long>(j)) : last + Rational(static_cast<long>(j));
          }
        }
        out.push_back(std::move(x));
        break;
      }
    }
  }
  return out;
}

}  // namespace hedgelab::oracle
