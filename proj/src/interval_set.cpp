#include "cflab/interval_set.hpp"

#include <algorithm>
#include <cmath>

#include "cflab/errors.hpp"

namespace cflab {

IntervalSet::IntervalSet(std::initializer_list<Interval> intervals)
    : intervals_(intervals) {
  normalize();
}

IntervalSet::IntervalSet(std::vector<Interval> intervals)
    : intervals_(std::move(intervals)) {
  normalize();
}

void IntervalSet::normalize() {
  for (const auto& iv : intervals_) {
    if (!(std::isfinite(iv.lo) && std::isfinite(iv.hi))) {
      throw validation_error("interval endpoints must be finite");
    }
  }
  // Drop degenerate (measure-zero) pieces before merging.
  std::erase_if(intervals_, [](const Interval& iv) { return iv.hi - iv.lo <= 0.0; });
  std::sort(intervals_.begin(), intervals_.end(),
            [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  std::vector<Interval> merged;
  merged.reserve(intervals_.size());
  for (const auto& iv : intervals_) {
    if (!merged.empty() && iv.lo <= merged.back().hi + merge_tol) {
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    } else {
      merged.push_back(iv);
    }
  }
  intervals_ = std::move(merged);
}

double IntervalSet::measure() const noexcept {
  double total = 0.0;
  for (const auto& iv : intervals_) total += iv.hi - iv.lo;
  return total;
}

bool IntervalSet::contains_point(double x) const noexcept {
  auto it = std::upper_bound(
      intervals_.begin(), intervals_.end(), x,
      [](double v, const Interval& iv) { return v < iv.lo; });
  if (it == intervals_.begin()) return false;
  --it;
  return x > it->lo && x < it->hi;
}

bool IntervalSet::contains_interval(double lo, double hi, double tol) const noexcept {
  for (const auto& iv : intervals_) {
    if (iv.lo <= lo + tol && hi - tol <= iv.hi) return true;
  }
  return false;
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<Interval> all = intervals_;
  all.insert(all.end(), other.intervals_.begin(), other.intervals_.end());
  return IntervalSet(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<Interval> out;
  auto a = intervals_.begin();
  auto b = other.intervals_.begin();
  while (a != intervals_.end() && b != other.intervals_.end()) {
    const double lo = std::max(a->lo, b->lo);
    const double hi = std::min(a->hi, b->hi);
    if (hi > lo) out.push_back({lo, hi});
    if (a->hi < b->hi) {
      ++a;
    } else {
      ++b;
    }
  }
  return IntervalSet(std::move(out));
}

double measure(const IntervalSet& s) { return s.measure(); }

IntervalSet project_mod(const IntervalSet& s, double a) {
  if (!(a > 0.0)) throw validation_error("project_mod: period must be positive");
  std::vector<IntervalSet::Interval> pieces;
  for (const auto& iv : s.intervals()) {
    if (iv.hi - iv.lo >= a) return IntervalSet({{0.0, a}});
    const auto k_lo = static_cast<long long>(std::floor(iv.lo / a));
    const auto k_hi = static_cast<long long>(std::floor(iv.hi / a));
    for (long long k = k_lo; k <= k_hi; ++k) {
      const double shift = static_cast<double>(k) * a;
      const double lo = std::max(iv.lo, shift) - shift;
      const double hi = std::min(iv.hi, shift + a) - shift;
      if (hi > lo) pieces.push_back({std::clamp(lo, 0.0, a), std::clamp(hi, 0.0, a)});
    }
  }
  return IntervalSet(std::move(pieces));
}

IntervalSet complement_in_window(const IntervalSet& s, double lo, double hi) {
  if (!(lo < hi)) throw validation_error("complement_in_window: requires lo < hi");
  std::vector<IntervalSet::Interval> out;
  double cursor = lo;
  for (const auto& iv : s.intervals()) {
    if (iv.hi <= lo) continue;
    if (iv.lo >= hi) break;
    if (iv.lo > cursor) out.push_back({cursor, std::min(iv.lo, hi)});
    cursor = std::max(cursor, iv.hi);
    if (cursor >= hi) break;
  }
  if (cursor < hi) out.push_back({cursor, hi});
  return IntervalSet(std::move(out));
}

}  // namespace cflab
