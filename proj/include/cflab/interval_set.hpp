#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

namespace cflab {

// Finite union of bounded open intervals, kept sorted and pairwise
// disjoint.  Single points are Lebesgue-null and never stored; endpoint
// coincidences within merge_tol are merged so the measure of a union is
// never undercounted.
class IntervalSet {
public:
  struct Interval {
    double lo;
    double hi;
  };

  static constexpr double merge_tol = 1e-12;

  IntervalSet() = default;
  IntervalSet(std::initializer_list<Interval> intervals);
  explicit IntervalSet(std::vector<Interval> intervals);

  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  bool empty() const noexcept { return intervals_.empty(); }
  std::size_t size() const noexcept { return intervals_.size(); }

  double measure() const noexcept;

  // Strict interior membership; endpoints are outside.
  bool contains_point(double x) const noexcept;

  // True when [lo, hi] sits inside a single component, with slack tol on
  // each endpoint.
  bool contains_interval(double lo, double hi, double tol = merge_tol) const noexcept;

  // Hull endpoints; require !empty().
  double lo() const { return intervals_.front().lo; }
  double hi() const { return intervals_.back().hi; }

  IntervalSet unite(const IntervalSet& other) const;
  IntervalSet intersect(const IntervalSet& other) const;

private:
  std::vector<Interval> intervals_;

  void normalize();
};

double measure(const IntervalSet& s);

// Image of s under the quotient map onto [0, a): every input interval is
// split at multiples of a, translated into [0, a), and the pieces unioned.
// measure(result) <= min(measure(s), a).  Requires a > 0 and s bounded.
IntervalSet project_mod(const IntervalSet& s, double a);

// [lo, hi) minus s, as an interval set.  Requires lo < hi.
IntervalSet complement_in_window(const IntervalSet& s, double lo, double hi);

}  // namespace cflab
