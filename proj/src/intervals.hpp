#pragma once

#include <vector>

#include "exact.hpp"

namespace selfsim {

struct Interval {
  Rational lo;
  Rational hi;
  bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
};

// Sorted list of disjoint closed intervals; touching parts are merged.
class IntervalUnion {
 public:
  IntervalUnion() = default;
  static IntervalUnion of(std::vector<Interval> parts);

  bool empty() const { return parts_.empty(); }
  const std::vector<Interval>& parts() const { return parts_; }
  Rational total_length() const;
  const Rational& min() const { return parts_.front().lo; }
  const Rational& max() const { return parts_.back().hi; }
  bool contains(const Rational& lo, const Rational& hi) const;
  IntervalUnion translated(const Rational& offset) const;

  bool operator==(const IntervalUnion& o) const { return parts_ == o.parts_; }

 private:
  std::vector<Interval> parts_;
};

// Length of the intersection of two unions.
Rational overlap_length(const IntervalUnion& a, const IntervalUnion& b);

}  // namespace selfsim
