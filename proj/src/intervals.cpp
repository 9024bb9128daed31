#include "intervals.hpp"

#include <algorithm>

namespace selfsim {

IntervalUnion IntervalUnion::of(std::vector<Interval> parts) {
  for (const auto& part : parts) {
    if (part.lo > part.hi) {
      throw Error(ErrorCode::Internal, "interval with lo > hi");
    }
  }
  std::sort(parts.begin(), parts.end(),
            [](const Interval& a, const Interval& b) {
              int c = cmp(a.lo, b.lo);
              return c != 0 ? c < 0 : a.hi < b.hi;
            });
  IntervalUnion out;
  for (auto& part : parts) {
    if (!out.parts_.empty() && part.lo <= out.parts_.back().hi) {
      if (part.hi > out.parts_.back().hi) {
        out.parts_.back().hi = std::move(part.hi);
      }
    } else {
      out.parts_.push_back(std::move(part));
    }
  }
  return out;
}

Rational IntervalUnion::total_length() const {
  Rational total(0);
  for (const auto& part : parts_) total += part.hi - part.lo;
  return total;
}

bool IntervalUnion::contains(const Rational& lo, const Rational& hi) const {
  if (lo > hi) {
    throw Error(ErrorCode::Internal, "window with lo > hi");
  }
  // The window is connected, so it must sit inside a single merged part.
  auto it = std::upper_bound(parts_.begin(), parts_.end(), lo,
                             [](const Rational& v, const Interval& part) {
                               return v < part.lo;
                             });
  if (it == parts_.begin()) return false;
  --it;
  return lo >= it->lo && hi <= it->hi;
}

IntervalUnion IntervalUnion::translated(const Rational& offset) const {
  IntervalUnion out;
  out.parts_.reserve(parts_.size());
  for (const auto& part : parts_) {
    out.parts_.push_back({part.lo + offset, part.hi + offset});
  }
  return out;
}

Rational overlap_length(const IntervalUnion& a, const IntervalUnion& b) {
  Rational total(0);
  std::size_t i = 0, j = 0;
  const auto& pa = a.parts();
  const auto& pb = b.parts();
  while (i < pa.size() && j < pb.size()) {
    const Rational lo = std::max(pa[i].lo, pb[j].lo);
    const Rational hi = std::min(pa[i].hi, pb[j].hi);
    if (hi > lo) total += hi - lo;
    if (pa[i].hi < pb[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return total;
}

}  // namespace selfsim
