#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "satorder/poset.hpp"

namespace satorder {

/// Integer ranks (left, right) standing for the open rational interval
/// (left - 1/2, right + 1/2). Every point of one interval precedes every point
/// of another exactly when right < other.left.
struct Interval {
  std::int64_t left = 0;
  std::int64_t right = 0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct IntervalRepresentation {
  std::vector<Interval> intervals;
  friend bool operator==(const IntervalRepresentation&, const IntervalRepresentation&) = default;
};

/// No suborder of type 2+2.
inline bool is_interval_order(const Poset& poset) { return !find_two_two(poset).has_value(); }

/// Ranks strict downsets and strict upsets, each a chain under inclusion in an
/// interval order. Throws errc::not_interval_order on a 2+2.
inline IntervalRepresentation interval_representation(const Poset& poset) {
  if (!is_interval_order(poset))
    throw error(errc::not_interval_order, "poset contains a 2+2");
  const auto n = poset.size();
  std::vector<std::vector<ElementId>> downs(n), ups(n);
  for (ElementId p = 0; p < n; ++p) {
    downs[p] = poset.strict_downset(p);
    ups[p] = poset.strict_upset(p);
  }
  // Chains under inclusion, so size orders them.
  auto distinct_sizes = [](const std::vector<std::vector<ElementId>>& sets) {
    std::vector<std::size_t> sizes;
    for (const auto& s : sets) sizes.push_back(s.size());
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    return sizes;
  };
  const auto down_sizes = distinct_sizes(downs);
  const auto up_sizes = distinct_sizes(ups);
  auto rank = [](const std::vector<std::size_t>& sizes, std::size_t s) {
    return static_cast<std::int64_t>(std::lower_bound(sizes.begin(), sizes.end(), s) -
                                     sizes.begin());
  };
  IntervalRepresentation f;
  const auto top_rank = static_cast<std::int64_t>(up_sizes.size()) - 1;
  for (ElementId p = 0; p < n; ++p)
    f.intervals.push_back({rank(down_sizes, downs[p].size()), top_rank - rank(up_sizes, ups[p].size())});
  return f;
}

/// p < p' exactly when f(p) lies wholly before f(p'), and every interval is nonempty.
inline bool verify_interval_representation(const Poset& poset, const IntervalRepresentation& f) {
  const auto n = poset.size();
  if (f.intervals.size() != n) return false;
  for (const auto& iv : f.intervals)
    if (iv.left > iv.right) return false;
  for (ElementId p = 0; p < n; ++p)
    for (ElementId q = 0; q < n; ++q)
      if (poset.less(p, q) != (f.intervals[p].right < f.intervals[q].left)) return false;
  return true;
}

}  // namespace satorder
