#pragma once

#include <optional>
#include <vector>

#include "satorder/bouquet.hpp"
#include "satorder/enumeration.hpp"
#include "satorder/verdict.hpp"

namespace satorder {

/// Saturated iff every canonical bouquet pair is skewly topped. Any untopped
/// parallel pair yields one through the merging representation and its alpha
/// collision, so checking canonical pairs suffices. O(n^4), no size guard.
inline SaturationVerdict is_saturated_fast(const Poset& poset) {
  const auto n = poset.size();
  for (ElementId p0 = 0; p0 < n; ++p0)
    for (ElementId p1 = p0 + 1; p1 < n; ++p1) {
      auto pair = canonical_bouquets(poset, p0, p1);
      if (!pair) continue;
      if (!skewly_topping(poset, pair->first, pair->second))
        return SaturationVerdict::no(UntoppedPair{std::move(pair->first), std::move(pair->second)});
    }
  return SaturationVerdict::yes();
}

namespace detail {

struct MaskBouquet {
  Mask members;
  Mask lower;
  ElementId max;
  Mask touches;       // elements comparable with some member
  Mask above_max;     // m >= max
  Mask above_lower;   // m >= every lower member
};

/// Every bouquet (optionally only fans), ordered by (max, lower mask).
inline std::vector<MaskBouquet> all_bouquets(const Poset& poset, bool fans_only) {
  const RelationMasks rel(poset);
  const auto n = poset.size();
  const Mask everything = n == 64 ? ~Mask{0} : (bit(n) - 1);
  std::vector<MaskBouquet> out;
  for (ElementId top = 0; top < n; ++top) {
    const Mask strictly_below = rel.down[top] & ~bit(top);
    // Ascending enumeration of the non-empty submasks.
    for (Mask sub = (~strictly_below + 1) & strictly_below; sub != 0;
         sub = ((sub | ~strictly_below) + 1) & strictly_below) {
      if (fans_only) {
        bool antichain = true;
        for (Mask rest = sub; rest != 0 && antichain; rest &= rest - 1) {
          const auto e = static_cast<ElementId>(__builtin_ctzll(rest));
          antichain = (rel.comparable[e] & sub) == bit(e);
        }
        if (!antichain) continue;
      }
      MaskBouquet b{sub | bit(top), sub, top, 0, rel.up[top], everything};
      for (Mask rest = b.members; rest != 0; rest &= rest - 1)
        b.touches |= rel.comparable[__builtin_ctzll(rest)];
      for (Mask rest = sub; rest != 0; rest &= rest - 1)
        b.above_lower &= rel.up[__builtin_ctzll(rest)];
      out.push_back(b);
    }
  }
  return out;
}

inline Bouquet to_bouquet(const MaskBouquet& b) { return Bouquet{elements_of(b.members), b.max}; }

/// First parallel pair (in enumeration order) that no element skewly tops.
inline std::optional<UntoppedPair> first_untopped(const std::vector<MaskBouquet>& bouquets) {
  for (std::size_t i = 0; i < bouquets.size(); ++i) {
    const auto& b0 = bouquets[i];
    for (std::size_t j = i + 1; j < bouquets.size(); ++j) {
      const auto& b1 = bouquets[j];
      if (b0.touches & b1.members) continue;
      const Mask toppers = (b0.above_max & ~b1.above_max & b1.above_lower) |
                           (b1.above_max & ~b0.above_max & b0.above_lower);
      if (toppers == 0) return UntoppedPair{to_bouquet(b0), to_bouquet(b1)};
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Literal check over every pair of parallel bouquets. Throws errc::too_large
/// above exhaustive_limit elements.
inline SaturationVerdict is_saturated_exhaustive(const Poset& poset) {
  detail::require_exhaustive_size(poset);
  if (auto w = detail::first_untopped(detail::all_bouquets(poset, false)))
    return SaturationVerdict::no(std::move(*w));
  return SaturationVerdict::yes();
}

/// Every two parallel fans are skewly topped. Same size guard as above.
inline bool check_fan_criterion(const Poset& poset) {
  detail::require_exhaustive_size(poset);
  return !detail::first_untopped(detail::all_bouquets(poset, true)).has_value();
}

}  // namespace satorder
