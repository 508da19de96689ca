#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "satorder/representation.hpp"
#include "satorder/verdict.hpp"

namespace satorder {

/// Brute-force checkers refuse posets above this size.
inline constexpr std::size_t exhaustive_limit = 12;

namespace detail {

inline void require_exhaustive_size(const Poset& poset) {
  if (poset.size() > exhaustive_limit)
    throw error(errc::too_large, "exhaustive search is limited to " +
                                     std::to_string(exhaustive_limit) + " elements, got " +
                                     std::to_string(poset.size()));
}

/// Renumbers values in order of first use by element index.
inline AlphaMap first_use_canonical(const AlphaMap& alpha) {
  std::vector<Point> relabel(alpha.values.size() + 1, static_cast<Point>(-1));
  AlphaMap out;
  Point next = 0;
  for (Point v : alpha.values) {
    if (v >= relabel.size()) relabel.resize(v + 1, static_cast<Point>(-1));
    if (relabel[v] == static_cast<Point>(-1)) relabel[v] = next++;
    out.values.push_back(relabel[v]);
  }
  return out;
}

}  // namespace detail

/// Visits every alpha map into [0, n) whose composed representation
/// phi(p) = {alpha(p') : p' <= p} is a parsimonious set representation, one per
/// relabeling of the ground set, in first-use canonical form. Parsimony forces
/// phi to have this shape, so nothing is missed.
///
/// Backtracks over the smallest-index linear extension with restricted-growth
/// values along that extension; a branch is cut as soon as alpha(p) repeats a
/// point below p or phi(p) fails against an already placed element.
/// The visitor returns false to stop early.
inline void for_each_parsimonious(const Poset& poset,
                                  const std::function<bool(const AlphaMap&)>& visit) {
  detail::require_exhaustive_size(poset);
  const auto n = poset.size();
  const auto order = poset.linear_extension();
  std::vector<std::vector<ElementId>> below(n);
  for (ElementId p = 0; p < n; ++p) below[p] = poset.strict_downset(p);

  std::vector<detail::Mask> phi(n, 0);
  AlphaMap alpha{std::vector<Point>(n, 0)};
  bool stop = false;

  std::function<void(std::size_t, Point)> place = [&](std::size_t depth, Point used) {
    if (stop) return;
    if (depth == n) {
      if (!visit(detail::first_use_canonical(alpha))) stop = true;
      return;
    }
    const ElementId p = order[depth];
    detail::Mask under = 0;
    for (ElementId q : below[p]) under |= phi[q];
    const Point limit = std::min<Point>(used + 1, n);
    for (Point v = 0; v < limit && !stop; ++v) {
      if (under & detail::bit(v)) continue;
      const detail::Mask mine = under | detail::bit(v);
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const ElementId q = order[k];
        if (poset.less(q, p)) continue;  // proper inclusion holds by construction
        const bool q_in_p = (phi[q] & ~mine) == 0;
        const bool p_in_q = (mine & ~phi[q]) == 0;
        ok = !q_in_p && !p_in_q;
      }
      if (!ok) continue;
      phi[p] = mine;
      alpha.values[p] = v;
      place(depth + 1, std::max<Point>(used, v + 1));
    }
  };
  place(0, 0);
}

/// All canonical parsimonious alpha maps, sorted lexicographically.
inline std::vector<AlphaMap> enumerate_parsimonious(const Poset& poset) {
  std::vector<AlphaMap> out;
  for_each_parsimonious(poset, [&](const AlphaMap& a) {
    out.push_back(a);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// Saturation straight from the definition: every parsimonious representation has
/// an injective alpha. Witness is the first non-injective canonical map.
inline SaturationVerdict is_saturated_oracle(const Poset& poset) {
  for (auto& alpha : enumerate_parsimonious(poset)) {
    if (!alpha.injective()) {
      auto rep = rep_from_alpha(poset, alpha);
      return SaturationVerdict::no(NonInjectiveRep{std::move(alpha), std::move(rep)});
    }
  }
  return SaturationVerdict::yes();
}

}  // namespace satorder
