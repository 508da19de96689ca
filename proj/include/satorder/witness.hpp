#pragma once

#include <utility>

#include "satorder/bouquet.hpp"
#include "satorder/representation.hpp"

namespace satorder {

/// Ground point that stands for the merged symbol q* in a merging representation.
inline Point merged_point(const Poset& poset) { return poset.size(); }

/// Certificate of non-saturation built from an untopped parallel pair.
///
/// Starts from the principal ideal representation over ground set P + {q*}
/// (q* encoded as point n). Every element above either maximum trades the two
/// maxima for q*, so both maxima get q* as their new point. The maxima's own
/// ground points end up unused.
inline SetRepresentation merging_representation(const Poset& poset, const Bouquet& b0,
                                                const Bouquet& b1) {
  if (!are_parallel(poset, b0, b1))
    throw error(errc::precondition_violated, "bouquets are not parallel");
  if (auto t = skewly_topping(poset, b0, b1))
    throw error(errc::precondition_violated,
                "bouquets are skewly topped by element " + std::to_string(t->m));

  const Point q_star = merged_point(poset);
  SetRepresentation rep = principal_ideal_rep(poset);
  rep.ground_size = poset.size() + 1;
  for (ElementId p = 0; p < poset.size(); ++p) {
    if (!poset.leq(b0.max, p) && !poset.leq(b1.max, p)) continue;
    PointSet s;
    for (Point q : rep.sets[p])
      if (q != b0.max && q != b1.max) s.push_back(q);
    s.push_back(q_star);
    rep.sets[p] = std::move(s);
  }
  return rep;
}

/// Recovers the untopped parallel pair from an alpha collision alpha(p0) = alpha(p1).
inline std::pair<Bouquet, Bouquet> witness_bouquets_from_rep(const Poset& poset,
                                                             const SetRepresentation& rep,
                                                             ElementId p0, ElementId p1) {
  if (p0 == p1 || p0 >= poset.size() || p1 >= poset.size())
    throw error(errc::precondition_violated, "need two distinct elements");
  if (!is_set_representation(poset, rep) || !is_parsimonious(poset, rep))
    throw error(errc::precondition_violated, "representation is not parsimonious");
  const AlphaMap alpha = alpha_of(poset, rep);
  if (alpha.values[p0] != alpha.values[p1])
    throw error(errc::precondition_violated, "alpha does not identify the two elements");

  auto pair = canonical_bouquets(poset, p0, p1);
  if (!pair) throw std::logic_error("alpha collision without a canonical bouquet pair");
  if (skewly_topping(poset, pair->first, pair->second))
    throw std::logic_error("alpha collision on a skewly topped pair");
  return std::move(*pair);
}

}  // namespace satorder
