#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <iterator>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "satorder/poset.hpp"

namespace satorder {

/// Ground-set points of a representation.
using Point = std::size_t;

/// Sorted, duplicate-free subset of the ground set.
using PointSet = std::vector<Point>;

/// A set-valued map on the elements of a poset: element p is sent to sets[p],
/// a subset of the ground set [0, ground_size). Ground points that no set uses
/// are allowed and ignored by every predicate.
struct SetRepresentation {
  std::size_t ground_size = 0;
  std::vector<PointSet> sets;

  friend bool operator==(const SetRepresentation&, const SetRepresentation&) = default;
};

/// The "new point" map of a parsimonious representation.
struct AlphaMap {
  std::vector<Point> values;

  bool injective() const {
    std::set<Point> seen(values.begin(), values.end());
    return seen.size() == values.size();
  }

  std::size_t range_size() const { return std::set<Point>(values.begin(), values.end()).size(); }

  /// Least (p, q) with p < q and values[p] == values[q].
  std::optional<std::pair<ElementId, ElementId>> first_collision() const {
    for (ElementId p = 0; p < values.size(); ++p)
      for (ElementId q = p + 1; q < values.size(); ++q)
        if (values[p] == values[q]) return std::pair{p, q};
    return std::nullopt;
  }

  friend bool operator==(const AlphaMap&, const AlphaMap&) = default;
  friend auto operator<=>(const AlphaMap&, const AlphaMap&) = default;
};

namespace detail {

inline bool is_proper_subset(const PointSet& a, const PointSet& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline PointSet set_union(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline PointSet set_difference(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline PointSet normalized(PointSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

/// Union of the sets of every element strictly below p.
inline PointSet union_below(const Poset& poset, const SetRepresentation& rep, ElementId p) {
  PointSet acc;
  for (ElementId q : poset.strict_downset(p)) acc = set_union(acc, rep.sets[q]);
  return acc;
}

inline bool well_formed(const Poset& poset, const SetRepresentation& rep) {
  if (rep.sets.size() != poset.size()) return false;
  for (const auto& s : rep.sets) {
    if (!std::is_sorted(s.begin(), s.end())) return false;
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
    if (!s.empty() && s.back() >= rep.ground_size) return false;
  }
  return true;
}

}  // namespace detail

/// pi(p) = {p' : p' <= p} over ground set P itself.
inline SetRepresentation principal_ideal_rep(const Poset& poset) {
  SetRepresentation rep{poset.size(), {}};
  rep.sets.reserve(poset.size());
  for (ElementId p = 0; p < poset.size(); ++p) rep.sets.push_back(poset.downset(p));
  return rep;
}

/// Injective, and p < p' exactly when sets[p] is a proper subset of sets[p'].
inline bool is_set_representation(const Poset& poset, const SetRepresentation& rep) {
  if (!detail::well_formed(poset, rep)) return false;
  const auto n = poset.size();
  for (ElementId p = 0; p < n; ++p)
    for (ElementId q = 0; q < n; ++q) {
      if (p == q) continue;
      if (rep.sets[p] == rep.sets[q]) return false;
      if (poset.less(p, q) != detail::is_proper_subset(rep.sets[p], rep.sets[q])) return false;
    }
  return true;
}

/// Every element contributes exactly one point beyond the union of its
/// predecessors' sets.
inline bool satisfies_new_point_clause(const Poset& poset, const SetRepresentation& rep) {
  for (ElementId p = 0; p < poset.size(); ++p)
    if (detail::set_difference(rep.sets[p], detail::union_below(poset, rep, p)).size() != 1)
      return false;
  return true;
}

/// Every point of sets[p] is the single new point of some p' <= p.
inline bool satisfies_generation_clause(const Poset& poset, const SetRepresentation& rep) {
  const auto n = poset.size();
  std::vector<std::optional<Point>> new_point(n);
  for (ElementId p = 0; p < n; ++p) {
    auto diff = detail::set_difference(rep.sets[p], detail::union_below(poset, rep, p));
    if (diff.size() == 1) new_point[p] = diff.front();
  }
  for (ElementId p = 0; p < n; ++p)
    for (Point q : rep.sets[p]) {
      bool generated = false;
      for (ElementId r = 0; r < n && !generated; ++r)
        generated = poset.leq(r, p) && new_point[r] == q;
      if (!generated) return false;
    }
  return true;
}

/// The counting form: |sets[p]| = |union of sets below p| + 1.
inline bool satisfies_counting_clause(const Poset& poset, const SetRepresentation& rep) {
  for (ElementId p = 0; p < poset.size(); ++p)
    if (rep.sets[p].size() != detail::union_below(poset, rep, p).size() + 1) return false;
  return true;
}

/// Both the new-point and generation clauses hold.
/// Throws errc::not_a_set_representation when `rep` is not a set representation.
inline bool is_parsimonious(const Poset& poset, const SetRepresentation& rep) {
  if (!is_set_representation(poset, rep))
    throw error(errc::not_a_set_representation, "map is not a set representation");
  return satisfies_new_point_clause(poset, rep) && satisfies_generation_clause(poset, rep);
}

inline AlphaMap alpha_of(const Poset& poset, const SetRepresentation& rep) {
  if (!is_set_representation(poset, rep) || !is_parsimonious(poset, rep))
    throw error(errc::not_parsimonious, "alpha is defined only for parsimonious representations");
  AlphaMap alpha;
  alpha.values.reserve(poset.size());
  for (ElementId p = 0; p < poset.size(); ++p)
    alpha.values.push_back(
        detail::set_difference(rep.sets[p], detail::union_below(poset, rep, p)).front());
  return alpha;
}

/// phi(p) = {alpha(p') : p' <= p}. The result need not be a set representation.
inline SetRepresentation rep_from_alpha(const Poset& poset, const AlphaMap& alpha) {
  SetRepresentation rep;
  for (Point v : alpha.values) rep.ground_size = std::max(rep.ground_size, v + 1);
  rep.sets.reserve(poset.size());
  for (ElementId p = 0; p < poset.size(); ++p) {
    PointSet s;
    for (ElementId q : poset.downset(p)) s.push_back(alpha.values[q]);
    rep.sets.push_back(detail::normalized(std::move(s)));
  }
  return rep;
}

/// The order that an injective alpha transports onto the union of all sets.
struct InducedOrder {
  PointSet carrier;
  std::vector<std::pair<Point, Point>> relation;  // all (q, q') with q <=_Q q', sorted

  bool leq(Point q, Point r) const {
    return std::binary_search(relation.begin(), relation.end(), std::pair{q, r});
  }
};

/// Builds <=_Q on the union of sets[p] and confirms that alpha is an order
/// isomorphism from the poset onto it with sets[p] = alpha(pi(p)).
inline InducedOrder induced_iso_check(const Poset& poset, const SetRepresentation& rep) {
  const AlphaMap alpha = alpha_of(poset, rep);
  if (!alpha.injective())
    throw error(errc::alpha_not_injective, "alpha maps two elements to the same point");

  InducedOrder order;
  PointSet all;
  for (const auto& s : rep.sets) all = detail::set_union(all, s);
  order.carrier = detail::normalized(alpha.values);
  if (order.carrier != all)
    throw std::logic_error("carrier differs from the range of alpha");
  for (ElementId p = 0; p < poset.size(); ++p)
    for (ElementId q = 0; q < poset.size(); ++q)
      if (poset.leq(p, q)) order.relation.emplace_back(alpha.values[p], alpha.values[q]);
  std::sort(order.relation.begin(), order.relation.end());
  if (rep_from_alpha(poset, alpha).sets != rep.sets)
    throw std::logic_error("representation is not the image of the principal ideals");
  return order;
}

}  // namespace satorder
