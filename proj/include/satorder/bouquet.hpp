#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "satorder/poset.hpp"

namespace satorder {

/// A subset of at least two elements that has a maximum.
struct Bouquet {
  std::vector<ElementId> members;  // sorted, includes max
  ElementId max = 0;

  /// members - {max}
  std::vector<ElementId> lower() const {
    std::vector<ElementId> out;
    for (auto e : members)
      if (e != max) out.push_back(e);
    return out;
  }

  friend bool operator==(const Bouquet&, const Bouquet&) = default;
};

/// A bouquet whose non-maximum members are pairwise incomparable.
struct Fan {
  Bouquet bouquet;
  friend bool operator==(const Fan&, const Fan&) = default;
};

/// Result of skewly_topping: m is above max B_side and above every lower member of
/// the other bouquet, but not above the other bouquet's maximum.
struct Topping {
  ElementId m;
  int side;
  friend bool operator==(const Topping&, const Topping&) = default;
};

inline Bouquet make_bouquet(const Poset& poset, std::vector<ElementId> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (auto e : members)
    if (e >= poset.size()) throw error(errc::invalid_element, "bouquet member out of range");
  if (members.size() < 2) throw error(errc::too_small, "a bouquet needs at least two elements");
  for (auto candidate : members) {
    if (std::all_of(members.begin(), members.end(),
                    [&](ElementId e) { return poset.leq(e, candidate); }))
      return Bouquet{std::move(members), candidate};
  }
  throw error(errc::no_maximum, "subset has no maximum");
}

inline bool is_fan(const Poset& poset, const Bouquet& b) {
  const auto lower = b.lower();
  for (std::size_t i = 0; i < lower.size(); ++i)
    for (std::size_t j = i + 1; j < lower.size(); ++j)
      if (poset.comparable(lower[i], lower[j])) return false;
  return true;
}

inline std::optional<Fan> as_fan(const Poset& poset, const Bouquet& b) {
  if (!is_fan(poset, b)) return std::nullopt;
  return Fan{b};
}

/// No member of one is comparable with any member of the other.
inline bool are_parallel(const Poset& poset, const Bouquet& b0, const Bouquet& b1) {
  for (auto x : b0.members)
    for (auto y : b1.members)
      if (poset.comparable(x, y)) return false;
  return true;
}

inline bool tops(const Poset& poset, ElementId m, int side, const Bouquet& b0,
                 const Bouquet& b1) {
  const Bouquet& own = side == 0 ? b0 : b1;
  const Bouquet& other = side == 0 ? b1 : b0;
  if (!poset.leq(own.max, m) || poset.leq(other.max, m)) return false;
  for (auto e : other.members)
    if (e != other.max && !poset.leq(e, m)) return false;
  return true;
}

/// Least (m, side) in lexicographic order that skewly tops the pair.
inline std::optional<Topping> skewly_topping(const Poset& poset, const Bouquet& b0,
                                             const Bouquet& b1) {
  if (!are_parallel(poset, b0, b1)) throw error(errc::not_parallel, "bouquets are not parallel");
  for (ElementId m = 0; m < poset.size(); ++m)
    for (int side = 0; side < 2; ++side)
      if (tops(poset, m, side, b0, b1)) return Topping{m, side};
  return std::nullopt;
}

/// Keeps the maximum and every member whose only strict successor inside the
/// bouquet is the maximum (the members immediately under the top).
inline Fan fan_from_bouquet(const Poset& poset, const Bouquet& b) {
  Bouquet f;
  f.max = b.max;
  for (auto e : b.members) {
    const bool keep = std::all_of(b.members.begin(), b.members.end(), [&](ElementId other) {
      return !poset.less(e, other) || other == b.max;
    });
    if (keep) f.members.push_back(e);
  }
  return Fan{std::move(f)};
}

/// For incomparable p0, p1: B_i = I_i + {p_i}, where I_i holds the elements
/// below p_i that are incomparable with p_{1-i}. Absent when p0, p1 are
/// comparable or either I_i is empty.
inline std::optional<std::pair<Bouquet, Bouquet>> canonical_bouquets(const Poset& poset,
                                                                     ElementId p0,
                                                                     ElementId p1) {
  if (poset.comparable(p0, p1)) return std::nullopt;
  auto build = [&](ElementId top, ElementId other) {
    Bouquet b{{}, top};
    for (ElementId e = 0; e < poset.size(); ++e)
      if (e == top || (poset.less(e, top) && !poset.comparable(e, other))) b.members.push_back(e);
    return b;
  };
  Bouquet b0 = build(p0, p1);
  Bouquet b1 = build(p1, p0);
  if (b0.members.size() < 2 || b1.members.size() < 2) return std::nullopt;
  return std::pair{std::move(b0), std::move(b1)};
}

}  // namespace satorder
