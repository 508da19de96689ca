#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "satorder/error.hpp"

namespace satorder {

/// Positional (0-based) element identity within one poset.
using ElementId = std::size_t;

using StrictPair = std::pair<ElementId, ElementId>;

/// A finite partial order stored as its full n x n relation matrix.
///
/// Values are immutable after construction; the only way to obtain a
/// non-empty poset is from_strict_pairs, which closes its input
/// transitively and rejects cycles, so the order axioms always hold.
class Poset {
 public:
  Poset() = default;

  static Poset from_strict_pairs(std::size_t n, std::span<const StrictPair> pairs) {
    Poset result;
    result.n_ = n;
    result.rel_.assign(n * n, 0);
    for (ElementId p = 0; p < n; ++p) result.set(p, p);
    for (const auto& [a, b] : pairs) {
      if (a >= n || b >= n) {
        throw error(errc::invalid_element, "strict pair (" + std::to_string(a) + "," +
                                               std::to_string(b) + ") out of range for n=" +
                                               std::to_string(n));
      }
      if (a == b) {
        throw error(errc::cycle_detected, "strict pair (" + std::to_string(a) + "," +
                                              std::to_string(b) + ") relates an element to itself");
      }
      result.set(a, b);
    }
    // Warshall closure.
    for (ElementId k = 0; k < n; ++k)
      for (ElementId i = 0; i < n; ++i)
        if (result.leq(i, k))
          for (ElementId j = 0; j < n; ++j)
            if (result.leq(k, j)) result.set(i, j);
    for (ElementId i = 0; i < n; ++i)
      for (ElementId j = i + 1; j < n; ++j)
        if (result.leq(i, j) && result.leq(j, i)) {
          throw error(errc::cycle_detected, "elements " + std::to_string(i) + " and " +
                                                std::to_string(j) + " lie on a cycle");
        }
    return result;
  }

  static Poset from_strict_pairs(std::size_t n, std::initializer_list<StrictPair> pairs) {
    return from_strict_pairs(n, std::span<const StrictPair>(pairs.begin(), pairs.size()));
  }

  std::size_t size() const noexcept { return n_; }

  bool leq(ElementId p, ElementId q) const noexcept { return rel_[p * n_ + q] != 0; }
  bool less(ElementId p, ElementId q) const noexcept { return p != q && leq(p, q); }
  bool comparable(ElementId p, ElementId q) const noexcept { return leq(p, q) || leq(q, p); }

  /// {q : q <_P p}, ascending.
  std::vector<ElementId> strict_downset(ElementId p) const {
    std::vector<ElementId> out;
    for (ElementId q = 0; q < n_; ++q)
      if (less(q, p)) out.push_back(q);
    return out;
  }

  /// {q : p <_P q}, ascending.
  std::vector<ElementId> strict_upset(ElementId p) const {
    std::vector<ElementId> out;
    for (ElementId q = 0; q < n_; ++q)
      if (less(p, q)) out.push_back(q);
    return out;
  }

  /// The principal ideal {q : q <=_P p}, ascending.
  std::vector<ElementId> downset(ElementId p) const {
    std::vector<ElementId> out;
    for (ElementId q = 0; q < n_; ++q)
      if (leq(q, p)) out.push_back(q);
    return out;
  }

  /// Cover pairs (transitive reduction), sorted lexicographically.
  std::vector<StrictPair> hasse_edges() const {
    std::vector<StrictPair> out;
    for (ElementId p = 0; p < n_; ++p)
      for (ElementId q = 0; q < n_; ++q) {
        if (!less(p, q)) continue;
        bool covered = true;
        for (ElementId r = 0; r < n_ && covered; ++r)
          if (less(p, r) && less(r, q)) covered = false;
        if (covered) out.emplace_back(p, q);
      }
    return out;
  }

  /// All strict pairs p <_P q, sorted lexicographically.
  std::vector<StrictPair> strict_pairs() const {
    std::vector<StrictPair> out;
    for (ElementId p = 0; p < n_; ++p)
      for (ElementId q = 0; q < n_; ++q)
        if (less(p, q)) out.emplace_back(p, q);
    return out;
  }

  /// Smallest-index-first topological order.
  std::vector<ElementId> linear_extension() const {
    std::vector<ElementId> order;
    std::vector<bool> placed(n_, false);
    order.reserve(n_);
    while (order.size() < n_) {
      for (ElementId p = 0; p < n_; ++p) {
        if (placed[p]) continue;
        bool ready = true;
        for (ElementId q = 0; q < n_ && ready; ++q)
          if (!placed[q] && less(q, p)) ready = false;
        if (ready) {
          placed[p] = true;
          order.push_back(p);
          break;
        }
      }
    }
    return order;
  }

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  void set(ElementId p, ElementId q) { rel_[p * n_ + q] = 1; }

  std::size_t n_ = 0;
  std::vector<std::uint8_t> rel_;
};

/// Four elements forming a suborder of type 2+2:
/// p0 < p1, p2 < p3, p0 not<= p3, p2 not<= p1.
struct TwoTwoWitness {
  ElementId p0, p1, p2, p3;
  friend bool operator==(const TwoTwoWitness&, const TwoTwoWitness&) = default;
};

/// Lexicographically least 2+2 quadruple, if any.
inline std::optional<TwoTwoWitness> find_two_two(const Poset& poset) {
  const auto n = poset.size();
  for (ElementId p0 = 0; p0 < n; ++p0)
    for (ElementId p1 = 0; p1 < n; ++p1) {
      if (!poset.less(p0, p1)) continue;
      for (ElementId p2 = 0; p2 < n; ++p2)
        for (ElementId p3 = 0; p3 < n; ++p3) {
          if (poset.less(p2, p3) && !poset.leq(p0, p3) && !poset.leq(p2, p1))
            return TwoTwoWitness{p0, p1, p2, p3};
        }
    }
  return std::nullopt;
}

namespace detail {

using Mask = std::uint64_t;
inline constexpr std::size_t max_mask_elements = 64;

inline Mask bit(std::size_t i) noexcept { return Mask{1} << i; }

inline Mask mask_of(std::span<const ElementId> elements) noexcept {
  Mask m = 0;
  for (auto e : elements) m |= bit(e);
  return m;
}

inline std::vector<ElementId> elements_of(Mask m) {
  std::vector<ElementId> out;
  for (std::size_t i = 0; m != 0; ++i, m >>= 1)
    if (m & 1) out.push_back(i);
  return out;
}

/// Per-element masks of the order relation; requires size() <= 64.
struct RelationMasks {
  std::vector<Mask> up;          // {q : p <= q}
  std::vector<Mask> down;        // {q : q <= p}
  std::vector<Mask> comparable;  // up | down

  explicit RelationMasks(const Poset& poset)
      : up(poset.size(), 0), down(poset.size(), 0), comparable(poset.size(), 0) {
    for (ElementId p = 0; p < poset.size(); ++p)
      for (ElementId q = 0; q < poset.size(); ++q)
        if (poset.leq(p, q)) {
          up[p] |= bit(q);
          down[q] |= bit(p);
        }
    for (ElementId p = 0; p < poset.size(); ++p) comparable[p] = up[p] | down[p];
  }
};

}  // namespace detail

}  // namespace satorder
