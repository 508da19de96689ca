#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "satorder/poset.hpp"

// Named posets used as fixtures throughout. Element layouts:
//   chain(n)          0 < 1 < ... < n-1
//   antichain(n)      no strict pairs
//   two_plus_two      0 < 1, 2 < 3
//   n_poset           0 < 1, 2 < 1, 2 < 3
//   topped_two_two    0 < 1, 2 < 3, 2 < 4, 1 < 4
//   figure1(k)        l_0..l_{k-1} = 0..k-1, l = k, r_0..r_{k-1} = k+1..2k,
//                     r = 2k+1, t_0..t_{k-1} = 2k+2..3k+1
namespace satorder::gen {

inline Poset chain(std::size_t n) {
  std::vector<StrictPair> pairs;
  for (ElementId i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return Poset::from_strict_pairs(n, pairs);
}

inline Poset antichain(std::size_t n) { return Poset::from_strict_pairs(n, {}); }

inline Poset two_plus_two() { return Poset::from_strict_pairs(4, {{0, 1}, {2, 3}}); }

inline Poset n_poset() { return Poset::from_strict_pairs(4, {{0, 1}, {2, 1}, {2, 3}}); }

/// A saturated order containing a 2+2: element 4 tops the pair {0,1}, {2,3}.
inline Poset topped_two_two() {
  return Poset::from_strict_pairs(5, {{0, 1}, {2, 3}, {2, 4}, {1, 4}});
}

struct Figure1Layout {
  std::size_t k;
  ElementId l_(std::size_t i) const { return i; }
  ElementId l() const { return k; }
  ElementId r_(std::size_t i) const { return k + 1 + i; }
  ElementId r() const { return 2 * k + 1; }
  ElementId t_(std::size_t i) const { return 2 * k + 2 + i; }
  std::size_t size() const { return 3 * k + 2; }
};

/// Restriction of the infinite two-sided order (l_i < l_j < l, r_i < r_j < r < t_i < t_j,
/// l_i < t_i for i < j) to indices below k.
inline Poset figure1_truncation(std::size_t k) {
  if (k == 0) throw error(errc::too_small, "figure1 truncation needs k >= 1");
  const Figure1Layout at{k};
  std::vector<StrictPair> pairs;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    pairs.emplace_back(at.l_(i), at.l_(i + 1));
    pairs.emplace_back(at.r_(i), at.r_(i + 1));
    pairs.emplace_back(at.t_(i), at.t_(i + 1));
  }
  pairs.emplace_back(at.l_(k - 1), at.l());
  pairs.emplace_back(at.r_(k - 1), at.r());
  pairs.emplace_back(at.r(), at.t_(0));
  for (std::size_t i = 0; i < k; ++i) pairs.emplace_back(at.l_(i), at.t_(i));
  return Poset::from_strict_pairs(at.size(), pairs);
}

inline std::vector<std::string> figure1_names(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back("l_" + std::to_string(i));
  names.emplace_back("l");
  for (std::size_t i = 0; i < k; ++i) names.push_back("r_" + std::to_string(i));
  names.emplace_back("r");
  for (std::size_t i = 0; i < k; ++i) names.push_back("t_" + std::to_string(i));
  return names;
}

/// Each pair i < j becomes a strict relation with probability `density`, then the
/// result is closed. Uses mt19937_64 with a fixed 53-bit uniform conversion so the
/// output depends on nothing but (n, density, seed).
inline Poset random(std::size_t n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<StrictPair> pairs;
  for (ElementId i = 0; i < n; ++i)
    for (ElementId j = i + 1; j < n; ++j) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < density) pairs.emplace_back(i, j);
    }
  return Poset::from_strict_pairs(n, pairs);
}

}  // namespace satorder::gen
