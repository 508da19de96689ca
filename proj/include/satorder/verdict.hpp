#pragma once

#include <utility>
#include <variant>

#include "satorder/bouquet.hpp"
#include "satorder/representation.hpp"

namespace satorder {

/// Two parallel bouquets that no element skewly tops.
struct UntoppedPair {
  Bouquet b0;
  Bouquet b1;
  friend bool operator==(const UntoppedPair&, const UntoppedPair&) = default;
};

/// A parsimonious representation whose alpha map is not injective.
struct NonInjectiveRep {
  AlphaMap alpha;
  SetRepresentation rep;
  friend bool operator==(const NonInjectiveRep&, const NonInjectiveRep&) = default;
};

struct SaturationVerdict {
  bool saturated = true;
  std::variant<std::monostate, UntoppedPair, NonInjectiveRep> witness;

  static SaturationVerdict yes() { return {}; }
  static SaturationVerdict no(UntoppedPair w) { return {false, std::move(w)}; }
  static SaturationVerdict no(NonInjectiveRep w) { return {false, std::move(w)}; }

  const UntoppedPair* bouquets() const { return std::get_if<UntoppedPair>(&witness); }
  const NonInjectiveRep* representation() const { return std::get_if<NonInjectiveRep>(&witness); }
};

}  // namespace satorder
