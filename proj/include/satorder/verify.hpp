#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "satorder/enumeration.hpp"
#include "satorder/generators.hpp"
#include "satorder/interval.hpp"
#include "satorder/saturation.hpp"
#include "satorder/witness.hpp"

namespace satorder::verify {

inline constexpr std::size_t max_enumerated_size = 6;

/// Visits every naturally labeled poset on n elements: each transitive set of
/// pairs i < j. Every isomorphism class shows up at least once.
inline void for_each_poset(std::size_t n, const std::function<void(const Poset&)>& visit) {
  if (n > max_enumerated_size)
    throw error(errc::too_large, "poset enumeration is limited to n <= " +
                                     std::to_string(max_enumerated_size));
  std::vector<StrictPair> slots;
  std::vector<std::vector<int>> slot_of(n, std::vector<int>(n, -1));
  for (ElementId i = 0; i < n; ++i)
    for (ElementId j = i + 1; j < n; ++j) {
      slot_of[i][j] = static_cast<int>(slots.size());
      slots.emplace_back(i, j);
    }
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t chosen = 0; chosen < total; ++chosen) {
    auto has = [&](ElementId i, ElementId j) { return (chosen >> slot_of[i][j]) & 1; };
    bool transitive = true;
    for (ElementId i = 0; i < n && transitive; ++i)
      for (ElementId j = i + 1; j < n && transitive; ++j)
        if (has(i, j))
          for (ElementId k = j + 1; k < n && transitive; ++k)
            if (has(j, k) && !has(i, k)) transitive = false;
    if (!transitive) continue;
    std::vector<StrictPair> pairs;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((chosen >> s) & 1) pairs.push_back(slots[s]);
    visit(Poset::from_strict_pairs(n, pairs));
  }
}

inline std::vector<Poset> all_posets(std::size_t n) {
  std::vector<Poset> out;
  for_each_poset(n, [&](const Poset& p) { out.push_back(p); });
  return out;
}

/// Verdicts of every checker on one poset plus the witness round trips.
struct CrossRecord {
  bool oracle = true;
  bool fast = true;
  bool exhaustive = true;
  bool fan_criterion = true;
  bool contains_two_two = false;
  /// Interval orders only: the constructed interval representation verifies.
  bool interval_rep_ok = true;
  /// Non-saturated posets only: q* construction from the fast witness is
  /// parsimonious with alpha(max B0) = alpha(max B1), and the collision leads
  /// back to a parallel untopped pair. Same for the oracle's own witness.
  bool round_trip_ok = true;
  /// |range alpha| = n for every parsimonious map exactly when saturated.
  bool counting_ok = true;

  bool agree() const { return oracle == fast && fast == exhaustive && exhaustive == fan_criterion; }
  bool saturated() const { return fast; }
  bool interval_implies_saturated() const { return contains_two_two || saturated(); }
  bool ok() const {
    return agree() && interval_rep_ok && round_trip_ok && counting_ok &&
           interval_implies_saturated();
  }
  std::string failure() const {
    std::string out;
    if (!agree()) out += "verdicts disagree;";
    if (!interval_rep_ok) out += "interval representation fails;";
    if (!round_trip_ok) out += "witness round trip fails;";
    if (!counting_ok) out += "counting form disagrees;";
    if (!interval_implies_saturated()) out += "interval order not saturated;";
    return out;
  }
};

namespace detail {

inline bool pair_is_untopped(const Poset& poset, const std::pair<Bouquet, Bouquet>& pair) {
  return are_parallel(poset, pair.first, pair.second) &&
         !skewly_topping(poset, pair.first, pair.second).has_value();
}

/// q* construction on an untopped pair, then back to bouquets through alpha.
inline bool forward_round_trip(const Poset& poset, const UntoppedPair& w) {
  try {
    const auto rep = merging_representation(poset, w.b0, w.b1);
    if (!is_set_representation(poset, rep) || !is_parsimonious(poset, rep)) return false;
    const auto alpha = alpha_of(poset, rep);
    const Point q_star = merged_point(poset);
    if (alpha.values[w.b0.max] != q_star || alpha.values[w.b1.max] != q_star) return false;
    return pair_is_untopped(poset, witness_bouquets_from_rep(poset, rep, w.b0.max, w.b1.max));
  } catch (const std::exception&) {
    return false;
  }
}

inline bool backward_round_trip(const Poset& poset, const NonInjectiveRep& w) {
  try {
    const auto collision = w.alpha.first_collision();
    if (!collision) return false;
    const auto pair = witness_bouquets_from_rep(poset, w.rep, collision->first, collision->second);
    return pair_is_untopped(poset, pair) && forward_round_trip(poset, {pair.first, pair.second});
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace detail

/// Runs all four saturation checkers and the witness constructions on one poset.
/// Throws errc::too_large above the exhaustive size guard.
inline CrossRecord cross_validate(const Poset& poset) {
  CrossRecord r;
  const auto maps = enumerate_parsimonious(poset);
  const auto oracle = is_saturated_oracle(poset);
  const auto fast = is_saturated_fast(poset);
  r.oracle = oracle.saturated;
  r.fast = fast.saturated;
  r.exhaustive = is_saturated_exhaustive(poset).saturated;
  r.fan_criterion = check_fan_criterion(poset);
  r.contains_two_two = !is_interval_order(poset);
  if (!r.contains_two_two)
    r.interval_rep_ok = verify_interval_representation(poset, interval_representation(poset));

  bool every_count_full = true;
  for (const auto& a : maps) every_count_full = every_count_full && a.range_size() == poset.size();
  r.counting_ok = every_count_full == r.oracle;

  if (const auto* w = fast.bouquets()) r.round_trip_ok = detail::forward_round_trip(poset, *w);
  if (const auto* w = oracle.representation())
    r.round_trip_ok = r.round_trip_ok && detail::backward_round_trip(poset, *w);
  if (fast.saturated != (fast.bouquets() == nullptr)) r.round_trip_ok = false;
  return r;
}

struct CampaignConfig {
  std::size_t n_min = 0;
  std::size_t n_max = 5;
  std::size_t exhaustive_limit = 5;
  std::size_t samples_per_n = 0;
  std::uint64_t seed = 0;
};

struct SizeRow {
  std::size_t n = 0;
  bool exhaustive = false;
  std::size_t examined = 0;
  std::size_t saturated = 0;
  std::size_t interval = 0;
  std::size_t saturated_with_two_two = 0;
  std::size_t round_trips = 0;  // non-saturated posets whose witness round trip succeeded
};

struct Mismatch {
  std::size_t n = 0;
  std::vector<StrictPair> covers;
  std::string reason;
};

struct CampaignReport {
  CampaignConfig config;
  std::vector<SizeRow> rows;
  std::vector<Mismatch> mismatches;

  bool passed() const { return mismatches.empty(); }
};

inline void tally(SizeRow& row, std::vector<Mismatch>& mismatches, const Poset& poset) {
  const auto r = cross_validate(poset);
  ++row.examined;
  if (r.saturated()) ++row.saturated;
  if (!r.contains_two_two) ++row.interval;
  if (r.saturated() && r.contains_two_two) ++row.saturated_with_two_two;
  if (!r.saturated() && r.round_trip_ok) ++row.round_trips;
  if (!r.ok()) mismatches.push_back({poset.size(), poset.hasse_edges(), r.failure()});
}

/// Exhaustive over naturally labeled posets for n <= exhaustive_limit,
/// samples_per_n seeded random posets above it. Deterministic per config.
inline CampaignReport campaign(const CampaignConfig& config) {
  if (config.exhaustive_limit > max_enumerated_size)
    throw error(errc::too_large, "exhaustive_limit must be <= " +
                                     std::to_string(max_enumerated_size));
  if (config.n_max > exhaustive_limit)
    throw error(errc::too_large, "campaigns are limited to n <= " +
                                     std::to_string(exhaustive_limit));
  CampaignReport report{config, {}, {}};
  for (std::size_t n = config.n_min; n <= config.n_max; ++n) {
    SizeRow row;
    row.n = n;
    row.exhaustive = n <= config.exhaustive_limit;
    if (row.exhaustive) {
      for_each_poset(n, [&](const Poset& p) { tally(row, report.mismatches, p); });
    } else {
      std::mt19937_64 rng(config.seed ^ (0x9e3779b97f4a7c15ULL * (n + 1)));
      for (std::size_t i = 0; i < config.samples_per_n; ++i) {
        const double density = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const std::uint64_t sample_seed = rng();
        tally(row, report.mismatches, gen::random(n, density, sample_seed));
      }
    }
    report.rows.push_back(row);
  }
  return report;
}

inline std::string to_text(const CampaignReport& report) {
  std::ostringstream out;
  const auto& c = report.config;
  out << "campaign n_min=" << c.n_min << " n_max=" << c.n_max
      << " exhaustive_limit=" << c.exhaustive_limit << " samples_per_n=" << c.samples_per_n
      << " seed=" << c.seed << "\n";
  out << "n mode examined saturated interval saturated_with_2+2 round_trips\n";
  for (const auto& r : report.rows)
    out << r.n << ' ' << (r.exhaustive ? "exhaustive" : "random") << ' ' << r.examined << ' '
        << r.saturated << ' ' << r.interval << ' ' << r.saturated_with_two_two << ' '
        << r.round_trips << "\n";
  for (const auto& m : report.mismatches) {
    out << "mismatch n=" << m.n << " covers=";
    for (const auto& [a, b] : m.covers) out << '(' << a << ',' << b << ')';
    out << " " << m.reason << "\n";
  }
  out << "mismatches " << report.mismatches.size() << "\n";
  return out.str();
}

inline nlohmann::json to_json(const CampaignReport& report) {
  const auto& c = report.config;
  nlohmann::json j;
  j["config"] = {{"n_min", c.n_min},
                 {"n_max", c.n_max},
                 {"exhaustive_limit", c.exhaustive_limit},
                 {"samples_per_n", c.samples_per_n},
                 {"seed", c.seed}};
  j["rows"] = nlohmann::json::array();
  for (const auto& r : report.rows)
    j["rows"].push_back({{"n", r.n},
                         {"mode", r.exhaustive ? "exhaustive" : "random"},
                         {"examined", r.examined},
                         {"saturated", r.saturated},
                         {"interval", r.interval},
                         {"saturated_with_two_two", r.saturated_with_two_two},
                         {"round_trips", r.round_trips}});
  j["mismatches"] = nlohmann::json::array();
  for (const auto& m : report.mismatches)
    j["mismatches"].push_back({{"n", m.n}, {"covers", m.covers}, {"reason", m.reason}});
  return j;
}

}  // namespace satorder::verify
