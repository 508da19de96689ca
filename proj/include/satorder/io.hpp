#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "satorder/poset.hpp"
#include "satorder/representation.hpp"

// Poset files are JSON objects:
//
//   { "n": 4, "strict": [[0, 1], [2, 3]], "names": ["a", "b", "c", "d"] }
//
// "strict" may be any generating set of strict pairs; it is closed on load.
// "names" is optional and only used for display. Saved files list the covers.
namespace satorder::io {

struct PosetFile {
  Poset poset;
  std::vector<std::string> names;  // empty, or one per element

  std::string name(ElementId e) const { return names.empty() ? std::to_string(e) : names[e]; }
};

inline PosetFile parse_poset(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw error(errc::parse_error, e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("strict"))
    throw error(errc::parse_error, "expected an object with fields \"n\" and \"strict\"");
  if (!j["n"].is_number_unsigned()) throw error(errc::parse_error, "\"n\" must be a natural number");
  if (!j["strict"].is_array()) throw error(errc::parse_error, "\"strict\" must be an array");

  PosetFile file;
  const auto n = j["n"].get<std::size_t>();
  std::vector<StrictPair> pairs;
  for (const auto& pair : j["strict"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
        !pair[1].is_number_unsigned())
      throw error(errc::parse_error, "each strict entry must be a pair of natural numbers");
    const auto a = pair[0].get<std::size_t>();
    const auto b = pair[1].get<std::size_t>();
    if (a >= n || b >= n)
      throw error(errc::parse_error, "strict pair index out of range for n=" + std::to_string(n));
    pairs.emplace_back(a, b);
  }
  if (j.contains("names")) {
    const auto& names = j["names"];
    if (!names.is_array() || names.size() != n)
      throw error(errc::parse_error, "\"names\" must list one string per element");
    for (const auto& s : names) {
      if (!s.is_string()) throw error(errc::parse_error, "\"names\" entries must be strings");
      file.names.push_back(s.get<std::string>());
    }
  }
  file.poset = Poset::from_strict_pairs(n, pairs);
  return file;
}

inline PosetFile load_poset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::parse_error, "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_poset(buffer.str());
}

inline std::string format_poset(const PosetFile& file) {
  nlohmann::json j;
  j["n"] = file.poset.size();
  j["strict"] = nlohmann::json::array();
  for (const auto& [a, b] : file.poset.hasse_edges()) j["strict"].push_back({a, b});
  if (!file.names.empty()) j["names"] = file.names;
  return j.dump() + "\n";
}

inline void save_poset(const std::string& path, const PosetFile& file) {
  std::ofstream out(path);
  if (!out) throw error(errc::parse_error, "cannot write " + path);
  out << format_poset(file);
}

/// Hasse diagram as a DOT digraph, drawn bottom to top.
inline void write_dot(std::ostream& out, const PosetFile& file) {
  out << "digraph poset {\n  rankdir=BT;\n";
  for (ElementId e = 0; e < file.poset.size(); ++e)
    out << "  n" << e << " [label=\"" << file.name(e) << "\"];\n";
  for (const auto& [a, b] : file.poset.hasse_edges()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
}

// Representation block, one line per element:
//
//   representation ground=5
//   0: 0
//   1: 0 4
//   end
inline void write_representation(std::ostream& out, const SetRepresentation& rep) {
  out << "representation ground=" << rep.ground_size << "\n";
  for (std::size_t p = 0; p < rep.sets.size(); ++p) {
    out << p << ":";
    for (auto q : rep.sets[p]) out << ' ' << q;
    out << "\n";
  }
  out << "end\n";
}

/// Reads the first representation block found in `in`.
inline SetRepresentation read_representation(std::istream& in) {
  std::string line;
  const std::string header = "representation ground=";
  while (std::getline(in, line) && line.rfind(header, 0) != 0) {
  }
  if (line.rfind(header, 0) != 0) throw error(errc::parse_error, "no representation block");
  SetRepresentation rep;
  try {
    rep.ground_size = std::stoul(line.substr(header.size()));
  } catch (const std::exception&) {
    throw error(errc::parse_error, "bad ground size: " + line);
  }
  while (std::getline(in, line) && line != "end") {
    std::istringstream row(line);
    std::size_t index = 0;
    char colon = 0;
    if (!(row >> index >> colon) || colon != ':' || index != rep.sets.size())
      throw error(errc::parse_error, "bad representation row: " + line);
    PointSet s;
    for (Point q; row >> q;) s.push_back(q);
    rep.sets.push_back(detail::normalized(std::move(s)));
  }
  if (line != "end") throw error(errc::parse_error, "unterminated representation block");
  return rep;
}

}  // namespace satorder::io
