#ifndef SUBLAT_TABLE_IO_HPP_
#define SUBLAT_TABLE_IO_HPP_

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "exceptions.hpp"
#include "semigroup.hpp"
#include "sublattice.hpp"

namespace sublat {

//! Table files are JSON objects with fields `order` (positive integer),
//! `table` (row-major array of `order` arrays of `order` element ids) and
//! optional `names` (array of `order` strings). The reader rejects
//! malformed documents with a diagnostic; the semigroup constructor then
//! enforces entry ranges and associativity.

inline nlohmann::json table_to_json(FiniteSemigroup const& S) {
  nlohmann::json j;
  j["order"] = S.order();
  j["table"] = S.rows();
  if (S.has_names()) {
    j["names"] = S.names();
  }
  return j;
}

inline FiniteSemigroup table_from_json(nlohmann::json const& j) {
  if (!j.is_object()) {
    throw InvalidEntry("table document must be a JSON object");
  }
  if (!j.contains("order") || !j["order"].is_number_integer()) {
    throw InvalidEntry("table document needs an integer `order` field");
  }
  if (!j.contains("table") || !j["table"].is_array()) {
    throw InvalidEntry("table document needs a `table` array of rows");
  }
  int                           n = j["order"].get<int>();
  std::vector<std::vector<int>> rows;
  for (auto const& row : j["table"]) {
    if (!row.is_array()) {
      throw InvalidEntry("`table` rows must be arrays");
    }
    std::vector<int> r;
    for (auto const& cell : row) {
      if (!cell.is_number_integer()) {
        throw InvalidEntry("`table` entries must be integers");
      }
      r.push_back(cell.get<int>());
    }
    rows.push_back(std::move(r));
  }
  if (static_cast<int>(rows.size()) != n) {
    throw InvalidEntry("table has " + std::to_string(rows.size())
                       + " rows, expected " + std::to_string(n));
  }
  std::vector<std::string> names;
  if (j.contains("names")) {
    if (!j["names"].is_array()) {
      throw InvalidEntry("`names` must be an array of strings");
    }
    for (auto const& s : j["names"]) {
      if (!s.is_string()) {
        throw InvalidEntry("`names` must be an array of strings");
      }
      names.push_back(s.get<std::string>());
    }
  }
  return FiniteSemigroup(n, rows, std::move(names));
}

inline std::string table_to_string(FiniteSemigroup const& S) {
  return table_to_json(S).dump(2) + "\n";
}

inline FiniteSemigroup read_table(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (nlohmann::json::exception const& e) {
    throw InvalidEntry(std::string("table document is not valid JSON: ") + e.what());
  }
  return table_from_json(j);
}

inline FiniteSemigroup read_table_string(std::string const& text) {
  std::istringstream in(text);
  return read_table(in);
}

inline FiniteSemigroup read_table_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidEntry("cannot open table file: " + path);
  }
  return read_table(in);
}

inline void write_table(std::ostream& out, FiniteSemigroup const& S) {
  out << table_to_string(S);
}

inline void write_table_file(std::string const& path, FiniteSemigroup const& S) {
  std::ofstream out(path);
  if (!out) {
    throw InvalidEntry("cannot open table file for writing: " + path);
  }
  write_table(out, S);
}

//! Compact structured form of a lattice: node bitmasks (in node order,
//! the empty set first) plus cover pairs (lower, upper). Masks fit one
//! word because subsemigroup enumeration is bounded far below 64.
inline nlohmann::json lattice_to_json(SubsemigroupLattice const& L) {
  nlohmann::json j;
  j["ground_order"] = L.ground.order();
  j["node_count"]   = L.size();
  std::vector<std::uint64_t> masks;
  masks.reserve(static_cast<std::size_t>(L.size()));
  for (ElemSet const& u : L.nodes) {
    masks.push_back(u.word(0));
  }
  j["nodes"] = masks;
  std::vector<std::vector<int>> covers;
  for (int v = 0; v < L.size(); ++v) {
    for (int u : L.covers_up[static_cast<std::size_t>(v)]) {
      covers.push_back({v, u});
    }
  }
  j["covers"] = covers;
  return j;
}

inline std::string lattice_structured(SubsemigroupLattice const& L) {
  return lattice_to_json(L).dump(2) + "\n";
}

//! FNV-1a over bytes; the corpus manifest stores these as hex strings.
inline std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string digest_hex(std::string_view bytes) {
  static char const* kHex = "0123456789abcdef";
  std::uint64_t      h    = fnv1a(bytes);
  std::string        out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kHex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace sublat

#endif  // SUBLAT_TABLE_IO_HPP_
