#ifndef SUBLAT_CORPUS_HPP_
#define SUBLAT_CORPUS_HPP_

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "enumerate.hpp"
#include "exceptions.hpp"
#include "semigroup.hpp"
#include "table-io.hpp"

namespace sublat {

inline char const* mode_name(EnumMode mode) {
  return mode == EnumMode::iso ? "iso" : "iso_or_anti";
}

inline EnumMode parse_mode(std::string const& s) {
  if (s == "iso") {
    return EnumMode::iso;
  }
  if (s == "iso_or_anti") {
    return EnumMode::iso_or_anti;
  }
  throw InvalidEntry("unknown mode: `" + s + "` (expected iso or iso_or_anti)");
}

//! All order-n semigroups up to the chosen equivalence, in enumeration
//! order, memoized per (n, mode). The reference stays valid for the whole
//! process; sweeps and suites share one copy.
inline std::vector<FiniteSemigroup> const& corpus(int n, EnumMode mode) {
  static std::map<std::pair<int, int>, std::vector<FiniteSemigroup>> memo;
  static std::mutex                                                  mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, static_cast<int>(mode));
  auto it  = memo.find(key);
  if (it == memo.end()) {
    it = memo.emplace(key, all_semigroups(n, mode)).first;
  }
  return it->second;
}

//! Disk cache: one file per (n, mode) holding a JSON array of table
//! documents, plus a manifest recording counts and content digests.
//! Files are regenerated only when absent.

inline std::string corpus_file_name(int n, EnumMode mode) {
  return "corpus-n" + std::to_string(n) + "-" + mode_name(mode) + ".json";
}

inline std::string corpus_serialize(std::vector<FiniteSemigroup> const& tables) {
  nlohmann::json j = nlohmann::json::array();
  for (FiniteSemigroup const& S : tables) {
    j.push_back(table_to_json(S));
  }
  return j.dump(2) + "\n";
}

inline std::vector<FiniteSemigroup> corpus_parse(std::string const& text,
                                                 std::string const& origin) {
  nlohmann::json j;
  try {
    std::istringstream in(text);
    in >> j;
  } catch (nlohmann::json::exception const& e) {
    throw InvalidEntry("corpus file " + origin + " is not valid JSON: " + e.what());
  }
  if (!j.is_array()) {
    throw InvalidEntry("corpus file " + origin + " must hold a JSON array of tables");
  }
  std::vector<FiniteSemigroup> out;
  out.reserve(j.size());
  for (auto const& doc : j) {
    out.push_back(table_from_json(doc));
  }
  return out;
}

//! Rewrites the manifest entry for (n, mode), keeping the others. The
//! manifest is a JSON object with an `entries` array sorted by file name.
inline void corpus_update_manifest(std::filesystem::path const& dir, int n, EnumMode mode,
                                   int count, std::string const& digest) {
  std::filesystem::path manifest_path = dir / "manifest.json";
  nlohmann::json        manifest;
  manifest["entries"] = nlohmann::json::array();
  if (std::filesystem::exists(manifest_path)) {
    std::ifstream in(manifest_path);
    nlohmann::json loaded;
    try {
      in >> loaded;
      if (loaded.is_object() && loaded.contains("entries") && loaded["entries"].is_array()) {
        manifest = loaded;
      }
    } catch (nlohmann::json::exception const&) {
      // unreadable manifest is rebuilt from this entry on
    }
  }
  std::string    file = corpus_file_name(n, mode);
  nlohmann::json entry;
  entry["n"]      = n;
  entry["mode"]   = mode_name(mode);
  entry["file"]   = file;
  entry["count"]  = count;
  entry["digest"] = digest;
  nlohmann::json entries = nlohmann::json::array();
  for (auto const& e : manifest["entries"]) {
    if (e.is_object() && e.contains("file") && e["file"] != file) {
      entries.push_back(e);
    }
  }
  entries.push_back(entry);
  std::sort(entries.begin(), entries.end(), [](nlohmann::json const& a, nlohmann::json const& b) {
    return a["file"].get<std::string>() < b["file"].get<std::string>();
  });
  manifest["entries"] = entries;
  std::ofstream out(manifest_path);
  if (!out) {
    throw InvalidEntry("cannot write manifest: " + manifest_path.string());
  }
  out << manifest.dump(2) << "\n";
}

//! Returns the cached corpus for (n, mode), building and writing it only
//! when the cache file is absent.
inline std::vector<FiniteSemigroup> corpus_cached(std::filesystem::path const& dir, int n,
                                                  EnumMode mode) {
  std::filesystem::create_directories(dir);
  std::filesystem::path path = dir / corpus_file_name(n, mode);
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    if (!in) {
      throw InvalidEntry("cannot open corpus file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return corpus_parse(buf.str(), path.string());
  }
  std::vector<FiniteSemigroup> tables = corpus(n, mode);
  std::string                  text   = corpus_serialize(tables);
  std::ofstream                out(path);
  if (!out) {
    throw InvalidEntry("cannot write corpus file: " + path.string());
  }
  out << text;
  out.close();
  corpus_update_manifest(dir, n, mode, static_cast<int>(tables.size()), digest_hex(text));
  return tables;
}

}  // namespace sublat

#endif  // SUBLAT_CORPUS_HPP_
