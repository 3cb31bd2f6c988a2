#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "sublat/corpus.hpp"
#include "sublat/semigroup.hpp"
#include "sublat/sublattice.hpp"
#include "sublat/suites.hpp"
#include "sublat/table-io.hpp"

using namespace sublat;

namespace {

FiniteSemigroup brandt5() {
  return FiniteSemigroup(5, {4, 2, 4, 0, 4,
                             3, 4, 1, 4, 4,
                             0, 4, 2, 4, 4,
                             4, 1, 4, 3, 4,
                             4, 4, 4, 4, 4},
                         {"a", "b", "ab", "ba", "0"});
}

std::string slurp(std::filesystem::path const& path) {
  std::ifstream      in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("table json roundtrip", "[io]") {
  FiniteSemigroup s = brandt5();
  nlohmann::json  j = table_to_json(s);
  REQUIRE(j["order"] == 5);
  REQUIRE(j["table"].size() == 5);
  REQUIRE(j["table"][0] == nlohmann::json::array({4, 2, 4, 0, 4}));
  REQUIRE(j["names"][4] == "0");

  FiniteSemigroup back = table_from_json(j);
  REQUIRE(back.flat_table() == s.flat_table());
  REQUIRE(back.names() == s.names());

  FiniteSemigroup anon = FiniteSemigroup::left_zero(2);
  REQUIRE_FALSE(table_to_json(anon).contains("names"));
  REQUIRE(read_table_string(table_to_string(anon)).flat_table() == anon.flat_table());
}

TEST_CASE("table reader diagnostics", "[io]") {
  auto message_of = [](nlohmann::json const& j) {
    try {
      table_from_json(j);
    } catch (InvalidEntry const& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  REQUIRE(message_of(nlohmann::json::array()).find("must be a JSON object")
          != std::string::npos);
  REQUIRE(message_of(nlohmann::json::object()).find("integer `order` field")
          != std::string::npos);
  REQUIRE(message_of({{"order", "two"}, {"table", nlohmann::json::array()}})
              .find("integer `order` field") != std::string::npos);
  REQUIRE(message_of({{"order", 2}}).find("`table` array") != std::string::npos);
  REQUIRE(message_of({{"order", 2}, {"table", {1, 2}}}).find("rows must be arrays")
          != std::string::npos);
  REQUIRE(message_of({{"order", 1}, {"table", {{"x"}}}}).find("entries must be integers")
          != std::string::npos);
  REQUIRE(message_of({{"order", 2}, {"table", {{0, 1}}}}).find("expected 2")
          != std::string::npos);
  REQUIRE(message_of({{"order", 1}, {"table", {{0}}}, {"names", 3}})
              .find("`names` must be an array") != std::string::npos);

  // range and associativity are the constructor's business
  REQUIRE_THROWS_AS(read_table_string(R"({"order":2,"table":[[0,2],[0,0]]})"),
                    InvalidEntry);
  REQUIRE_THROWS_AS(read_table_string(R"({"order":2,"table":[[0,1],[0,0]]})"),
                    NotAssociative);
  REQUIRE_THROWS_AS(read_table_string(R"({"order":1,"table":[[0]],"names":["a","b"]})"),
                    InvalidEntry);
  REQUIRE_THROWS_AS(read_table_string("not json at all"), InvalidEntry);
}

TEST_CASE("table files", "[io]") {
  std::filesystem::path dir = std::filesystem::temp_directory_path() / "sublat-io-test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::string path = (dir / "b2.json").string();
  write_table_file(path, brandt5());
  FiniteSemigroup back = read_table_file(path);
  REQUIRE(back.flat_table() == brandt5().flat_table());
  REQUIRE(back.name(2) == "ab");
  REQUIRE_THROWS_AS(read_table_file((dir / "absent.json").string()), InvalidEntry);
  std::filesystem::remove_all(dir);
}

TEST_CASE("structured lattice output", "[io]") {
  SubsemigroupLattice L = sub_lattice(FiniteSemigroup::left_zero(2));
  nlohmann::json      j = lattice_to_json(L);
  REQUIRE(j["ground_order"] == 2);
  REQUIRE(j["node_count"] == 4);
  REQUIRE(j["nodes"].get<std::vector<std::uint64_t>>()
          == std::vector<std::uint64_t>{0, 1, 2, 3});
  REQUIRE(j["covers"].get<std::vector<std::vector<int>>>()
          == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});

  std::string text = lattice_structured(L);
  REQUIRE(text.back() == '\n');
  REQUIRE(nlohmann::json::parse(text) == j);
}

TEST_CASE("content digests", "[io]") {
  REQUIRE(digest_hex("") == "cbf29ce484222325");
  REQUIRE(digest_hex("a") == "af63dc4c8601ec8c");
  REQUIRE(digest_hex("ab") != digest_hex("ba"));
  REQUIRE(fnv1a("semigroup") == fnv1a("semigroup"));
}

TEST_CASE("in-process corpus is memoized", "[io]") {
  auto const& first  = corpus(2, EnumMode::iso);
  auto const& second = corpus(2, EnumMode::iso);
  REQUIRE(first.size() == 5);
  REQUIRE(&first == &second);
  REQUIRE(std::string(mode_name(EnumMode::iso_or_anti)) == "iso_or_anti");
  REQUIRE(parse_mode("iso") == EnumMode::iso);
  REQUIRE_THROWS_AS(parse_mode("both"), InvalidEntry);
}

TEST_CASE("disk corpus cache", "[io]") {
  std::filesystem::path dir = std::filesystem::temp_directory_path() / "sublat-corpus-test";
  std::filesystem::remove_all(dir);

  auto tables = corpus_cached(dir, 2, EnumMode::iso);
  REQUIRE(tables.size() == 5);
  std::filesystem::path file = dir / corpus_file_name(2, EnumMode::iso);
  REQUIRE(std::filesystem::exists(file));
  REQUIRE(corpus_file_name(2, EnumMode::iso) == "corpus-n2-iso.json");

  nlohmann::json manifest = nlohmann::json::parse(slurp(dir / "manifest.json"));
  REQUIRE(manifest["entries"].size() == 1);
  REQUIRE(manifest["entries"][0]["n"] == 2);
  REQUIRE(manifest["entries"][0]["mode"] == "iso");
  REQUIRE(manifest["entries"][0]["count"] == 5);
  REQUIRE(manifest["entries"][0]["digest"] == digest_hex(slurp(file)));

  // a second mode adds an entry and keeps the first, sorted by file name
  corpus_cached(dir, 2, EnumMode::iso_or_anti);
  manifest = nlohmann::json::parse(slurp(dir / "manifest.json"));
  REQUIRE(manifest["entries"].size() == 2);
  REQUIRE(manifest["entries"][0]["file"] == "corpus-n2-iso.json");
  REQUIRE(manifest["entries"][1]["file"] == "corpus-n2-iso_or_anti.json");

  // an existing file is loaded as-is, never regenerated
  std::vector<FiniteSemigroup> one{tables[0]};
  {
    std::ofstream out(file);
    out << corpus_serialize(one);
  }
  auto reloaded = corpus_cached(dir, 2, EnumMode::iso);
  REQUIRE(reloaded.size() == 1);
  REQUIRE(reloaded[0].flat_table() == tables[0].flat_table());

  std::filesystem::remove_all(dir);
}

TEST_CASE("corpus parsing diagnostics", "[io]") {
  REQUIRE_THROWS_AS(corpus_parse("{}", "here"), InvalidEntry);
  REQUIRE_THROWS_AS(corpus_parse("[", "here"), InvalidEntry);
  REQUIRE(corpus_parse("[]", "here").empty());
}

TEST_CASE("verification suite registry", "[io]") {
  std::vector<std::string> names = suite_names();
  REQUIRE(names.size() == 10);
  REQUIRE(std::find(names.begin(), names.end(), "c2-c3-bijection") != names.end());
  REQUIRE(std::find(names.begin(), names.end(), "band-lattice-closed-4") != names.end());
  REQUIRE_THROWS_AS(run_suite("no-such-suite"), UnknownSuite);

  SuiteReport rep = run_suite("weight-census");
  REQUIRE(rep.name == "weight-census");
  REQUIRE(rep.passed());
  REQUIRE_FALSE(rep.checks.empty());
  for (SuiteCheck const& c : rep.checks) {
    REQUIRE(c.status == CheckStatus::pass);
    REQUIRE_FALSE(c.id.empty());
  }
  REQUIRE(rep.seconds >= 0.0);
}
