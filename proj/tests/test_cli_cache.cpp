#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "bkl/serialize.hpp"

using namespace bkl;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / "bkl_cache_test";
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("fock text rendering") {
  auto b = ZeroOneSequence::parse("01");
  FockVector u = FockVector::monomial(b, 3, {2, 2});
  u.add_term({1, 1}, Laurent::q());
  CHECK(render_fock_text(u) == "M[2,2] + q*M[1,1]");
  CHECK(render_fock_text(FockVector(b, 1)) == "0");

  FockVector v = FockVector::monomial(b, 3, {1, 0});
  v.add_term({0, 1}, -Laurent::monomial(-1));
  v.add_term({1, 1}, Laurent::q() + Laurent::one());
  CHECK(render_fock_text(v) == "(q+1)*M[1,1] + M[1,0] - q^-1*M[0,1]");
}

TEST_CASE("fock json round trip") {
  auto b = ZeroOneSequence::parse("0101");
  FockVector u = FockVector::monomial(b, 2, {1, -2, 0, 2});
  u.add_term({0, 0, 0, 0}, Laurent::q() - Laurent::monomial(-3, 4));
  nlohmann::json j = fock_to_json(u);
  CHECK(fock_from_json(j) == u);
  // records ascend lexicographically in f
  CHECK(j["terms"][0]["f"] == nlohmann::json({0, 0, 0, 0}));
  // identical input, identical bytes
  CHECK(fock_to_json(u).dump() == j.dump());
}

TEST_CASE("table export") {
  auto b = ZeroOneSequence::parse("01");
  BKLTable t = build_table_serial(b, 1, BasisKind::Canonical);
  std::string csv = table_to_csv(t);
  CHECK(csv.find("g,f,polynomial") == 0);
  CHECK(csv.find("\"0,0\",\"1,1\",q") != std::string::npos);
  nlohmann::json j = table_to_json(t);
  CHECK(j["kind"] == "canonical");
  CHECK(table_to_csv(t) == csv);
}

TEST_CASE("cache round trip and corruption handling") {
  TempDir dir;
  nlohmann::json config = {{"command", "canon"}, {"b", "01"}, {"f", "2,2"}};
  auto b = ZeroOneSequence::parse("01");
  FockVector u = stabilized_canonical(b, {2, 2});
  CHECK(!cache_lookup(dir.path.string(), "canon_b01_f2_2", config).has_value());
  cache_store(dir.path.string(), "canon_b01_f2_2", config, fock_to_json(u));
  auto hit = cache_lookup(dir.path.string(), "canon_b01_f2_2", config);
  REQUIRE(hit.has_value());
  CHECK(fock_from_json(*hit) == u);
  // a cache hit never differs from a fresh recomputation
  CHECK(fock_from_json(*hit) == stabilized_canonical(b, {2, 2}));

  // config mismatch is a miss
  nlohmann::json other = config;
  other["f"] = "1,1";
  CHECK(!cache_lookup(dir.path.string(), "canon_b01_f2_2", other).has_value());

  // corrupt file is a miss, not an error
  {
    std::ofstream out(dir.path / "canon_b01_f2_2.json");
    out << "{ not json";
  }
  CHECK(!cache_lookup(dir.path.string(), "canon_b01_f2_2", config).has_value());
}
