#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>

#include "schurlab/reportio.hpp"

using namespace schurlab;

TEST_CASE("subset and family serialization") {
  auto z6 = GroupSpec::parse("Z6");
  auto j = subset_json(GroupSubset::of(z6, {1, 3, 5}));
  CHECK(j["group"] == "Z6");
  CHECK(j["hex"] == "2a");
  CHECK(j["size"] == 3);

  auto fam = largest_sum_free_structured(GroupSpec::parse("Z2xZ4"));
  auto arr = family_json(fam);
  REQUIRE(arr.size() == 3);
  for (const auto& e : arr) CHECK(e["group"] == "Z2xZ4");
}

TEST_CASE("search report serialization uses decimal strings") {
  auto rep = argmax_kappa(GroupSpec::parse("Z5"), 2);
  auto j = search_report_json(rep);
  CHECK(j["max"] == "4");
  CHECK(j["exhaustive"] == true);
  CHECK(j["group"] == "Z5");
  CHECK(j["maximizers"].size() + 0 >= 1);
}

TEST_CASE("config record serialization") {
  auto recs = enumerate_configs(5, 3);
  bool found = false;
  for (const auto& rec : recs) {
    if (rec.profile.histogram != std::vector<std::uint64_t>{0, 0, 2, 4, 1, 0}) continue;
    found = true;
    auto j = config_record_json(rec);
    CHECK(j["t"] == 3);
    CHECK(j["weight"]["atom_exponent"] == "n/2^3");
    CHECK(j["vectors"].size() == 5);
    for (const auto& v : j["vectors"]) CHECK(v.get<std::string>().size() == 3);
  }
  CHECK(found);
}

TEST_CASE("result record envelope") {
  auto rec = result_record("classify", json{{"spec", "Z10"}}, json{{"type", "I(2)"}}, "mu-table", 0.01);
  CHECK(rec["anchor"] == "mu-table");
  CHECK(rec["provenance"]["deterministic"] == true);
  CHECK(rec["provenance"]["version"] == kVersion);
}

TEST_CASE("family cache round-trip and soundness") {
  auto dir = std::filesystem::temp_directory_path() / "schurlab_cache_test";
  std::filesystem::remove_all(dir);
  FamilyCache cache(dir);
  auto g = GroupSpec::parse("Z2xZ4");
  CHECK(!cache.load(g, "structured").has_value());
  LsfFamily fam;
  fam.sets = largest_sum_free_structured(g);
  fam.mu = 4;
  cache.store(g, "structured", fam);
  auto hit = cache.load(g, "structured");
  REQUIRE(hit.has_value());
  CHECK(hit->mu == 4);
  REQUIRE(hit->sets.size() == fam.sets.size());
  for (std::size_t i = 0; i < fam.sets.size(); ++i) CHECK(hit->sets[i] == fam.sets[i]);

  // a different method key misses
  CHECK(!cache.load(g, "brute").has_value());

  // corrupt version -> recompute path (load rejects)
  auto p = cache.path_for(g, "structured");
  {
    std::ifstream in(p);
    json j;
    in >> j;
    j["version"] = "0.0.0-other";
    std::ofstream out(p);
    out << j.dump();
  }
  CHECK(!cache.load(g, "structured").has_value());
  std::filesystem::remove_all(dir);
}

TEST_CASE("cache hit equals fresh computation") {
  auto dir = std::filesystem::temp_directory_path() / "schurlab_cache_test2";
  std::filesystem::remove_all(dir);
  FamilyCache cache(dir);
  for (const char* name : {"Z6", "Z2xZ4", "Z2^3", "Z5"}) {
    auto g = GroupSpec::parse(name);
    auto fresh = lsf_family(g, LsfMethod::Auto, 20);
    cache.store(g, "auto", fresh);
    auto hit = cache.load(g, "auto");
    REQUIRE(hit.has_value());
    CHECK(hit->mu == fresh.mu);
    REQUIRE(hit->sets.size() == fresh.sets.size());
    for (std::size_t i = 0; i < fresh.sets.size(); ++i) CHECK(hit->sets[i] == fresh.sets[i]);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("verification suites serialize") {
  auto suites = verify::run_suites("constants");
  auto j = suites_json(suites);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["suite"] == "constants");
  CHECK(j[0]["pass"] == true);
  CHECK(j[0]["checks"].size() == 2);
}
