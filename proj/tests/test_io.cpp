#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "qbranch/cache.hpp"
#include "qbranch/io.hpp"
#include "qbranch/oracle.hpp"

using namespace qbranch;
namespace fs = std::filesystem;

TEST_CASE("query result JSON round-trips through the documented schema") {
    QueryResult r;
    r.command = "mult";
    r.pair = "g2";
    r.lambda = {1, 0};
    r.m = 2;
    r.variant = "beta";
    r.provenance = "all";
    r.value = 1;
    r.engine_values = {{"formula", 1}, {"kernel", 1}, {"oracle", 1}};
    r.conditions = {{"m = 2d is even", true}};
    auto j = nlohmann::json::parse(format_json(r));
    CHECK(j["schema"] == kSchemaVersion);
    CHECK(j["pair"] == "g2");
    CHECK(j["value"] == 1);
    CHECK(j["m"] == 2);
    CHECK(j["engines"]["kernel"] == 1);
    CHECK(j["match"] == true);
    CHECK(j["lambda"].size() == 2);
    CHECK(j["conditions"][0]["satisfied"] == true);
}

TEST_CASE("catalog export carries every pair with 1-based node labels") {
    auto j = nlohmann::json::parse(catalog_export_json());
    CHECK(j["exceptional_pairs"].size() == 5);
    std::map<std::string, std::pair<int, int>> expected = {
        {"e6", {2, 4}}, {"e7", {1, 3}}, {"e8", {8, 7}}, {"f4", {1, 2}}, {"g2", {1, 2}}};
    for (const auto& jp : j["exceptional_pairs"]) {
        auto [attach, second] = expected.at(jp["family"]);
        CHECK(jp["attach_node"] == attach);
        CHECK(jp["second_node"] == second);
    }
    CHECK(j["classical_families"].size() == 3);
}

TEST_CASE("table formatting is byte-stable") {
    std::vector<TableRow> rows = {{{1, 0}, 1, 1}, {{2, 0}, 0, 1}};
    std::string a = format_table(rows, "csv", "g2", "beta");
    std::string b = format_table(rows, "csv", "g2", "beta");
    CHECK(a == b);
    CHECK(a.find("lambda,d,mult") == 0);
    CHECK_THROWS_AS(format_table(rows, "yaml", "g2", ""), std::invalid_argument);
}

namespace {

struct CacheDir {
    fs::path dir;
    CacheDir() {
        dir = fs::temp_directory_path() / "qbranch-io-test-cache";
        fs::remove_all(dir);
        setenv("QBRANCH_CACHE", dir.c_str(), 1);
    }
    ~CacheDir() { fs::remove_all(dir); }
};

}  // namespace

TEST_CASE("character cache: idempotence, corruption recovery, degradation") {
    CacheDir sandbox;
    RootSystem g2 = build_root_system(SimpleType::G, 2);

    Character first = cached_freudenthal(g2, {1, 1});
    REQUIRE(fs::exists(sandbox.dir));
    size_t files = std::distance(fs::directory_iterator(sandbox.dir), fs::directory_iterator{});
    CHECK(files == 1);

    // second identical query is served from the cache and agrees
    Character second = cached_freudenthal(g2, {1, 1});
    CHECK(first.entries.size() == second.entries.size());
    for (const auto& [k, m] : first.entries) CHECK(second.entries.at(k) == m);

    // flip a payload byte: the entry is discarded and recomputed
    fs::path entry;
    for (const auto& de : fs::directory_iterator(sandbox.dir)) entry = de.path();
    {
        std::fstream f(entry, std::ios::in | std::ios::out | std::ios::binary);
        f.seekp(20);
        char c;
        f.seekg(20);
        f.get(c);
        f.seekp(20);
        f.put((char)(c ^ 0x5a));
    }
    CHECK_FALSE(cache_get(character_cache_key(g2, {1, 1}), 2).has_value());
    Character third = cached_freudenthal(g2, {1, 1});
    CHECK(third.entries.size() == first.entries.size());
    CHECK(cache_get(character_cache_key(g2, {1, 1}), 2).has_value());

    // unusable cache directory: computation still succeeds
    setenv("QBRANCH_CACHE", "/proc/nonexistent-readonly/cache", 1);
    Character fourth = cached_freudenthal(g2, {1, 1});
    CHECK(fourth.entries.size() == first.entries.size());
}

TEST_CASE("cache keys separate types, ranks and weights") {
    RootSystem g2 = build_root_system(SimpleType::G, 2);
    RootSystem a2 = build_root_system(SimpleType::A, 2);
    CHECK(character_cache_key(g2, {1, 0}) != character_cache_key(a2, {1, 0}));
    CHECK(character_cache_key(g2, {1, 0}) != character_cache_key(g2, {0, 1}));
}

TEST_CASE("report json shape") {
    Report rep;
    rep.add("a-check", true, "fine", 1e-12);
    rep.add("b-check", false, "broken");
    auto j = nlohmann::json::parse(report_json(rep, "demo"));
    CHECK(j["pass"] == false);
    CHECK(j["checks"].size() == 2);
    CHECK(j["checks"][0]["check"] == "a-check");
    CHECK(j["checks"][1]["pass"] == false);
}
