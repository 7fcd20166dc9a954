#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "helpers.hpp"
#include "macfill/io.hpp"
#include "macfill/macdonald.hpp"
#include "macfill/verify.hpp"

using namespace macfill;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("macfill_test_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("scalar JSON round-trips") {
    const LaurentQT c = LaurentQT::monomial(2, -1, BigInt("-98765432109876543210")) + LaurentQT::t();
    CHECK(laurent_from_json(to_json(c)) == c);
    CHECK(to_json(LaurentQT::q()).dump() == R"([[1,0,"1"]])");
    const AlphaPoly a = AlphaPoly(3) + AlphaPoly::alpha(2);
    CHECK(alpha_from_json(to_json(a)) == a);
    CHECK(partition_from_json(to_json(Partition{3, 1})) == Partition{3, 1});
    CHECK_THROWS(partition_from_json(json::parse("[1,2]")));
  }

  TEST_CASE("structured JSON round-trips") {
    const MacdonaldResult r = H_tilde(Partition{2, 1});
    const json j = to_json(r);
    CHECK(j.at("schema_version") == kSchemaVersion);
    const MacdonaldResult back = macdonald_from_json(j);
    CHECK(back.mu == r.mu);
    CHECK(back.x_poly == r.x_poly);
    CHECK(back.m_vec == r.m_vec);
    CHECK(back.schur_vec == r.schur_vec);
    CHECK(schur_vector_from_json(to_json(r.schur_vec)) == r.schur_vec);
    CHECK(m_vector_from_json(to_json(r.m_vec)) == r.m_vec);
    const SuperFilling s = parse_filling("6 2~ / 2~ 4 8~ / 4~ 4 1 3");
    CHECK(filling_from_json(to_json(s)) == s);
    const SkewTuple nu = nu_of_mu(Partition{2, 2}, {{2, 1}});
    CHECK(tuple_from_json(to_json(nu)) == nu);
    XPolynomial f(1, 1);
    f.add({1, 2}, LaurentQT::q());
    CHECK(xpoly_from_json(to_json(f)) == f);
  }

  TEST_CASE("Kostka tables") {
    const KostkaTable t = kostka_table(3, 6);
    CHECK(t.partitions == partitions_of(3));
    CHECK(t.entries[1][1] == LaurentQT::q() + LaurentQT::t());
    CHECK(kostka_table_from_json(to_json(t)) == t);
    CHECK(render_kostka_table(kostka_table(2, 6)).find("1,1") != std::string::npos);
    CHECK_THROWS_AS(kostka_table(7, 6), GuardError);
  }

  TEST_CASE("cache store, load and schema mismatch") {
    const auto dir = scratch_dir("cache");
    const TableCache cache(dir);
    CHECK_FALSE(cache.load("hmu_mu=2,1"));
    const json doc = to_json(H_tilde(Partition{2, 1}));
    cache.store("hmu_mu=2,1", doc);
    REQUIRE(std::filesystem::exists(cache.path_for("hmu_mu=2,1")));
    CHECK(cache.load("hmu_mu=2,1") == doc);
    for (const auto& entry : std::filesystem::directory_iterator(dir))
      CHECK(entry.path().string().find(".tmp") == std::string::npos);
    json old = doc;
    old["schema_version"] = kSchemaVersion + 1;
    cache.store("hmu_mu=2,1", old);
    CHECK_FALSE(cache.load("hmu_mu=2,1"));
    std::ofstream(cache.path_for("broken")) << "{not json";
    CHECK_FALSE(cache.load("broken"));
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("cache directory resolution") {
    ::setenv("MACFILL_CACHE_DIR", "/tmp/from_env", 1);
    CHECK(TableCache::resolve_dir(std::nullopt) == std::filesystem::path("/tmp/from_env"));
    CHECK(TableCache::resolve_dir(std::string("/tmp/from_flag")) == std::filesystem::path("/tmp/from_flag"));
    ::unsetenv("MACFILL_CACHE_DIR");
    CHECK_FALSE(TableCache::resolve_dir(std::nullopt));
    const TableCache cache("/tmp");
    CHECK(cache.path_for("a/b c").filename() == "a_b_c.json");
  }

  TEST_CASE("verification harness") {
    for (const std::string& suite : suite_names()) {
      const auto reports = run_suite(suite, 3);
      REQUIRE(reports.size() == 1);
      CHECK(reports[0].ok());
      const std::string text = render_report(reports[0]);
      CHECK(text.find(suite + ": pass") != std::string::npos);
    }
    CHECK(run_suite("all", 2).size() == suite_names().size());
    CHECK_THROWS(run_suite("nonsense", 2));
  }
}
