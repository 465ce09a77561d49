#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "golden.hpp"
#include "settle_cli.hpp"

using namespace settle;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("settle_test_" + name)).string();
}

}  // namespace

TEST(Cli, GenRakeStripe) {
  const auto r = run({"gen", "--pattern", "rake-stripe", "--rows", "6", "--cols", "8"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(occupancy(parse_grid(r.out)), 26);
  EXPECT_EQ(parse_grid(r.out), golden::grid("rake_stripe_6x8.grid"));
}

TEST(Cli, GenBrickCombAndJson) {
  const auto r = run({"gen", "--pattern", "brick-comb", "--rows", "5", "--cols", "10", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("occupancy"), 39);
  EXPECT_EQ(j.at("schema"), "1");
  EXPECT_TRUE(j.contains("segments"));
}

TEST(Cli, GenSvgAndUnknownPattern) {
  EXPECT_EQ(run({"gen", "--pattern", "comb", "--rows", "3", "--cols", "4", "--style", "svg"}).out.rfind("<svg", 0),
            0u);
  EXPECT_EQ(run({"gen", "--pattern", "spiral", "--rows", "3", "--cols", "4"}).code, 2);
  EXPECT_EQ(run({"gen", "--pattern", "comb", "--rows", "1", "--cols", "4"}).code, 2);
}

TEST(Cli, CheckImpermissibleListsBlockedCells) {
  const auto r = run({"check", golden::path("impermissible_5x4.grid")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("permissible: no"), std::string::npos);
  EXPECT_NE(r.out.find("blocked: (2,2) (3,3)\n"), std::string::npos);
  EXPECT_EQ(run({"check", "--expect", "permissible", golden::path("impermissible_5x4.grid")}).code, 1);
}

TEST(Cli, CheckExpectations) {
  EXPECT_EQ(run({"check", "--expect", "maximal", golden::path("maximal_5x4.grid")}).code, 0);
  EXPECT_EQ(run({"check", "--expect", "maximal", golden::path("permissible_5x4.grid")}).code, 1);
  EXPECT_EQ(run({"check", "--expect", "permissible", golden::path("permissible_5x4.grid")}).code, 0);
}

TEST(Cli, CheckJsonAgreesWithLibrary) {
  for (const char* name : {"impermissible_5x4.grid", "permissible_5x4.grid", "maximal_5x4.grid",
                           "brick_comb_5x10.grid", "rake_stripe_6x8.grid", "check_4x11.grid", "stripe_7x12.grid",
                           "brick_5x10.grid", "comb_5x10.grid"}) {
    const auto r = run({"check", "--json", golden::path(name)});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    const auto c = golden::grid(name);
    EXPECT_EQ(j.at("permissible").get<bool>(), is_permissible(c)) << name;
    EXPECT_EQ(j.at("maximal").get<bool>(), is_maximal(c)) << name;
    EXPECT_EQ(j.at("occupancy").get<std::int64_t>(), occupancy(c)) << name;
  }
}

TEST(Cli, CheckBoundaryOverrideAndParseErrors) {
  const auto path = temp_path("bad.grid");
  std::ofstream(path) << "##\n#?\n";
  const auto bad = run({"check", path});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("line 2, column 2"), std::string::npos);
  std::filesystem::remove(path);

  const auto bricked = run({"check", "--json", "--boundary", "bricked", golden::path("maximal_5x4.grid")});
  ASSERT_EQ(bricked.code, 0);
  EXPECT_EQ(nlohmann::json::parse(bricked.out).at("boundary"), "bricked");
  EXPECT_EQ(run({"check", "/nonexistent/grid"}).code, 2);
}

TEST(Cli, SolveAndWitnessFile) {
  const auto path = temp_path("witness.grid");
  const auto r = run({"solve", "--objective", "max", "--rows", "5", "--cols", "10", "--witness", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "optimum 39\n");
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  const auto w = parse_grid(text.str());
  EXPECT_EQ(occupancy(w), 39);
  EXPECT_TRUE(is_maximal(w));
  std::filesystem::remove(path);
}

TEST(Cli, SolveJsonIsDeterministic) {
  const std::vector<std::string> args{"solve", "--objective", "min", "--rows", "6", "--cols", "8", "--json"};
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j.at("optimum"), 26);
  EXPECT_FALSE(j.contains("stats"));
  EXPECT_EQ(occupancy(parse_grid(j.at("witness").dump())), 26);
}

TEST(Cli, SolveBruteAndStats) {
  const auto r = run({"solve", "--rows", "4", "--cols", "4", "--brute", "--stats"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("optimum 13\n", 0), 0u);
  EXPECT_NE(r.out.find("wall_seconds"), std::string::npos);
}

TEST(Cli, SolveCapViolation) {
  const auto r = run({"solve", "--objective", "min", "--rows", "3", "--cols", "14"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("cap of 12"), std::string::npos);
}

TEST(Cli, Bounds) {
  const auto r = run({"bounds", "--rows", "4", "--cols", "4"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("29/2"), std::string::npos);
  const auto j = nlohmann::json::parse(run({"bounds", "--rows", "6", "--cols", "8", "--json"}).out);
  EXPECT_EQ(j.at("i_lower").at("value"), 26);
  EXPECT_EQ(run({"bounds", "--rows", "1", "--cols", "8"}).code, 2);
}

TEST(Cli, TableTopLeftBlockAgainstGolden) {
  const auto r = run({"table", "--objective", "max", "--rows", "2..6", "--cols", "2..6", "--golden",
                      golden::path("table5.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("  6   12   15   19   25   28\n"), std::string::npos) << r.out;
}

TEST(Cli, TableMismatchFails) {
  const auto r = run({"table", "--objective", "max", "--rows", "2..3", "--cols", "2..3", "--boundary", "bricked",
                      "--golden", golden::path("table5.json")});
  EXPECT_EQ(r.code, 2);
  const auto path = temp_path("wrong.json");
  std::ofstream(path) << R"({"schema":"1","objective":"max","boundary":"free","rows":[2,2],"cols":[2,3],"values":[[4,6]]})";
  const auto m = run({"table", "--rows", "2", "--cols", "2..3", "--golden", path});
  EXPECT_EQ(m.code, 1);
  EXPECT_NE(m.err.find("mismatch at 2x3"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, TableBadRange) { EXPECT_EQ(run({"table", "--rows", "2..x", "--cols", "3"}).code, 2); }

TEST(Cli, ExportIp) {
  const auto r = run({"export-ip", "--objective", "min", "--rows", "3", "--cols", "4"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, golden::text("ip_3x4_min.lp"));
  EXPECT_EQ(run({"export-ip", "--rows", "3", "--cols", "4"}).out, golden::text("ip_3x4_max.lp"));
}

TEST(Cli, Oracle) {
  const auto r = run({"oracle", "--rows", "3", "--cols", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("max: dynamic programming 13, brute force 13, witnesses identical"), std::string::npos);
  const auto j = nlohmann::json::parse(run({"oracle", "--rows", "2", "--cols", "4", "--boundary", "bricked",
                                            "--json"}).out);
  EXPECT_TRUE(j.at("agree").get<bool>());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"solve", "--rows", "3"}).code, 2);
  EXPECT_EQ(run({"solve", "--rows", "3", "--cols", "3", "--bogus"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
