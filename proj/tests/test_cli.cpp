#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "support/fixtures.hpp"

using vkp::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = vkp::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ParityTrefoil) {
  const auto r = run({"parity", fixtures::trefoil});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1: 1\n2: -1\n");
}

TEST(Cli, ParityJsonAndModulus) {
  auto r = run({"parity", fixtures::trefoil, "--json"});
  EXPECT_EQ(json::parse(r.out), json::parse(R"({"1":1,"2":-1})"));
  r = run({"parity", "--mod", "2", fixtures::trefoil, "--json"});
  EXPECT_EQ(json::parse(r.out), json::parse(R"({"1":1,"2":1})"));
  EXPECT_EQ(run({"parity", "--mod", "1", fixtures::trefoil}).code, 2);
}

TEST(Cli, InvariantsJson) {
  const auto r = run({"invariants", fixtures::trefoil, "--json"});
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j.at("V").at("1"), 2);
  EXPECT_EQ(j.at("V").size(), 4u);
  const auto small = json::parse(run({"--max-index", "2", "--max-order", "1", "invariants", fixtures::trefoil, "--json"}).out);
  EXPECT_EQ(small.at("V").size(), 2u);
  EXPECT_EQ(small.at("VZ").size(), 2u);
}

TEST(Cli, InvariantsText) {
  const auto r = run({"invariants", fixtures::kishino});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("V: 1=0"), std::string::npos);
}

TEST(Cli, CanonEmpty) {
  const auto r = run({"canon", ""});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "\n");
  EXPECT_EQ(run({"canon", "O7+ U7+"}).out, "O1+ U1+\n");
}

TEST(Cli, Smooth) {
  auto r = run({"smooth", "--chords", "1", fixtures::trefoil});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "link: O2+ | U2+\nflat: 1 | 1\n");
  r = run({"smooth", "--chords", "1", fixtures::trefoil, "--json"});
  EXPECT_EQ(json::parse(r.out).at("flat"), "1 | 1");
  EXPECT_EQ(run({"smooth", "--chords", "4", fixtures::trefoil}).code, 2);
  EXPECT_EQ(run({"smooth", fixtures::trefoil}).code, 1);
}

TEST(Cli, Vassiliev) {
  auto r = run({"vassiliev", "--Z", "1", fixtures::trefoil});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "+2 [1 | 1]\n");
  r = run({"vassiliev", "--Z", "1,2", fixtures::miyazawa, "--json"});
  const auto s = vkp::sum_from_json(json::parse(r.out));
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(run({"vassiliev", "--Z", "2", fixtures::trefoil}).out, "0\n");
  EXPECT_EQ(run({"vassiliev", "--Z", "2,1", fixtures::trefoil}).code, 2);
  EXPECT_EQ(run({"vassiliev", "--Z", "0", fixtures::trefoil}).code, 2);
}

TEST(Cli, Degree) {
  auto r = run({"degree", "--Z", "1", "--sing", "2", fixtures::pretzel, "--json"});
  EXPECT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j.at("subsets"), 10);
  EXPECT_EQ(j.at("zero"), 10);
  EXPECT_EQ(run({"degree", "--sing", "3", fixtures::trefoil}).code, 2);
}

TEST(Cli, MovesAndApply) {
  auto r = run({"moves", "O1+ U1+", "--no-insertions", "--json"});
  ASSERT_EQ(r.code, 0);
  const auto moves = json::parse(r.out);
  ASSERT_EQ(moves.size(), 1u);
  EXPECT_EQ(moves[0].at("kind"), "R1_remove");

  r = run({"apply", "--move", moves[0].dump(), "O1+ U1+", "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out), json::parse(R"({"code":"","profile_unchanged":true})"));

  EXPECT_EQ(run({"apply", "--move", "{nope", "O1+ U1+"}).code, 1);
  EXPECT_EQ(run({"apply", "--move", R"({"kind":"R4","site":[]})", "O1+ U1+"}).code, 1);
  EXPECT_EQ(run({"apply", "--move", R"({"kind":"R1_remove","site":[1]})", fixtures::trefoil}).code, 2);
}

TEST(Cli, ApplyTriangle) {
  const std::string m = R"({"kind":"R3","site":[0,3,6],"variant":"2-1"})";
  const auto r = run({"apply", "--move", m, fixtures::s12_triangle_before});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, fixtures::s12_triangle_after + "\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"parity", "X1+"}).code, 1);
  EXPECT_EQ(run({"parity", "O1+ U1-"}).code, 2);
  EXPECT_EQ(run({"parity"}).code, 1);
  EXPECT_EQ(run({"bogus", "O1+ U1+"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"--budget", "-1", "canon", ""}).code, 1);
  const auto r = run({"parity", "O1+ U1-"});
  EXPECT_NE(r.err.find("sign mismatch"), std::string::npos);
}

TEST(Cli, MultipleCodesAndFile) {
  const auto path = std::filesystem::temp_directory_path() / "vkparity_cli_codes.txt";
  {
    std::ofstream f(path);
    f << "# two diagrams\n" << fixtures::trefoil << "  # trefoil\n\n  O1+ U1+\n";
  }
  auto r = run({"--file", path.string(), "canon"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "O1+ O2+ U1+ U2+\nO1+ U1+\n");
  r = run({"canon", "O1+ U1+", "O2- U2-", "--json"});
  EXPECT_EQ(r.out, "\"O1+ U1+\"\n\"O1- U1-\"\n");
  EXPECT_EQ(run({"canon", "O1+ U1+", "O1+"}).code, 2);
  std::filesystem::remove(path);
  EXPECT_EQ(run({"--file", path.string(), "canon"}).code, 1);
}

TEST(Cli, Fuzz) {
  const auto r = run({"--steps", "10", "--size", "4", "fuzz", "--seeds", "6", "--json"});
  const auto j = json::parse(r.out);
  EXPECT_EQ(j.at("walks"), 6);
  EXPECT_EQ(j.at("profile_failures"), 0);
  EXPECT_EQ(j.at("sums").at("S_1").at("unequal"), 0);
  EXPECT_EQ(j.at("degree_unequal"), 0);
  EXPECT_EQ(r.code, j.at("ok").get<bool>() ? 0 : 3);
  EXPECT_EQ(r.code, 0);
}
