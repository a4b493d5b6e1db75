#include <gtest/gtest.h>

#include "wrtwist/cli.hpp"

using namespace wrtwist;
namespace cli = wrtwist::cli;

namespace {

cli::RunConfig config(cli::Command cmd, std::int64_t d, std::string gens) {
  cli::RunConfig c;
  c.command = cmd;
  c.d = d;
  c.generators = cli::parse_generators(gens);
  return c;
}

cli::RunConfig canonical_config(cli::Command cmd, std::int64_t d, std::string triple) {
  cli::RunConfig c;
  c.command = cmd;
  c.d = d;
  c.canonical = cli::parse_canonical(triple);
  return c;
}

}  // namespace

TEST(Cli, Parsing) {
  const auto g = cli::parse_generators(" 2,0 ; 1,1 ");
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[1], (QuadElem{1, 1}));
  EXPECT_TRUE(cli::parse_generators("").empty());
  EXPECT_THROW(cli::parse_generators("1,2,3"), cli::UsageError);
  EXPECT_THROW(cli::parse_generators("a,2"), cli::UsageError);
  EXPECT_THROW(cli::parse_canonical("1,2"), cli::UsageError);
  EXPECT_EQ(cli::parse_canonical("615,6,+3").g, 3);
  EXPECT_THROW(cli::parse_format("xml"), cli::UsageError);
  EXPECT_THROW(cli::parse_command("list"), cli::UsageError);
}

TEST(Cli, CanonicalCommand) {
  const auto r = cli::run(config(cli::Command::Canonical, 5, "2,0;1,1"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "{\"t\":2,\"y\":1,\"g\":1}\n");
}

TEST(Cli, TwistsWorkedExample) {
  const auto r = cli::run(config(cli::Command::Twists, 201, "6,3"));
  ASSERT_EQ(r.exit_code, 0) << r.error;
  const auto j = cli::json::parse(r.output);
  EXPECT_EQ(j["field"]["case"], "nonresidue");
  EXPECT_EQ(j["ideal"]["t"], 615);
  ASSERT_EQ(j["tuples"].size(), 6u);
  EXPECT_EQ(j["tuples"][4]["a"], 1);
  EXPECT_EQ(j["tuples"][4]["cos"], "2/205");
  EXPECT_EQ(j["tuples"][4]["beta"], "67/14007");  // 1809/378189 reduced
  EXPECT_EQ(j["tuples"][4]["f1"], "-1881/2");
  EXPECT_EQ(j["classes"].size(), 3u);
  EXPECT_EQ(j["classes"][0]["members"], cli::json::parse("[1,4]"));
}

TEST(Cli, ClassesWorkedExample) {
  const auto r = cli::run(canonical_config(cli::Command::Classes, 201, "615,6,3"));
  ASSERT_EQ(r.exit_code, 0) << r.error;
  const auto j = cli::json::parse(r.output);
  ASSERT_EQ(j["classes"].size(), 3u);
  EXPECT_EQ(j["classes"][0]["cos_abs"], "2/205");
  EXPECT_EQ(j["classes"][0]["label"], "generic");
  EXPECT_EQ(j["classes"][2]["representatives"], cli::json::parse("[[1,-102,-2,205],[2,-205,-1,102]]"));
}

TEST(Cli, JsonRoundTrip) {
  for (auto cmd : {cli::Command::Canonical, cli::Command::Twists, cli::Command::Classes}) {
    for (auto [d, gens] : std::vector<std::pair<int, std::string>>{{201, "6,3"}, {7, "3,1"}, {23, "5,-2;2,0"}}) {
      const auto r = cli::run(config(cmd, d, gens));
      ASSERT_EQ(r.exit_code, 0) << r.error;
      EXPECT_EQ(cli::json::parse(r.output).dump() + "\n", r.output);
    }
  }
}

TEST(Cli, VerifyAcceptsTwistsOutput) {
  for (auto [d, gens] : std::vector<std::pair<int, std::string>>{{201, "6,3"}, {7, "3,1"}, {5, "2,0;1,1"}, {59, "7,5"}}) {
    const auto twists = cli::run(config(cli::Command::Twists, d, gens));
    ASSERT_EQ(twists.exit_code, 0);
    auto cfg = config(cli::Command::Verify, d, gens);
    cfg.report = twists.output;
    const auto r = cli::run(cfg);
    EXPECT_EQ(r.exit_code, 0) << r.output << r.error;
    EXPECT_EQ(cli::json::parse(r.output)["ok"], true);
  }
}

TEST(Cli, VerifyRejectsTampering) {
  const auto twists = cli::run(config(cli::Command::Twists, 201, "6,3"));
  auto j = cli::json::parse(twists.output);
  j["tuples"][0]["cos"] = "1/3";
  j["tuples"][1]["d"] = 5;  // (0,1,1,5) is unimodular but not good
  auto cfg = config(cli::Command::Verify, 201, "6,3");
  cfg.report = j.dump();
  const auto r = cli::run(cfg);
  EXPECT_EQ(r.exit_code, cli::kInvariant);
  EXPECT_EQ(cli::json::parse(r.output)["failures"].size(), 2u);

  cfg.report = "{not json";
  EXPECT_EQ(cli::run(cfg).exit_code, cli::kUsage);
  auto other = config(cli::Command::Verify, 5, "1,0");
  other.report = twists.output;
  EXPECT_EQ(cli::run(other).exit_code, cli::kUsage);
}

TEST(Cli, OracleCheck) {
  const auto r = cli::run(config(cli::Command::OracleCheck, 201, "6,3"));
  EXPECT_EQ(r.exit_code, 0) << r.error;
  const auto j = cli::json::parse(r.output);
  EXPECT_EQ(j["match"], true);
  EXPECT_EQ(j["bound"], 615);

  auto low = config(cli::Command::OracleCheck, 201, "6,3");
  low.oracle_bound = 5;
  const auto lr = cli::run(low);
  EXPECT_EQ(lr.exit_code, cli::kUsage);
  EXPECT_NE(lr.error.find("615"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli::run(config(cli::Command::Canonical, 12, "1,0")).exit_code, cli::kBadField);
  EXPECT_EQ(cli::run(config(cli::Command::Canonical, 0, "1,0")).exit_code, cli::kBadField);
  EXPECT_EQ(cli::run(config(cli::Command::Twists, 5, "0,0")).exit_code, cli::kZeroIdeal);
  EXPECT_EQ(cli::run(canonical_config(cli::Command::Twists, 5, "4,1,1")).exit_code, cli::kInvariant);

  cli::RunConfig none;
  none.d = 5;
  EXPECT_EQ(cli::run(none).exit_code, cli::kUsage);
  auto both = config(cli::Command::Twists, 5, "1,0");
  both.canonical = cli::parse_canonical("1,0,1");
  EXPECT_EQ(cli::run(both).exit_code, cli::kUsage);
}

TEST(Cli, CsvAndTable) {
  auto c = config(cli::Command::Twists, 201, "6,3");
  c.format = cli::Format::Csv;
  const auto csv = cli::run(c).output;
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 7);
  EXPECT_EQ(csv.rfind("index,a,c,b,d,f1,f2,beta,cos,alpha_float,", 0), 0u);

  c.command = cli::Command::Classes;
  c.format = cli::Format::Table;
  const auto table = cli::run(c).output;
  EXPECT_NE(table.find("102/205"), std::string::npos);
  EXPECT_NE(table.find("(2,-205,-1,102)"), std::string::npos);

  c.command = cli::Command::Canonical;
  c.format = cli::Format::Csv;
  EXPECT_EQ(cli::run(c).output, "t,y,g\n615,6,3\n");
}
