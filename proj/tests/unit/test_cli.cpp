#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "json_io.hpp"

namespace kltan {
namespace {

using io::json;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

json run_json(std::vector<std::string> args) {
  const auto r = run(std::move(args));
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  return json::parse(r.out);
}

TEST(Cli, TangentA2Json) {
  const json j = run_json({"tangent", "A2", "--x", "1 2 1", "--w", "1", "--json"});
  EXPECT_EQ(j.at("schema_version"), io::kSchemaVersion);
  EXPECT_EQ(j.at("command"), "tangent");
  ASSERT_EQ(j.at("statuses").size(), 3u);
  EXPECT_EQ(j["statuses"][0]["verdict"], "In");
  EXPECT_EQ(j["statuses"][1]["verdict"], "Undetermined");
  EXPECT_EQ(j["statuses"][2]["verdict"], "In");
  EXPECT_EQ(j["statuses"][1]["weight"]["coeffs"], json({1, 1}));
  EXPECT_FALSE(j["statuses"][1]["evidence"]["indecomposable"].get<bool>());
  ASSERT_EQ(j.at("kl_tangent_weights").size(), 2u);
  EXPECT_EQ(j["kl_tangent_weights"][0]["coeffs"], json({1, 0}));
  EXPECT_EQ(j["kl_tangent_weights"][1]["coeffs"], json({0, 1}));
  EXPECT_TRUE(j.at("parabolic").is_null());
}

TEST(Cli, TypeAOracleFlag) {
  const json j = run_json({"tangent", "A2", "--x", "1 2 1", "--w", "1", "--type-a-oracle", "--json"});
  EXPECT_EQ(j["statuses"][1]["verdict"], "Out");
  EXPECT_TRUE(j["statuses"][1]["evidence"]["oracle_applied"].get<bool>());
  EXPECT_TRUE(j.at("complete").get<bool>());
}

TEST(Cli, ParabolicJson) {
  const json j = run_json({"tangent", "A2", "--x", "2 1", "--w", "1", "--parabolic", "2", "--json"});
  EXPECT_EQ(j.at("parabolic"), json({2}));
  const auto r = run({"tangent", "A2", "--x", "1 2", "--w", "1", "--parabolic", "2", "--json"});
  EXPECT_EQ(r.code, cli::kExitDomainError);
  EXPECT_EQ(json::parse(r.out)["error"]["kind"], "NotMinimalCosetRep");
}

TEST(Cli, DemazureExcess) {
  const json j = run_json({"demazure", "A2", "1 1"});
  EXPECT_EQ(j.at("excess"), 1);
  EXPECT_EQ(j.at("length"), 2);
  EXPECT_EQ(j["delta"]["word"], json({1}));

  const json k = run_json({"demazure", "A2", "1 2 1 2"});
  EXPECT_EQ(k["delta"]["word"], json({1, 2, 1}));
  EXPECT_EQ(k.at("excess"), 1);
}

TEST(Cli, SubwordComplexJson) {
  const json j = run_json({"subword-complex", "A2", "1 2 1", "1"});
  EXPECT_EQ(j.at("dimension"), 1);
  EXPECT_EQ(j["euler"]["interior"], -1);
  for (const auto& f : j.at("facets")) EXPECT_EQ(f.size(), 2u);
}

TEST(Cli, KClassJson) {
  const json j = run_json({"kclass", "A1", "--x", "1", "--w", "1", "--json"});
  ASSERT_EQ(j.at("class").size(), 2u);
  EXPECT_FALSE(j.at("class_string").get<std::string>().empty());
  const LaurentPoly p = io::poly_from_json(1, j["class"]);
  LaurentPoly expected = LaurentPoly::constant(1, 1);
  expected.add_term(LatticeVector{-1}, -1);
  EXPECT_EQ(p, expected);
}

TEST(Cli, Cominuscule) {
  const json yes = run_json({"cominuscule", "A3", "--x", "2 1 3 2", "--json"});
  EXPECT_TRUE(yes.at("cominuscule").get<bool>());
  EXPECT_TRUE(yes.at("avoids_321").get<bool>());
  const json no = run_json({"cominuscule", "A2", "--x", "1 2 1", "--json"});
  EXPECT_FALSE(no.at("cominuscule").get<bool>());
  EXPECT_FALSE(no.at("avoids_321").get<bool>());
}

TEST(Cli, ExitCodes) {
  auto r = run({"tangent", "A2", "--x", "1", "--w", "1 2", "--json"});
  EXPECT_EQ(r.code, cli::kExitDomainError);
  const json e = json::parse(r.out);
  EXPECT_EQ(e.at("schema_version"), io::kSchemaVersion);
  EXPECT_EQ(e["error"]["kind"], "NotBelow");

  r = run({"tangent", "Q7", "--x", "1", "--w", "1"});
  EXPECT_EQ(r.code, cli::kExitDomainError);
  EXPECT_NE(r.err.find("error:"), std::string::npos);

  r = run({"demazure", "A2", "1 3"});
  EXPECT_EQ(r.code, cli::kExitDomainError);

  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"tangent", "A2", "--x", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "A2", "--max-rank-guard", "zero"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST(Cli, RankGuard) {
  const auto r = run({"verify", "A3", "--max-rank-guard", "2", "--json"});
  EXPECT_EQ(r.code, cli::kExitDomainError);
  EXPECT_EQ(json::parse(r.out)["error"]["kind"], "GroupTooLarge");
}

TEST(Cli, VerifyA3) {
  const auto r = run({"verify", "A3"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(Cli, JsonRoundTripAndDeterminism) {
  const std::vector<std::vector<std::string>> commands = {
      {"tangent", "B3", "--x", "1 2 3 2 1", "--w", "2", "--json"},
      {"tangent", "G2", "--x", "1 2 1 2", "--w", "1 2", "--type-a-oracle", "--json"},
      {"kclass", "A3", "--x", "1 2 3 1", "--w", "1", "--json"},
      {"demazure", "D4", "1 2 3 4 2 2"},
      {"subword-complex", "A3", "1 2 3 1 2 1", "1 2 1"},
      {"cominuscule", "C3", "--x", "3 2 3", "--json"},
      {"verify", "A2", "--json"},
  };
  for (const auto& args : commands) {
    const auto first = run(args);
    const auto second = run(args);
    ASSERT_EQ(first.code, cli::kExitOk) << first.err;
    EXPECT_EQ(first.out, second.out) << args[0];
    EXPECT_EQ(io::dump(json::parse(first.out)), first.out) << args[0];
  }
}

TEST(Cli, VerifyJsonHasNoTiming) {
  const json j = run_json({"verify", "A2", "--json"});
  EXPECT_TRUE(j.at("passed").get<bool>());
  for (const auto& s : j.at("suites")) EXPECT_FALSE(s.contains("seconds"));
}

}  // namespace
}  // namespace kltan
