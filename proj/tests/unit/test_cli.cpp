#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "app.hpp"

using namespace locnil::cli;

namespace {

struct Result {
  int code = -1;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "locnilp");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  Result r;
  std::ostringstream out, err;
  RunConfig c;
  if (parse_args(static_cast<int>(argv.size()), argv.data(), c, r.code, out, err)) r.code = run(c, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

nlohmann::json parse(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, HelpAndUsageErrors) {
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"classify", "--q", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"classify", "--q", "2", "--field", "gf:3", "--format", "xml"}).code, kExitUsage);
  const Result bad_q = invoke({"classify", "--q", "4", "--field", "gf:3"});
  EXPECT_EQ(bad_q.code, kExitUsage);
  EXPECT_NE(bad_q.err.find("not prime"), std::string::npos);
  const Result bad_field = invoke({"classify", "--q", "2", "--field", "gf:9"});
  EXPECT_EQ(bad_field.code, kExitUsage);
  EXPECT_FALSE(bad_field.err.empty());
  EXPECT_EQ(invoke({"verify", "--q", "2", "--field", "gf:2", "--family", "H"}).code, kExitUsage);
}

TEST(Cli, ClassifyGF3) {
  const Result r = invoke({"classify", "--q", "2", "--field", "gf:3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = parse(r);
  EXPECT_EQ(j["schema"], 1);
  ASSERT_EQ(j["classes"].size(), 1u);
  EXPECT_EQ(j["classes"][0]["tag"], "PrimitiveG");
  EXPECT_EQ(j["classes"][0]["verified"]["order"], "16");
  EXPECT_EQ(j["count"]["total"], "1");
}

TEST(Cli, RationalStreamLimit) {
  const Result r = invoke({"classify", "--q", "2", "--field", "q", "--limit", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = parse(r);
  std::vector<std::string> alphas;
  for (const auto& c : j["classes"]) {
    if (c["tag"] == "MonomialH") alphas.push_back(c["parameters"]["alpha"]);
  }
  EXPECT_EQ(alphas, (std::vector<std::string>{"2", "3", "5"}));
  EXPECT_EQ(j["count"]["total"], "infinite");
}

TEST(Cli, ConjDiagonalExample) {
  const Result r = invoke({"conj", "--q", "2", "--field", "gf:7", "--kind", "Ia", "--a", "1,2", "--b", "2,1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = parse(r);
  EXPECT_EQ(j["conjugate"], true);
  EXPECT_EQ(j["oracle"]["conjugate"], true);
  const Result no = invoke({"conj", "--q", "2", "--field", "gf:7", "--kind", "Ia", "--a", "1,2", "--b", "1,1"});
  EXPECT_EQ(parse(no)["conjugate"], false);
  EXPECT_EQ(invoke({"conj", "--q", "2", "--field", "gf:7", "--kind", "Ia", "--a", "1,2,3", "--b", "1,1"}).code,
            kExitUsage);
}

TEST(Cli, VerifyPassesOnListedGroups) {
  for (auto [field, family] : {std::pair{"gf:3", "G"}, {"gf:5", "H"}, {"gf:5", "singer"}, {"q", "H"}}) {
    const Result r = invoke({"verify", "--q", "2", "--field", field, "--family", family});
    EXPECT_EQ(r.code, kExitOk) << field << " " << family << "\n" << r.out << r.err;
    EXPECT_EQ(parse(r)["passed"], true);
  }
}

TEST(Cli, OracleModes) {
  const Result ex = invoke({"oracle", "--q", "2", "--field", "gf:5", "--mode", "exhaustive"});
  ASSERT_EQ(ex.code, kExitOk) << ex.err;
  EXPECT_EQ(parse(ex)["agrees_with_classify"], true);
  const Result mx = invoke({"oracle", "--q", "2", "--field", "gf:3", "--mode", "maximality", "--family", "H"});
  ASSERT_EQ(mx.code, kExitOk) << mx.err;
  EXPECT_EQ(parse(mx)["result"]["maximal"], false);
  EXPECT_EQ(parse(mx)["listed"], false);
}

TEST(Cli, DeterministicAndCsv) {
  const std::vector<std::string> args{"verify", "--q", "2", "--field", "gf:7", "--family", "G", "--seed", "9"};
  const Result a = invoke(args), b = invoke(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, kExitOk);
  const Result csv = invoke({"classify", "--q", "2", "--field", "gf:5", "--format", "csv"});
  EXPECT_EQ(csv.out.rfind("tag,alpha,b,polynomial", 0), 0u);
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 3);
}

TEST(Cli, WritesOutputFile) {
  const std::string path = ::testing::TempDir() + "locnilp_out.json";
  const Result r = invoke({"props", "--q", "2", "--field", "gf:7", "--family", "G", "--output", path, "--timing"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["order"], "96");
  EXPECT_TRUE(j.contains("elapsed_ms"));
  std::remove(path.c_str());
}
