#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include <birkhoff/constructions.hpp>
#include <birkhoff/dimension.hpp>
#include <birkhoff_cli/cli.hpp>
#include <birkhoff_cli/io.hpp>

namespace birkhoff::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("birkhoff_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& content) const {
    std::ofstream(path(name)) << content;
    return path(name);
  }
  fs::path dir_;
};

TEST_F(CliTest, ConstructThenEndpoints) {
  const std::string f = path("ex23.json");
  ASSERT_EQ(invoke({"construct", "--out", f, "example23"}).code, 0);
  EXPECT_EQ(read_pcc_file(f), example23());
  const Result r = invoke({"endpoints", "--input", f});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["alpha_star_min"].get<double>(), -2.0);
  EXPECT_EQ(j["alpha_star_max"].get<double>(), 2.0);
  EXPECT_EQ(j["witness_max"].get<std::string>(), "1");
}

TEST_F(CliTest, PccRoundTrip) {
  const PccFunction f = remark55_biased(3);
  EXPECT_EQ(parse_pcc_json(pcc_to_json(f)), f);
  EXPECT_THROW(parse_pcc_json("{\"depth\": 2, \"values\": [1, 2, 3]}"), std::exception);
  EXPECT_THROW(parse_pcc_json("not json"), InputError);
}

TEST_F(CliTest, Eggleston) {
  const Result r = invoke({"dim", "eggleston", "--alpha", "0.25"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(nlohmann::json::parse(r.out)["dimension"].get<double>(), 0.8112781244591328, 1e-15);
}

TEST_F(CliTest, Moran) {
  const std::string b = write("blocks.json", R"({"blocks": ["000", "001"]})");
  const Result r = invoke({"dim", "moran", "--blocks", b});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(nlohmann::json::parse(r.out)["dimension"].get<double>(), 1.0 / 3.0, 1e-14);
}

TEST_F(CliTest, GoldenSpectrum) {
  const fs::path golden = fs::path(BIRKHOFF_TEST_DATA) / "indicator_spectrum_11.csv";
  const std::string expected = slurp(golden);
  ASSERT_FALSE(expected.empty());
  // the frozen file itself agrees with the closed form
  std::istringstream rows(expected);
  std::string line;
  std::getline(rows, line);
  EXPECT_EQ(line, "alpha,s");
  int n = 0;
  while (std::getline(rows, line)) {
    double a = 0, s = 0;
    ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf", &a, &s), 2);
    EXPECT_NEAR(s, eggleston_dimension(a), 1e-8);
    ++n;
  }
  EXPECT_EQ(n, 11);

  const std::string f = path("ind.json");
  ASSERT_EQ(invoke({"construct", "--out", f, "example-indicator"}).code, 0);
  const std::string csv = path("s.csv");
  ASSERT_EQ(invoke({"spectrum", "--input", f, "--grid", "11", "--out", csv}).code, 0);
  EXPECT_EQ(slurp(csv), expected);
  EXPECT_EQ(invoke({"spectrum", "--input", f, "--grid", "11"}).out, expected);
}

TEST_F(CliTest, Deterministic) {
  const std::string f = path("maj.json");
  ASSERT_EQ(invoke({"construct", "--out", f, "majority", "--k", "2"}).code, 0);
  const auto a = invoke({"spectrum", "--input", f, "--grid", "17"});
  const auto b = invoke({"spectrum", "--input", f, "--grid", "17"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(invoke({"oracle", "sample", "--input", f, "--seed", "4", "--N", "50"}).out,
            invoke({"oracle", "sample", "--input", f, "--seed", "4", "--N", "50"}).out);
}

TEST_F(CliTest, SubcommandsProduceJson) {
  const std::string ind = path("ind.json");
  ASSERT_EQ(invoke({"construct", "--out", ind, "example-indicator"}).code, 0);
  const std::string ex = path("ex.json");
  ASSERT_EQ(invoke({"construct", "--out", ex, "example23"}).code, 0);

  auto json = [](const Result& r) {
    EXPECT_EQ(r.code, 0) << r.err;
    return nlohmann::json::parse(r.out);
  };
  EXPECT_NEAR(json(invoke({"endpoint-dim", "--input", ex, "--side", "max"}))["dimension"].get<double>(),
              0.5514630897455955, 1e-12);
  EXPECT_EQ(json(invoke({"derivative", "--input", ind, "--side", "max", "--deltas", "0.1,0.01"}))["slopes"].size(), 2U);
  EXPECT_EQ(json(invoke({"oracle", "cycles", "--input", ind, "--max-period", "2"}))["cycles"].size(), 3U);
  EXPECT_EQ(json(invoke({"oracle", "count", "--input", ind, "--alpha", "0.5", "--delta", "0.05", "--N", "20"}))["count"],
            520676);
  EXPECT_TRUE(json(invoke({"oracle", "cover", "--a", "-1", "--b", "1", "--L", "6", "--beta", "0.25", "--N", "7"}))["pass"]);
  EXPECT_EQ(json(invoke({"oracle", "n0", "--input", ex, "--eps", "1"}))["n0"], 33);
  EXPECT_TRUE(json(invoke({"check", "norm-continuity", "--f", ex, "--g", ex, "--eps", "0.1", "--grid", "5"}))["pass"]);
  const auto t41 = json(invoke({"construct", "thm41", "--base", ind, "--eps", "0.5"}));
  EXPECT_EQ(t41["ell"], 81);
  EXPECT_GT(t41["b_star"].get<double>(), t41["threshold"].get<double>());
  const auto drv = parse_pcc_json(invoke({"construct", "derevealize", "--base", ind, "--eps", "0.7"}).out);
  EXPECT_EQ(drv.depth(), 2U);
  const auto l45 = parse_pcc_json(invoke({"construct", "lemma45", "--base", ex, "--eps", "0.5", "--depth", "9"}).out);
  EXPECT_EQ(l45.depth(), 9U);
  const auto t52 = parse_pcc_json(invoke({"construct", "thm52", "--levels", "2", "--L", "6,8"}).out);
  EXPECT_EQ(t52.depth(), 8U);
  const auto l53 = parse_pcc_json(invoke({"construct", "lemma53", "--a", "-1", "--b", "1", "--L", "6"}).out);
  EXPECT_EQ(l53, lemma53(-1.0, 1.0, 6));
}

TEST_F(CliTest, ErrorsLeaveNoPartialFiles) {
  const std::string f = path("ind.json");
  ASSERT_EQ(invoke({"construct", "--out", f, "example-indicator"}).code, 0);
  const std::string csv = path("bad.csv");

  Result r = invoke({"spectrum", "--input", f, "--grid", "2", "--out", csv});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("error: usage:", 0), 0U);

  r = invoke({"construct", "--out", csv, "lemma53", "--a", "1", "--b", "0", "--L", "6"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.err.rfind("error: precondition:", 0), 0U);

  r = invoke({"construct", "--out", csv, "thm52", "--levels", "2", "--L", "6,17"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("lazily"), std::string::npos);

  const std::string broken = write("broken.json", "{\"depth\": 1, \"values\": [0]");
  r = invoke({"endpoints", "--input", broken, "--out", csv});
  EXPECT_EQ(r.code, 5);
  EXPECT_EQ(r.err.rfind("error: input:", 0), 0U);

  EXPECT_EQ(invoke({"bogus"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_FALSE(fs::exists(csv));
  for (const auto& e : fs::directory_iterator(dir_)) EXPECT_NE(e.path().extension(), ".tmp");
}

TEST_F(CliTest, Help) {
  const Result r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("spectrum"), std::string::npos);
}

}  // namespace
}  // namespace birkhoff::cli
