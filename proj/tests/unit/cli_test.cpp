#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

using zdk::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "zdk");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  const auto p = std::filesystem::temp_directory_path() / ("zdk_cli_" + name);
  std::ofstream(p) << body;
  return p;
}

}  // namespace

TEST(Cli, VerifySymfuncDefaultsPass) {
  const auto r = run({"verify-symfunc", "--trials", "30"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(r.out.rfind("check,m,trials,worst_residual", 0), 0u);
}

TEST(Cli, VerifySymfuncImpossibleToleranceFails) {
  const auto r = run({"verify-symfunc", "--m", "3", "--trials", "5", "--tol", "1e-30"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, VerifySymfuncDegreeOne) {
  EXPECT_EQ(run({"verify-symfunc", "--m", "1", "--trials", "5", "--tol", "0"}).code, 0);
}

TEST(Cli, ZeroPipelineModFour) {
  const auto r = run({"zeros", "--q", "4", "--T", "50"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(r.out.rfind("statistic,T,alpha,value,bound\n", 0), 0u);
  EXPECT_NE(r.out.find("detector_residual"), std::string::npos);
  EXPECT_NE(r.out.find("rvm_gap"), std::string::npos);
}

TEST(Cli, MissingZeroFileIsInputError) {
  const auto r = run({"fujii", "--zeros", "/nonexistent/zeros.txt", "--T", "20"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("parse error"), std::string::npos);
}

TEST(Cli, HeightBeyondDatasetIsInputError) {
  const auto f = temp_file("three.txt", "14.134725\n21.022040\n25.010858\n");
  EXPECT_EQ(run({"fujii", "--zeros", f.string(), "--Tmax", "30", "--T", "100"}).code, 2);
  const auto ok = run({"fujii", "--zeros", f.string(), "--Tmax", "30", "--T", "30"});
  EXPECT_EQ(ok.code, 0) << ok.err;
}

TEST(Cli, SieveRejectsZeroCount) { EXPECT_EQ(run({"sieve", "--samples", "0"}).code, 2); }

TEST(Cli, SieveIsDeterministic) {
  const std::vector<std::string> args{"sieve", "--m", "2", "--samples", "3000", "--seed", "5", "--mu-x", "10",
                                      "--x", "10", "--support", "5", "--max-size", "2"};
  const auto a = run(args);
  auto with_workers = args;
  with_workers.insert(with_workers.end(), {"--workers", "3"});
  const auto b = run(with_workers);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j.at("spec").at("seed"), 5);
  EXPECT_TRUE(j.at("gram").at("entries").at(0).contains("stderr"));
}

TEST(Cli, ConfigFileWithFlagOverride) {
  const auto cfg = temp_file("cfg.json", R"({"m": 3, "q": 12, "theta": 0.1})");
  const auto r = run({"--config", cfg.string(), "family-scalers"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("index_V,3,12,0.1,364"), std::string::npos);
  const auto o = run({"--config", cfg.string(), "family-scalers", "--q", "2"});
  EXPECT_NE(o.out.find("index_V,3,2,0.1,7"), std::string::npos);
}

TEST(Cli, BadInputs) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"count", "--nope", "1"}).code, 2);
  EXPECT_EQ(run({"count", "--T", "abc"}).code, 2);
  EXPECT_EQ(run({"detect", "--q", "3", "--delta", "0.7"}).code, 2);
  EXPECT_EQ(run({"coeffs", "--q", "6"}).code, 2);
  const auto bad = temp_file("bad.json", "{not json");
  EXPECT_EQ(run({"--config", bad.string(), "count"}).code, 2);
}

TEST(Cli, OutputFile) {
  const auto p = std::filesystem::temp_directory_path() / "zdk_cli_coeffs.csv";
  const auto r = run({"coeffs", "--N", "12", "--kind", "mu", "--out", p.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(p);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "n,re,im");
}
