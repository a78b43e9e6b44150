#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "heislor/cli.hpp"
#include "heislor/errors.hpp"
#include "heislor/family_one.hpp"
#include "heislor/io.hpp"

namespace heislor {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::execute(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& s) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(s);
  std::string line;
  while (std::getline(is, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

TEST(Io, NumbersRoundTripWith17Digits) {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, std::nextafter(1.0, 2.0)}) {
    EXPECT_EQ(std::stod(io::format_number(v)), v);
  }
  EXPECT_EQ(io::format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(io::format_number(NAN), "nan");
  EXPECT_EQ(io::format_number(-INFINITY), "-inf");
}

TEST(Io, JsonIsValidAndOrdered) {
  const io::Json j = io::Json::Object{{"b", 1.5}, {"a", io::Json::Array{1, true, "q\"x"}}, {"n", NAN}, {"z", io::Json()}};
  const auto parsed = nlohmann::ordered_json::parse(j.dump());
  EXPECT_EQ(parsed.begin().key(), "b");
  EXPECT_EQ(parsed["a"][2], "q\"x");
  EXPECT_TRUE(parsed["n"].is_null());
  EXPECT_TRUE(parsed["z"].is_null());
}

TEST(Io, ObjFacesReferenceValidVertices) {
  std::vector<GroupElement> v(2 * 3 * 4);
  std::ostringstream os;
  io::write_obj(os, v, 3, 4, true, 2);
  int nv = 0, nf = 0;
  std::istringstream is(os.str());
  std::string tag;
  while (is >> tag) {
    if (tag == "v") {
      double x, y, z;
      is >> x >> y >> z;
      ++nv;
    } else if (tag == "f") {
      for (int k = 0; k < 4; ++k) {
        long idx;
        is >> idx;
        EXPECT_GE(idx, 1);
        EXPECT_LE(idx, 24);
      }
      ++nf;
    }
  }
  EXPECT_EQ(nv, 24);
  EXPECT_EQ(nf, 2 * 2 * 4);
  EXPECT_THROW(io::write_obj(os, v, 5, 5), InvalidArgument);
}

TEST(Cli, ExpCsvAndJson) {
  const auto r = run({"exp", "--family", "1", "--eps", "1", "--theta", "0", "--phi", "0", "--t", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"theta", "phi", "t", "x", "y", "z"}));
  EXPECT_EQ(std::stod(rows[1][3]), 2.0);
  const auto j = run({"exp", "--family", "2", "--eps", "1", "--theta", "1", "--t", "1", "--format", "json"});
  ASSERT_EQ(j.code, 0);
  const auto parsed = nlohmann::json::parse(j.out);
  const double x = parsed["point"][0];
  EXPECT_NEAR(x, 0.76130166175579015498, 1e-14);
}

TEST(Cli, DistExitCodes) {
  auto r = run({"dist", "--x", "2", "--y", "1", "--z", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(std::stod(parse_csv(r.out)[1][3]), std::sqrt(3.0), 1e-12);
  EXPECT_EQ(run({"dist", "--x", "0", "--y", "0", "--z", "1"}).code, cli::kDomainError);
  EXPECT_EQ(run({"dist", "--eps", "-1", "--x", "1"}).code, cli::kUsageError);
  EXPECT_EQ(run({"dist", "--x", "abc"}).code, cli::kUsageError);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsageError);
  EXPECT_EQ(run({"nope"}).code, cli::kUsageError);
  EXPECT_EQ(run({"exp", "--bogus", "1"}).code, cli::kUsageError);
  EXPECT_EQ(run({"exp", "--format", "obj"}).code, cli::kUsageError);
  EXPECT_EQ(run({"exp", "--format", "xml"}).code, cli::kUsageError);
  EXPECT_EQ(run({"exp", "--family", "3"}).code, cli::kUsageError);
}

TEST(Cli, AttainInvertAndDomainErrors) {
  auto r = run({"attain", "--x", "1", "--y", "1", "--z", "0"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse_csv(r.out)[1][3], "boundary");
  r = run({"attain", "--family", "0", "--x", "2", "--z", "1.5", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["status"], "exterior");
  r = run({"invert", "--x", "1.5430806348152437785", "--y", "0.71308403638379169838", "--z", "1.1510288304584062678"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(run({"invert", "--x", "0", "--y", "0", "--z", "1"}).code, cli::kDomainError);
  EXPECT_EQ(run({"periodic", "--eps", "1", "--t1", "2.5", "--t2", "10"}).code, cli::kDomainError);
}

TEST(Cli, MeshCommandsWriteObj) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"sphere", "--theta-count", "4", "--phi-count", "5", "--format", "obj"},
        std::vector<std::string>{"surface", "--alpha-count", "4", "--tau-count", "5", "--both-sheets", "--format", "obj"},
        std::vector<std::string>{"pmp-surface", "--phi-count", "6", "--h3-count", "4", "--format", "obj"}}) {
    const auto r = run(args);
    ASSERT_EQ(r.code, 0) << args[0] << ": " << r.err;
    EXPECT_NE(r.out.find("\nf "), std::string::npos) << args[0];
  }
}

TEST(Cli, PeriodicReachAndConvergence) {
  auto r = run({"periodic", "--eps", "0.5", "--repeat", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_LT(j["closure_residual"].get<double>(), 1e-12);
  EXPECT_LT(j["rk4_closure_residual"].get<double>(), 1e-9);
  EXPECT_EQ(j["segments"].size(), 6u);
  r = run({"reach", "--x", "0", "--y", "0", "--z", "-1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_LT(nlohmann::json::parse(r.out)["residual"].get<double>(), 1e-9);
  r = run({"converge-exp", "--psi", "0.3", "--c", "1", "--t", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_csv(r.out).size(), 4u);
  EXPECT_EQ(run({"converge-exp", "--eps-list", "0.1,1"}).code, cli::kUsageError);
  EXPECT_EQ(run({"converge-attain", "--x", "2", "--z", "1.5", "--eps-list", "1,0.1,0.001"}).code, 0);
  EXPECT_EQ(run({"converge-sphere", "--psi-count", "6", "--c-count", "6"}).code, 0);
  r = run({"oracle-check", "--family", "1", "--theta", "0.5", "--phi", "1", "--t", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_LT(nlohmann::json::parse(r.out)["max_error"].get<double>(), 1e-9);
  r = run({"conjugate-scan", "--theta-count", "8", "--tau-count", "71", "--theta-max", "0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
}

TEST(Cli, OutputFile) {
  const std::string path = ::testing::TempDir() + "heislor_cli_out.csv";
  ASSERT_EQ(run({"exp", "--t", "1", "--output", path}).code, 0);
  std::ifstream f(path);
  std::string header;
  std::getline(f, header);
  EXPECT_EQ(header, "theta,phi,t,x,y,z");
}

}  // namespace
}  // namespace heislor
