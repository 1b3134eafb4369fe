#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "asymexp/cli.hpp"

namespace fs = std::filesystem;
using asymexp::cli::kExitInput;
using asymexp::cli::kExitNumerical;
using asymexp::cli::kExitOk;
using asymexp::cli::kExitUsage;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("asymexp_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Outcome run(std::vector<std::string> args) const {
    args.insert(args.begin(), "asymexp");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    Outcome o;
    o.code = asymexp::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    o.out = out.str();
    o.err = err.str();
    return o;
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string read(const std::string& name) const {
    std::ifstream in(dir_ / name);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  std::vector<std::string> lines(const std::string& name) const {
    std::vector<std::string> out;
    std::istringstream in(read(name));
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
  }

  void write(const std::string& name, const std::string& text) const { std::ofstream(dir_ / name) << text; }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, TransformArctan) {
  const auto o = run({"transform", "--input", "arctan", "--m", "32", "--out", path("t.csv")});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const auto rows = lines("t.csv");
  ASSERT_EQ(rows.size(), 33u);
  EXPECT_EQ(rows[0], "n,c_n,c_n_star,c_n_star_decimal");
  EXPECT_EQ(rows[1 + 14], "14,0,-64/7,-9.142857143");
  EXPECT_EQ(rows[1 + 25], "25,1/25,4096/25,163.84");
  EXPECT_NE(o.out.find("radius estimate (lag 4)"), std::string::npos);
}

TEST_F(Cli, TransformPoleAndConstant) {
  ASSERT_EQ(run({"transform", "--input", "pole:1", "--m", "4", "--out", path("p.csv")}).code, kExitOk);
  EXPECT_EQ(lines("p.csv"), (std::vector<std::string>{"n,c_n,c_n_star,c_n_star_decimal", "0,1,1,1", "1,-1,-1,-1",
                                                      "2,1,0,0", "3,-1,0,0"}));
  write("five.csv", "n,numerator,denominator\n0,5,1\n");
  ASSERT_EQ(run({"transform", "--input", "file:" + path("five.csv"), "--m", "1", "--out", path("c.csv")}).code,
            kExitOk);
  EXPECT_EQ(lines("c.csv").at(1), "0,5,5,5");
}

TEST_F(Cli, ContinueArctan) {
  const auto o = run({"continue", "--input", "arctan", "--m", "701", "--dx", "0.25", "--alpha", "0.1", "--count", "2",
                      "--out", path("c.json")});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const auto doc = nlohmann::json::parse(read("c.json"));
  const auto q0 = asymexp::Decimal::parse(doc["qprime"][0].get<std::string>(), 0);
  const auto q1 = asymexp::Decimal::parse(doc["qprime"][1].get<std::string>(), 0);
  EXPECT_LE((q0 - asymexp::Decimal::parse("1.570796327", 0)).abs(), asymexp::Decimal::parse("1e-4", 0));
  EXPECT_LE((q1 + asymexp::Decimal::exact(1)).abs(), asymexp::Decimal::parse("1e-2", 0));
  EXPECT_EQ(doc["steps"].size(), 4u);
  EXPECT_EQ(doc["steps"][0]["consumed"], 701);
  EXPECT_GE(doc["converged_count"].get<long>(), 2);
}

TEST_F(Cli, ContinuePoleAtHighPrecision) {
  const auto o = run({"continue", "--input", "pole:1", "--m", "50", "--dx", "0.25", "--alpha", "1e-30", "--digits",
                      "38", "--count", "3", "--out", path("c.json")});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const auto doc = nlohmann::json::parse(read("c.json"));
  EXPECT_EQ(doc["qprime"], nlohmann::json({"0", "1", "0"}));
}

TEST_F(Cli, ContinueErrors) {
  EXPECT_EQ(run({"continue", "--dx", "0.3", "--out", path("x.json")}).code, kExitNumerical);
  const auto stalled = run({"continue", "--m", "701", "--dx", "0.5", "--count", "2", "--out", path("s.json")});
  EXPECT_EQ(stalled.code, kExitNumerical);
  EXPECT_NE(stalled.err.find("InsufficientConvergedCoefficients"), std::string::npos);
  const auto doc = nlohmann::json::parse(read("s.json"));
  EXPECT_TRUE(doc.contains("note"));
  EXPECT_TRUE(doc["qprime"].is_null());
  EXPECT_EQ(run({"continue", "--m", "98", "--dx", "0.125", "--out", path("e.json")}).code, kExitNumerical);
  EXPECT_EQ(run({"continue", "--alpha", "abc", "--out", path("a.json")}).code, kExitInput);
  EXPECT_EQ(run({"continue", "--m", "ten", "--out", path("a.json")}).code, kExitUsage);
  EXPECT_EQ(run({"continue"}).code, kExitUsage);
}

TEST_F(Cli, ConvertRoundTripIsBitExact) {
  write("qp.csv", "n,numerator,denominator\n0,0,1\n1,1,1\n2,0,1\n3,0,1\n");
  ASSERT_EQ(run({"convert", "--input", path("qp.csv"), "--direction", "to-q", "--out", path("q.csv")}).code, kExitOk);
  EXPECT_EQ(lines("q.csv"), (std::vector<std::string>{"n,numerator,denominator", "0,0,1", "1,1,1", "2,-1,1", "3,1,1"}));
  ASSERT_EQ(run({"convert", "--input", "file:" + path("q.csv"), "--direction", "to-qprime", "--out", path("back.csv")})
                .code,
            kExitOk);
  EXPECT_EQ(read("back.csv"), read("qp.csv"));
}

TEST_F(Cli, ConvertSingleValueAndErrors) {
  write("one.csv", "n,numerator,denominator\n0,-7,2\n");
  for (const char* direction : {"to-q", "to-qprime"}) {
    ASSERT_EQ(run({"convert", "--input", path("one.csv"), "--direction", direction, "--out", path("o.csv")}).code,
              kExitOk);
    EXPECT_EQ(read("o.csv"), read("one.csv"));
  }
  write("bad.csv", "n,numerator,denominator\n0,1\n");
  EXPECT_EQ(run({"convert", "--input", path("bad.csv"), "--out", path("o.csv")}).code, kExitInput);
  EXPECT_EQ(run({"convert", "--input", path("one.csv"), "--direction", "sideways", "--out", path("o.csv")}).code,
            kExitUsage);
  EXPECT_EQ(run({"convert", "--input", path("one.csv"), "--out", path("o.json")}).code, kExitInput);
}

TEST_F(Cli, ConvertDecimalJson) {
  write("d.json", R"(["0", "1", "0", "0"])");
  ASSERT_EQ(run({"convert", "--input", path("d.json"), "--out", path("q.json")}).code, kExitOk);
  const auto doc = nlohmann::json::parse(read("q.json"));
  EXPECT_EQ(doc["coefficients"], nlohmann::json({"0", "1", "-1", "1"}));
}

TEST_F(Cli, DirectPoleConverges) {
  ASSERT_EQ(run({"direct", "--input", "pole:2", "--k", "0", "--schedule", "5..30", "--out", path("d.csv")}).code,
            kExitOk);
  const auto rows = lines("d.csv");
  ASSERT_EQ(rows.size(), 27u);
  EXPECT_EQ(rows[1], "5,0.015625,false");
  EXPECT_EQ(rows.back().substr(rows.back().rfind(',') + 1), "true");
}

TEST_F(Cli, DirectArctanDiverges) {
  const auto o = run({"direct", "--input", "arctan", "--k", "0", "--schedule", "5..30", "--out", path("d.csv")});
  ASSERT_EQ(o.code, kExitOk);
  EXPECT_NE(o.out.find("not converged"), std::string::npos);
  for (const auto& row : lines("d.csv")) EXPECT_EQ(row.find(",true"), std::string::npos);
}

TEST_F(Cli, DirectEmptyAndInvalidSchedules) {
  ASSERT_EQ(run({"direct", "--out", path("e.csv")}).code, kExitOk);
  EXPECT_EQ(lines("e.csv"), std::vector<std::string>{"m,partial,converged"});
  EXPECT_EQ(run({"direct", "--schedule", "10,5", "--out", path("x.csv")}).code, kExitInput);
  EXPECT_EQ(run({"direct", "--schedule", "5..30", "--m", "20", "--out", path("x.csv")}).code, kExitInput);
  EXPECT_EQ(asymexp::cli::parse_schedule("10..30:10"), (std::vector<long>{10, 20, 30}));
  EXPECT_EQ(asymexp::cli::parse_schedule("1,4,9"), (std::vector<long>{1, 4, 9}));
  EXPECT_TRUE(asymexp::cli::parse_schedule("").empty());
}

TEST_F(Cli, SweepSingleCell) {
  ASSERT_EQ(run({"sweep", "--m", "701", "--dx", "0.25", "--alpha", "0.1", "--out", path("s.csv")}).code, kExitOk);
  const auto rows = lines("s.csv");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1].rfind("701,0.25,0.1,19,1.5707", 0), 0u) << rows[1];
  EXPECT_EQ(rows[1].substr(rows[1].rfind(',') + 1), "ok");
}

TEST_F(Cli, SweepConcurrentEqualsSequentialAndIsOrdered) {
  const std::vector<std::string> grid{"sweep", "--m", "201,98", "--dx", "0.5,0.125,0.25", "--alpha", "0.1,0.01"};
  auto seq = grid;
  seq.insert(seq.end(), {"--jobs", "1", "--out", path("seq.csv")});
  auto par = grid;
  par.insert(par.end(), {"--jobs", "4", "--out", path("par.csv")});
  ASSERT_EQ(run(seq).code, kExitOk);
  ASSERT_EQ(run(par).code, kExitOk);
  EXPECT_EQ(read("seq.csv"), read("par.csv"));
  const auto rows = lines("seq.csv");
  ASSERT_EQ(rows.size(), 13u);
  EXPECT_EQ(rows[1].rfind("98,0.125,0.01,", 0), 0u);
  EXPECT_EQ(rows[2].rfind("98,0.125,0.1,", 0), 0u);
  EXPECT_EQ(rows[12].rfind("201,0.5,0.1,", 0), 0u);
  // Cells that run out of coefficients are recorded, not fatal.
  EXPECT_NE(read("seq.csv").find("EmptyState"), std::string::npos);
}

TEST_F(Cli, SweepJsonAndReferenceFreeInput) {
  write("f.csv", "n,numerator,denominator\n0,1,2\n1,-1,4\n2,1,8\n3,-1,16\n4,1,32\n5,-1,64\n6,1,128\n7,-1,256\n");
  ASSERT_EQ(run({"sweep", "--input", "file:" + path("f.csv"), "--m", "8", "--dx", "0.5", "--alpha", "1e-3", "--out",
                 path("s.json")})
                .code,
            kExitOk);
  const auto doc = nlohmann::json::parse(read("s.json"));
  ASSERT_EQ(doc["rows"].size(), 1u);
  EXPECT_TRUE(doc["rows"][0]["err0"].is_null());
}

TEST_F(Cli, SweepRejectsNonIntegralStep) {
  EXPECT_EQ(run({"sweep", "--m", "98", "--dx", "0.25,0.3", "--out", path("s.csv")}).code, kExitNumerical);
}

TEST_F(Cli, ConfigFileWithFlagOverride) {
  write("cfg.json", R"({"m": [98], "dx": ["0.25", "0.5"], "alpha": "0.1", "out": ")" + path("cfg.csv") + R"("})");
  ASSERT_EQ(run({"sweep", "--config", path("cfg.json")}).code, kExitOk);
  EXPECT_EQ(lines("cfg.csv").size(), 3u);
  ASSERT_EQ(run({"sweep", "--config", path("cfg.json"), "--dx", "0.25"}).code, kExitOk);
  EXPECT_EQ(lines("cfg.csv").size(), 2u);
  write("bad.json", R"({"colour": "blue"})");
  EXPECT_EQ(run({"sweep", "--config", path("bad.json"), "--out", path("x.csv")}).code, kExitUsage);
  EXPECT_EQ(run({"sweep", "--config", path("none.json"), "--out", path("x.csv")}).code, kExitInput);
}

TEST_F(Cli, HelpAndUnknownCommand) {
  EXPECT_EQ(run({"--help"}).code, kExitOk);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
}
