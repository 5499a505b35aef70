#include <gtest/gtest.h>

#include <filesystem>

#include "cli.hpp"
#include "nalg/json_io.hpp"

using namespace nalg;
using nalg::cli::run;

namespace {

class Cli : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("alg_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string make(std::vector<std::string> args, const std::string& name) {
    args.insert(args.begin(), "construct");
    args.push_back("-o");
    args.push_back(path(name));
    const auto r = run(args);
    EXPECT_EQ(r.exit_code, 0) << r.error;
    return path(name);
  }

  std::filesystem::path dir_;
};

} // namespace

TEST_F(Cli, ConstructWritesDocument) {
  const std::string f = make({"--kind", "tower", "--level", "3", "--field", "rational"}, "a3.json");
  const AlgebraDocument doc = document_from_json(read_json_file(f));
  EXPECT_EQ(doc.algebra.dim(), 8u);
  EXPECT_TRUE(doc.conj.has_value());
  const auto r = run({"construct", "--kind", "U", "--field", "prime:5"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(Json::parse(r.output)["field"]["p"], 5);
}

TEST_F(Cli, DecideExitCodes) {
  const std::string u3 = make({"--kind", "U", "--field", "prime:3"}, "u_f3.json");
  auto r = run({"decide", "--question", "vnf", "--method", "oracle", u3});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output.rfind("vnf: yes (oracle)", 0), 0u) << r.output;

  const std::string d3 = make({"--kind", "division3", "--field", "prime:3"}, "div3.json");
  r = run({"decide", "--question", "vnf", "--method", "auto", d3});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("vnf: no (oracle)"), std::string::npos) << r.output;
  EXPECT_NE(r.output.find("ab = "), std::string::npos);

  const std::string uq = make({"--kind", "U"}, "u_q.json");
  r = run({"decide", "--question", "reversible", "--method", "fast", uq});
  EXPECT_EQ(r.exit_code, 2) << r.output;
  r = run({"decide", "--question", "reversible", "--method", "auto", uq});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("witness-search"), std::string::npos) << r.output;
  r = run({"decide", "--question", "vnf", "--method", "oracle", uq});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.error.find("prime field"), std::string::npos);
}

TEST_F(Cli, DecideJsonAndDeterminism) {
  const std::string z = make({"--kind", "split-hurwitz", "--dim", "8", "--field", "prime:3"}, "z.json");
  const auto a = run({"decide", "--question", "reversible", "--method", "oracle", "--json", z});
  const auto b = run({"decide", "--question", "reversible", "--method", "oracle", "--json", "--workers",
                      "4", z});
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.output, b.output);
  const Json j = Json::parse(a.output);
  EXPECT_EQ(j["status"], "no");
  const Verdict v = verdict_from_json(j, FieldDesc::prime(3));
  const Algebra alg = algebra_from_json(read_json_file(z));
  EXPECT_TRUE(witness_valid(alg, Question::Reversible, v.witness->a, v.witness->b));
  const auto c = run({"decide", "--question", "vnf", "--method", "oracle", "--budget", "10", z});
  EXPECT_EQ(c.exit_code, 1);
}

TEST_F(Cli, Criterion) {
  const std::string h = make({"--kind", "H", "--field", "prime:3"}, "h.json");
  const auto r = run({"decide", "--question", "reversible", "--method", "criterion", h});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("reversible: no (criterion)"), std::string::npos);
  EXPECT_NE(r.output.find("subalgebra:"), std::string::npos);
}

TEST_F(Cli, TableMatchesFixtures) {
  const std::string h = make({"--kind", "H"}, "h.json");
  auto r = run({"table", h});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output,
            " * |  1  i  j  k\n"
            "---+------------\n"
            " 1 |  1  i  j  k\n"
            " i |  i  1  k  j\n"
            " j |  j -k  1 -i\n"
            " k |  k -j  i -1\n");
  const std::string u = make({"--kind", "U", "--field", "prime:3"}, "u.json");
  r = run({"table", u});
  EXPECT_NE(r.output.find(" v |  v -u  1"), std::string::npos) << r.output;
  r = run({"table", "--json", u});
  EXPECT_EQ(Json::parse(r.output)[1][1], Json::parse(R"(["0","0","0"])"));

  const std::string one = path("one.json");
  write_text_file(one, R"({"field":{"kind":"rational"},"dim":1,"unit":["1"],"mul":[[["1"]]]})");
  r = run({"table", one});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, " * | e0\n---+---\ne0 |  1\n");
}

TEST_F(Cli, Check) {
  const std::string a = make({"--kind", "anisotropic-3d"}, "a.json");
  const auto r = run({"check", a});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("flexible: no"), std::string::npos) << r.output;
  EXPECT_NE(r.output.find("involutive: yes"), std::string::npos);
  EXPECT_NE(r.output.find("quadratic: yes"), std::string::npos);
  const auto j = run({"check", "--law", "alternative", "--json", a});
  EXPECT_EQ(Json::parse(j.output)[0]["holds"], false);
}

TEST_F(Cli, Errors) {
  EXPECT_EQ(run({}).exit_code, 1);
  EXPECT_EQ(run({"frobnicate"}).exit_code, 1);
  EXPECT_EQ(run({"table", path("missing.json")}).exit_code, 1);
  EXPECT_EQ(run({"construct", "--kind", "U", "--field", "prime:4"}).exit_code, 1);
  EXPECT_EQ(run({"construct", "--kind", "octonions"}).exit_code, 1);
  EXPECT_EQ(run({"fuzz", "--count", "3"}).exit_code, 1);  // randomized paths need --seed
  const std::string bad = path("bad.json");
  write_text_file(bad, R"({"field":{"kind":"rational"},"dim":1,"unit":["2"],"mul":[[["1"]]]})");
  const auto r = run({"check", bad});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.error.find("unit"), std::string::npos);
  EXPECT_EQ(run({"--help"}).exit_code, 0);
}

TEST_F(Cli, FuzzAndSuite) {
  const auto f = run({"fuzz", "--count", "20", "--m", "2", "--p", "3", "--seed", "4", "--json"});
  EXPECT_EQ(f.exit_code, 0) << f.error;
  EXPECT_EQ(Json::parse(f.output)["instances"], 22);
  EXPECT_EQ(run({"fuzz", "--count", "20", "--m", "2", "--p", "3", "--seed", "4", "--json"}).output, f.output);
  const auto s = run({"suite", "--only", "tables"});
  EXPECT_EQ(s.exit_code, 0) << s.output;
  EXPECT_EQ(s.output.find("FAIL"), std::string::npos);
  const auto s52 = run({"suite", "--only", "h-plus-line", "--field", "prime:5"});
  EXPECT_EQ(s52.exit_code, 0) << s52.output;
  EXPECT_NE(s52.output.find("oracle: not VNF"), std::string::npos);
  EXPECT_EQ(run({"suite", "--only", "nothing"}).exit_code, 1);
}
