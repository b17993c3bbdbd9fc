#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "qons/onsager.hpp"
#include "qons/report.hpp"
#include "support.hpp"

using namespace qons;
using testing_support::Gen;
using testing_support::Q;
using testing_support::qd;

namespace {

VerificationReport record(Status s) {
  VerificationReport r;
  r.name = "synthetic";
  r.status = s;
  return r;
}

}  // namespace

TEST(ReportExitCode, SyntheticRecords) {
  Gen g(91);
  for (int t = 0; t < 200; ++t) {
    Report rep;
    int n = g.integer(0, 6);
    bool any_fail = false, any_inc = false;
    for (int i = 0; i < n; ++i) {
      auto s = static_cast<Status>(g.integer(0, 2));
      any_fail |= s == Status::Fail;
      any_inc |= s == Status::Inconclusive;
      rep.add(record(s));
    }
    int expect = any_fail ? 1 : any_inc ? 2 : 0;
    EXPECT_EQ(rep.exit_code(), expect);
    Json j = rep.to_json();
    EXPECT_EQ(j.at("summary").at("total"), n);
    EXPECT_EQ(j.at("summary").at("fail"), rep.count(Status::Fail));
  }
}

#ifdef QONSAGER_BIN

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(QONSAGER_BIN) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::filesystem::path write_tmp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("--help").code, 0);
  EXPECT_EQ(run("").code, 64);
  EXPECT_EQ(run("onsager frobnicate").code, 64);
  EXPECT_EQ(run("repn ssum --d 2 --q 1").code, 64);
  EXPECT_EQ(run("repn ssum --d 2 --q 0").code, 64);
  EXPECT_EQ(run("repn ssum --d x").code, 64);
  EXPECT_EQ(run("current verify --kmax 0").code, 64);
  EXPECT_EQ(run("onsager lusztig --expr /nonexistent/expr.json").code, 74);
  EXPECT_EQ(run("repn d1 --out /nonexistent/dir/r.json").code, 74);
}

TEST(Cli, LusztigOfB) {
  auto path = write_tmp("qons_cli_b.json", R"({"alphabet":["A","B"],"terms":[{"word":["B"],"coeff":1}]})");
  auto r = run("onsager lusztig --json --direction fwd --expr " + path.string());
  ASSERT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  SymPoly image = sympoly_from_json(j.at("image"));
  auto al = image.alphabet();
  SymPoly A = SymPoly::generator(al, "A"), B = SymPoly::generator(al, "B");
  RationalFunctionQ n = (qd(1) * qd(2)).inverse();
  EXPECT_EQ(image, B + n * (Q(1) * (A * A * B) - (Q(1) + Q(-1)) * (A * B * A) + Q(-1) * (B * A * A)));
  EXPECT_EQ(j.at("bound"), 1);
}

TEST(Cli, ExpressionInputs) {
  auto empty = write_tmp("qons_cli_zero.json", R"({"alphabet":["A","B"],"terms":[]})");
  auto r = run("onsager lusztig --json --expr " + empty.string());
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(sympoly_from_json(Json::parse(r.out).at("image")).is_zero());
  auto bad = write_tmp("qons_cli_c.json", R"({"alphabet":["A","B"],"terms":[{"word":["C"],"coeff":1}]})");
  EXPECT_EQ(run("onsager lusztig --expr " + bad.string()).code, 64);
  auto garbage = write_tmp("qons_cli_garbage.json", "{\"alphabet\": [");
  EXPECT_EQ(run("onsager lusztig --expr " + garbage.string()).code, 64);
}

TEST(Cli, SuitesPassAndAreDeterministic) {
  auto a = run("repn ssum --d 6 --a 3/2 --q 5/3 --json");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(run("repn ssum --d 6 --a 3/2 --q 5/3 --json").out, a.out);
  auto c1 = run("repn conjugation --d 2 --a 2 --q 3 --trials 4 --seed 9 --json");
  EXPECT_EQ(c1.code, 0);
  EXPECT_EQ(run("repn conjugation --d 2 --a 2 --q 3 --trials 4 --seed 9 --json --threads 1").out, c1.out);
  EXPECT_EQ(run("current verify --kmax 2").code, 0);
  EXPECT_EQ(run("onsager homcheck").code, 0);
  EXPECT_EQ(run("repn twist --a 2 --b 3 --q 3/2").code, 0);
  Json j = Json::parse(run("onsager higher-dg --r 2 --json").out);
  EXPECT_EQ(j.at("summary").at("pass"), 4);
  EXPECT_EQ(j.at("engine"), kEngineVersion);
}

TEST(Cli, ImportRejectsNonPair) {
  // Commuting diagonal pair: reducible, so not a tridiagonal pair.
  auto path = write_tmp("qons_cli_pair.json",
                        R"({"A":{"dimension":2,"entries":[["37/6","0"],["0","13/6"]]},
                            "B":{"dimension":2,"entries":[["3","0"],["0","4"]]},"a":"3","b":"5","q":"2","d":1})");
  EXPECT_EQ(run("repn import " + path.string()).code, 1);
  EXPECT_EQ(run("repn import /nonexistent/pair.json").code, 74);
}

#endif
