#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "fieldunits/cli.hpp"

using namespace fieldunits;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string trimmed(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

}  // namespace

TEST(Cli, DecomposeJsonIsExact) {
  const Invocation r = run({"--json", "decompose", "x/(x+1)"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(trimmed(r.out), R"({"constant":"1","factors":[{"poly":"x","exp":1},{"poly":"x+1","exp":-1}]})");
  EXPECT_EQ(trimmed(run({"decompose", "x/(x+1)"}).out), "x * (x+1)^(-1)");
}

TEST(Cli, KnownOutputs) {
  EXPECT_EQ(trimmed(run({"padic", "-p", "3", "1/9"}).out), "-2");
  EXPECT_EQ(trimmed(run({"--json", "norm", "--ext", "GF(2)(t)[y]/(y^2+y+t)", "y"}).out), R"("t")");
  EXPECT_EQ(trimmed(run({"--json", "rank", "x", "x+1", "x^2+x"}).out),
            R"({"rank":2,"columns":["x","x+1"],"matrix":[[1,0],[0,1],[1,1]]})");
  EXPECT_EQ(trimmed(run({"--field", "GF(3)", "rank", "2"}).out), "0");
  EXPECT_EQ(trimmed(run({"--json", "pc", "decompose", "t^(1/2)/(t+1)^(3/4)"}).out),
            R"({"factors":[{"poly":"t","exp":"1/2"},{"poly":"t+1","exp":"-3/4"}]})");
  EXPECT_EQ(trimmed(run({"hahn", "inv", "1+x", "--terms", "4"}).out), "1+x^(1)+x^(2)+x^(3)+O(x^(4))");
  EXPECT_EQ(trimmed(run({"--json", "factor", "x^5+x+1"}).out),
            R"({"unit":"1","factors":[{"poly":"x^2+x+1","exp":1},{"poly":"x^3+x^2+1","exp":1}]})");
}

TEST(Cli, ClassifyScan) {
  const Invocation r = run({"--json", "classify-scan", "--bound", "10"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  std::vector<std::uint64_t> qs;
  for (const auto& f : j["fields"]) qs.push_back(f["q"]);
  EXPECT_EQ(qs, (std::vector<std::uint64_t>{2, 3, 4, 5, 8, 9}));
  EXPECT_EQ(j["disagreements"].size(), 0u);
  EXPECT_EQ(run({"classify-scan", "--bound", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"classify-scan", "--bound", "1099511627777"}).code, kExitUsage);
  EXPECT_EQ(run({"classify-scan"}).code, kExitUsage);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"no-such-command"}).code, kExitUsage);
  EXPECT_EQ(run({"decompose", "x+"}).code, kExitUsage);
  EXPECT_EQ(run({"decompose", "0"}).code, kExitDomain);
  EXPECT_EQ(run({"--field", "GF(6)", "factor", "x"}).code, kExitDomain);
  EXPECT_EQ(run({"padic", "-p", "4", "3"}).code, kExitDomain);
  EXPECT_EQ(run({"norm", "--ext", "GF(2)(t)[y]/(y^2+t^2)", "y"}).code, kExitDomain);
  EXPECT_EQ(run({"hahn", "inv", "0"}).code, kExitDomain);
  const Invocation bad = run({"decompose", "0"});
  EXPECT_FALSE(bad.err.empty());
  EXPECT_TRUE(bad.out.empty());
}

TEST(Cli, AxiomsReportCounterexamples) {
  const Invocation deg = run({"--json", "axioms", "degree"});
  EXPECT_EQ(deg.code, kExitDomain);
  const auto j = nlohmann::json::parse(deg.out);
  EXPECT_FALSE(j["passed"].get<bool>());
  EXPECT_EQ(j["counterexample"]["axiom"], "ultrametric");
  EXPECT_EQ(run({"axioms", "padic:3", "--samples", "50"}).code, kExitOk);
  EXPECT_EQ(run({"axioms", "poly:x^2+x+1", "--samples", "50"}).code, kExitOk);
  EXPECT_EQ(run({"axioms", "hahn", "--group", "Z^2", "--samples", "50"}).code, kExitOk);
  EXPECT_EQ(run({"axioms", "poly:x^2+1"}).code, kExitDomain);
}

TEST(Cli, DecomposeRecomposeRoundTrip) {
  for (const char* field : {"GF(2)", "GF(3)", "GF(9)"}) {
    for (const char* q : {"x/(x+1)", "(x^5+x+1)/x^3", "2*x^2+2*x", "x^7+1"}) {
      if (std::string(field) == "GF(2)" && std::string(q) == "2*x^2+2*x") continue;
      const Invocation d = run({"--field", field, "--json", "decompose", q});
      ASSERT_EQ(d.code, kExitOk) << d.err;
      const Invocation r = run({"--field", field, "recompose", trimmed(d.out)});
      ASSERT_EQ(r.code, kExitOk) << r.err;
      const Invocation canonical = run({"--field", field, "decompose", trimmed(r.out)});
      ASSERT_EQ(trimmed(run({"--field", field, "--json", "decompose", trimmed(r.out)}).out), trimmed(d.out)) << q;
      ASSERT_EQ(canonical.code, kExitOk);
    }
  }
  // A factor that is not irreducible is rejected.
  EXPECT_EQ(run({"recompose", R"({"constant":"1","factors":[{"poly":"x^2+1","exp":1}]})"}).code, kExitDomain);
  EXPECT_EQ(run({"recompose", "not json"}).code, kExitUsage);
}

TEST(Cli, PerfectClosureRoundTrip) {
  const Invocation d = run({"--json", "pc", "decompose", "(t^(1/4)+t)/(t+1)"});
  ASSERT_EQ(d.code, kExitOk);
  const Invocation r = run({"pc", "recompose", trimmed(d.out)});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(trimmed(r.out), trimmed(run({"pc", "show", "(t^(1/4)+t)/(t+1)"}).out));
  EXPECT_EQ(trimmed(run({"pc", "level", "t^(3/8)+1"}).out), "3");
  EXPECT_EQ(trimmed(run({"pc", "frobenius-inv", "t"}).out), "t^(1/2)");
}

TEST(Cli, SelftestIsDeterministicAndPasses) {
  const Invocation a = run({"--json", "--seed", "5", "selftest", "--bound", "1000"});
  ASSERT_EQ(a.code, kExitOk) << a.out;
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["seed"], 5);
  EXPECT_GE(j["suites"].size(), 8u);
  EXPECT_EQ(run({"--json", "--seed", "5", "selftest", "--bound", "1000"}).out, a.out);
}
