#include <gtest/gtest.h>

#include <sstream>

#include "frieze/cli.hpp"
#include "frieze/io.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = frieze::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

const char* kHexagon = R"({"m": 6, "diagonals": [[2,4],[2,5],[2,6]]})";

}  // namespace

TEST(Cli, ClassifyTriangle) {
  auto r = run({"classify-triangle", "1", "2", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "false\n");
  EXPECT_EQ(run({"classify-triangle", "2", "4", "6"}).out, "true\n");
  EXPECT_EQ(run({"classify-triangle", "0", "4", "6"}).code, 2);
}

TEST(Cli, BuildThenValidate) {
  auto b = run({"build", "--boundary", "3,7,5,3", "--quiddity", "4,9,4,9"});
  ASSERT_EQ(b.code, 0) << b.err;
  auto v = run({"validate", "-"}, b.out);
  EXPECT_EQ(v.code, 0);
  EXPECT_TRUE(frieze::json::parse(v.out)["ok"].get<bool>());
}

TEST(Cli, BuildRejectsInvalidData) {
  auto b = run({"build", "--boundary", "3,7,5,3", "--quiddity", "4,9,4,8"});
  EXPECT_EQ(b.code, 1);
  EXPECT_FALSE(frieze::json::parse(b.out)["ok"].get<bool>());
  EXPECT_EQ(run({"build", "--boundary", "3,x", "--quiddity", "1,2"}).code, 2);
}

TEST(Cli, ValidateReportsViolations) {
  const std::string bad =
      R"({"m":4,"entries":{"1,2":"1","2,3":"1","3,4":"1","1,4":"1","1,3":"3","2,4":"1"}})";
  auto r = run({"validate", "-"}, bad);
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(frieze::json::parse(r.out)["violations"].empty());
}

TEST(Cli, LoaderErrorsAreUsageErrors) {
  for (const char* bad : {"{", R"({"m":3})", R"({"m":3,"entries":{"1,2":"1","2,3":"1"}})",
                          R"({"m":3,"entries":{"1,2":"0","2,3":"1","1,3":"1"}})",
                          R"({"m":3,"entries":{"1,2":"1/0","2,3":"1","1,3":"1"}})"}) {
    auto r = run({"validate", "-"}, bad);
    EXPECT_EQ(r.code, 2) << bad;
    const auto err = frieze::json::parse(r.err);
    EXPECT_TRUE(err.contains("error"));
    EXPECT_EQ(lines(r.err).size(), 1u);
  }
  EXPECT_EQ(run({"validate", "/nonexistent/file.json"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"no-such-command"}).code, 2);
  EXPECT_EQ(run({"accordion", "3"}).code, 2);
  EXPECT_EQ(run({"render", "--format", "png", "-"}, kHexagon).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, FromTriangulationAndCut) {
  auto f = run({"from-triangulation", "-"}, kHexagon);
  ASSERT_EQ(f.code, 0) << f.err;
  const auto j = frieze::json::parse(f.out);
  EXPECT_EQ(j["entries"]["1,3"], "4");
  EXPECT_EQ(j["entries"]["1,5"], "2");
  auto c = run({"cut", "-", "--vertices", "1,2,3,5"}, f.out);
  ASSERT_EQ(c.code, 0) << c.err;
  const auto sq = frieze::json::parse(c.out);
  EXPECT_EQ(sq["m"], 4);
  EXPECT_EQ(sq["entries"]["1,3"], "4");
  EXPECT_EQ(sq["entries"]["2,4"], "1");
  EXPECT_EQ(run({"validate", "-"}, c.out).code, 0);
}

TEST(Cli, Accordion) {
  auto r = run({"accordion", "3", "2"});
  ASSERT_EQ(r.code, 0);
  const auto j = frieze::json::parse(r.out);
  EXPECT_EQ(j["m"], 5);
  EXPECT_TRUE(j.contains("k"));
  EXPECT_EQ(run({"from-triangulation", "-"}, r.out).code, 0);
  EXPECT_EQ(run({"accordion", "4", "6"}).code, 2);
}

TEST(Cli, RealizeTriangle) {
  auto r = run({"realize-triangle", "2", "3", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = frieze::json::parse(r.out);
  const auto v = j["vertices"].get<std::vector<int>>();
  auto f = run({"from-triangulation", "-"}, r.out);
  const auto fj = frieze::json::parse(f.out);
  auto entry = [&](int p, int q) {
    if (p > q) std::swap(p, q);
    return fj["entries"][std::to_string(p) + "," + std::to_string(q)].get<std::string>();
  };
  EXPECT_EQ(entry(v[0], v[1]), "2");
  EXPECT_EQ(entry(v[1], v[2]), "3");
  EXPECT_EQ(entry(v[2], v[0]), "1");
  auto svg = run({"render", "--format", "svg", "-"}, r.out);
  EXPECT_NE(svg.out.find(">2</text>"), std::string::npos);
  EXPECT_NE(svg.out.find(">3</text>"), std::string::npos);
  EXPECT_EQ(run({"realize-triangle", "1", "2", "2"}).code, 1);
}

TEST(Cli, Enumerate) {
  auto r = run({"enumerate", "--boundary", "3,7,5,3", "--domain", "nat"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 10u);
  const auto summary = frieze::json::parse(ls.back())["summary"];
  EXPECT_EQ(summary["count"], 9);
  EXPECT_EQ(summary["bound"], "392");
  EXPECT_EQ(summary["domain"], "nat");
  for (std::size_t i = 0; i + 1 < ls.size(); ++i) EXPECT_EQ(run({"validate", "-"}, ls[i]).code, 0);
  EXPECT_EQ(run({"enumerate", "--boundary", "3,7,5,3", "--serial"}).out, r.out);
}

TEST(Cli, EnumerateScaledBoundary) {
  auto r = run({"enumerate", "--boundary", "1/2,1/2,1/2,1/2", "--domain", "scaled-nat:1/2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  const auto summary = frieze::json::parse(ls.back())["summary"];
  EXPECT_EQ(summary["count"], 2);
  EXPECT_EQ(summary["scale"], "2");
  EXPECT_EQ(run({"enumerate", "--boundary", "1,2,1,1", "--domain", "set:1"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--boundary", "1,1,1,1", "--domain", "reals"}).code, 2);
}

TEST(Cli, RenderAscii) {
  auto b = run({"build", "--boundary", "3,7,5,3", "--quiddity", "4,9,4,9"});
  auto r = run({"render", "--format", "ascii", "-"}, b.out);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0 3 4 3 0\n  0 7 9 3 0\n    0 5 4 7 0\n      0 3 9 5 0\n");
}

TEST(Cli, RenderIsDeterministic) {
  auto a = run({"render", "--format", "svg", "-"}, kHexagon);
  auto b = run({"render", "--format", "svg", "-"}, kHexagon);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}
