#include "fundform/report_json.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>

using fundform::Json;

namespace {

struct Invocation {
  int code;
  std::string out;
};

// arguments are passed through the shell, so keep them free of single quotes
Invocation run(const std::string& args) {
  const std::string cmd = std::string(FUNDFORM_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Json result_of(const Invocation& r) { return Json::parse(r.out).at("result"); }

}  // namespace

TEST(Cli, ClassifyTriangle) {
  const Invocation r = run("classify --json '{\"dim\":2,\"vertices\":[[0,0],[0,1],[5,0]]}'");
  ASSERT_EQ(r.code, 0) << r.out;
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["tool"], "fundform");
  EXPECT_EQ(doc["command"], "classify");
  EXPECT_EQ(doc["result"]["type"], "II");
  EXPECT_EQ(doc["result"]["a"], 5);
  EXPECT_EQ(doc["result"]["lattice_width"], 1);
}

TEST(Cli, ScreenWorkedExample) {
  const Invocation r = run("screen --weights 7,11,13,15 --oracle");
  ASSERT_EQ(r.code, 0) << r.out;
  const Json res = result_of(r);
  EXPECT_EQ(res["m"], 572);
  EXPECT_EQ(res["verdict"], "nef_not_semiample");
  EXPECT_EQ(res["binomials"][0]["binomial"], "x1*x4 - x2^2");
  EXPECT_TRUE(res["oracle"]["agree"].get<bool>());
}

TEST(Cli, ScreenInconclusiveIsStillARecord) {
  const Invocation r = run("screen --weights 1,1,1,1");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(result_of(r)["verdict"], "inconclusive");
  EXPECT_EQ(run("screen --weights 1,1,1,1 --strict").code, 1);
}

TEST(Cli, TableAllRowsPass) {
  const Invocation r = run("table --threads 4");
  ASSERT_EQ(r.code, 0) << r.out;
  const Json res = result_of(r);
  EXPECT_EQ(res["summary"], "93/93 pass");
  EXPECT_EQ(res["rows"].size(), 93u);
}

TEST(Cli, TableIsByteIdenticalAcrossThreadCounts) {
  const Invocation a = run("table --threads 1 --no-certify-width");
  const Invocation b = run("table --threads 4 --no-certify-width");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, PointsQuadrilateral) {
  const std::string pts =
      "{\"dim\":2,\"points\":[[0,0],[1,1],[1,2],[1,3],[2,1],[2,2],[2,3],[3,1],[3,2],[3,3],[4,4]]}";
  const Invocation r = run("points --m 4 --oracle --json '" + pts + "'");
  ASSERT_EQ(r.code, 0) << r.out;
  const Json res = result_of(r);
  EXPECT_TRUE(res["is_special"].get<bool>());
  EXPECT_EQ(res["fundamental_form"]["dimension"], 2);
  EXPECT_TRUE(res["oracle"]["agree"].get<bool>());
  const Invocation d = run("points --m 4 --direction 1,0 --strict --json '" + pts + "'");
  EXPECT_EQ(d.code, 1);
}

TEST(Cli, ExitCodes) {
  const Invocation bad = run("classify --json '{\"dim\":2,'");
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.out.find("malformed JSON"), std::string::npos);
  EXPECT_EQ(run("classify --json '{\"dim\":2,\"vertices\":[[0,0],[2,0],[0,2]]}' --strict").code, 1);
  EXPECT_EQ(run("classify --json '{\"dim\":2,\"vertices\":[[0,0],[2,0],[0,2]]}'").code, 0);
  EXPECT_EQ(run("polytope --budget 10 --json '{\"dim\":3,\"vertices\":[[0,0,0],[9,0,0],[0,9,0],[0,0,9]]}'").code, 3);
  EXPECT_EQ(run("screen --weights 1,2,3").code, 2);
  EXPECT_EQ(run("points --json '{\"dim\":2,\"points\":[[0,0]]}'").code, 2);  // --m missing
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, TextFormat) {
  const Invocation r = run("classify --format text --json '{\"dim\":2,\"vertices\":[[0,0],[0,1],[5,0]]}'");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("type: II"), std::string::npos) << r.out;
  EXPECT_THROW(Json::parse(r.out), Json::parse_error);
}

TEST(Cli, PolytopeWithDirection) {
  const Invocation r = run(
      "polytope --direction 1,1,0 --json "
      "'{\"dim\":3,\"vertices\":[[0,0,0],[3,0,0],[0,3,0],[0,0,1]]}'");
  ASSERT_EQ(r.code, 0) << r.out;
  const Json res = result_of(r);
  EXPECT_EQ(res["width_in_direction"], 3);
  EXPECT_EQ(res["lattice_width"]["width"], 1);
  EXPECT_EQ(res["lattice_point_count"], 11);
}
