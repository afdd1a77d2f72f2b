#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>

namespace {

struct Outcome {
  int code;
  std::string out;
};

Outcome run(const std::string& args) {
  const std::string cmd = std::string(INTCHEB_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const std::string kFixtures = INTCHEB_FIXTURES;

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST(Cli, VerifyQuarter) {
  const Outcome r = run("verify --product " + kFixtures + "/table5_quarter.json");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "sup_value = 1/4 certified")) << r.out;
}

TEST(Cli, PadicImpossibleExitsThree) {
  const Outcome r = run("padic --poly \"7x^3+4x^2-2x-1\"");
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(contains(r.out, "\"status\":\"impossible\"")) << r.out;
  EXPECT_EQ(run("padic --poly \"7x^3-7x^2+1\"").code, 0);
}

TEST(Cli, FareyVerdicts) {
  Outcome r = run("farey --interval 1/2 2/3");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "t_M([1/2, 2/3]) = 1/2 (proved")) << r.out;
  r = run("farey --interval 2/5 3/7");
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(contains(r.out, "t_M([2/5, 3/7]) = 1/5 (conjectured-maximal-obstruction)")) << r.out;
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run("farey --interval 1/2 3/2").code, 2);
  EXPECT_EQ(run("padic --poly \"7x^3+\"").code, 2);
  EXPECT_EQ(run("padic --poly \"x^2-2\"").code, 2);
  EXPECT_EQ(run("verify --product " + kFixtures + "/missing.json").code, 2);
  EXPECT_NE(run("no-such-command").code, 0);
}

TEST(Cli, SearchIsDeterministicAcrossThreads) {
  const std::string base = "search --interval -3/4 3/4 --degree 3 --lead 7 --t 1/2";
  const Outcome one = run(base + " --threads 1");
  const Outcome four = run(base + " --threads 4");
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, four.out);
  EXPECT_TRUE(contains(one.out, "\"coeffs\":[\"1\",\"0\",\"-7\",\"7\"]")) << one.out;
}

TEST(Cli, GammaCsv) {
  const Outcome r = run("gamma --b-lo 1/100 --b-hi 3/100 --steps 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "b,m,gamma_lo,gamma_hi\n1/100,1/100,0.947765781")) << r.out;
}

TEST(Cli, BoundsCsvIsStable) {
  const Outcome a = run("bounds --t 1/2");
  const Outcome b = run("bounds --t 1/2");
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(contains(a.out, "t,lminus_lo,lminus_hi,lplus_lo,lplus_hi")) << a.out;
}

TEST(Cli, TablesAllOk) {
  const Outcome r = run("tables");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_FALSE(contains(r.out, "FAIL")) << r.out;
}
