#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + SCHLICHT_CLI_PATH + std::string(" ") + args + " 2>/dev/null";
  CliRun result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, RefuteExample) {
  const CliRun r = run("refute --p 0.5 --target 100 --format json");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"lower_bound\": 100.0"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\"schlicht\": true"), std::string::npos);
}

TEST(Cli, DivergenceCsvExample) {
  const CliRun r = run("divergence --fn z-over-1-minus-z --depth 3 --format csv");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "k,t,value\n1,0.5,3\n2,0.75,7\n3,0.875,15\n");
}

TEST(Cli, ConstantsMatchGoldenFile) {
  const CliRun r = run("constants");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, read_file(std::filesystem::path(SCHLICHT_GOLDEN_DIR) / "constants.json"));
}

TEST(Cli, PreconditionViolationsExitTwo) {
  EXPECT_EQ(run("refute --p 1.5").status, 2);
  EXPECT_EQ(run("two-pole --p 0.5 --mu-re 0.5 --mu-im 0").status, 2);
  EXPECT_EQ(run("divergence --fn moebius-pole-p").status, 2);
  EXPECT_EQ(run("map-eval --map inverse-koebe-plus --z-re 2").status, 2);
  EXPECT_EQ(run("map-eval --map two-slit-inverse --p 0.5 --p1 0.3 --theta 1 --z-re 0.75").status, 2);
  EXPECT_EQ(run("seminorm --grid-radial 2").status, 2);
}

TEST(Cli, UsageErrorsExitSixtyFour) {
  EXPECT_EQ(run("").status, 64);
  EXPECT_EQ(run("frobnicate").status, 64);
  EXPECT_EQ(run("refute --p abc").status, 64);
  EXPECT_EQ(run("refute --x 0.5").status, 64);
  EXPECT_EQ(run("seminorm --fn no-such-function").status, 64);
  EXPECT_EQ(run("constants --format xml").status, 64);
  EXPECT_EQ(run("refute --format csv").status, 64);
  EXPECT_EQ(run("map-eval --map no-such-map").status, 64);
}

TEST(Cli, FailedVerificationExitsThree) {
  EXPECT_EQ(run("map-verify --map koebe").status, 0);
  EXPECT_EQ(run("map-verify --map koebe", "SCHLICHT_SCOPE_TOL=1e-30").status, 3);
}

TEST(Cli, EnvironmentToleranceReachesInjectivityCertificate) {
  const CliRun strict = run("refute --p 0.5 --target 100", "SCHLICHT_SCOPE_TOL=1e-30");
  EXPECT_EQ(strict.status, 0);
  EXPECT_NE(strict.out.find("\"kind\": \"landau\""), std::string::npos);
  const CliRun ignored = run("refute --p 0.5 --target 100", "SCHLICHT_SCOPE_TOL=garbage");
  EXPECT_NE(ignored.out.find("\"kind\": \"bloch\""), std::string::npos);
}

TEST(Cli, OutFlagWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "schlicht_cli_test_out.json";
  std::filesystem::remove(path);
  const CliRun r = run("constants --out " + path.string());
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(read_file(path), run("constants").out);
  std::filesystem::remove(path);
}

TEST(Cli, MapVerifyFamiliesPass) {
  for (const char* args : {"--map koebe", "--map omega --x 0.5 --theta 1.5707963267948966", "--map zeta --p 0.3",
                           "--map two-slit --p 0.5 --p1 0.3333333333333333 --theta 0.7853981633974483",
                           "--map psi --p 0.3 --q 0.6", "--map moebius --p 0.5"}) {
    const CliRun r = run(std::string("map-verify ") + args);
    EXPECT_EQ(r.status, 0) << args << "\n" << r.out;
    EXPECT_NE(r.out.find("\"passed\": true"), std::string::npos) << args;
  }
}

TEST(Cli, MapEvalXiExample) {
  const CliRun r = run("map-eval --map xi --x 0.5 --theta 3.141592653589793 --format csv");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("xi,0,0,-0.77777777777777"), std::string::npos) << r.out;
}

TEST(Cli, DeterministicAcrossRuns) {
  for (const char* args :
       {"map-eval --map two-slit --p 0.5 --p1 0.3 --theta 1 --z-re 0.2 --z-im 0.1", "map-verify --map two-slit",
        "seminorm --fn two-pole-rational", "divergence --fn z-plus-z2-over-1-minus-z --depth 30 --format csv",
        "radius --fn moebius-pole-p", "refute --p 0.3 --target 1000 --seed 7", "two-pole --p 0.3 --mu-re 0.6 --mu-im 0",
        "constants --format csv"}) {
    const CliRun a = run(args);
    const CliRun b = run(args);
    EXPECT_EQ(a.status, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty()) << args;
  }
}
