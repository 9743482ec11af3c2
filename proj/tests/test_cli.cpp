#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + RUMIN_LAB_BIN + " " + args + " 2>/dev/null";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t k;
  while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), k);
  const int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST(Cli, RejectsDimensionOne) { EXPECT_EQ(run("verify identities --n 1").code, 2); }

TEST(Cli, UnknownCommandIsUsageError) { EXPECT_EQ(run("frobnicate").code, 2); }

TEST(Cli, ZeroCasesGivesEmptyReport) {
  const Result r = run("verify identities --n 2 --cases 0 --no-timestamp");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["suite"], "identities");
  EXPECT_TRUE(j["checks"].empty());
  EXPECT_EQ(j["summary"]["pass"], 0);
  EXPECT_EQ(j["summary"]["fail"], 0);
  EXPECT_TRUE(j.contains("version"));
}

TEST(Cli, SzegoBidegreeMustFillMiddle) { EXPECT_EQ(run("szego --n 3 --p 1 --q 1").code, 2); }

TEST(Cli, SzegoSweepPasses) {
  const Result r = run("szego --n 2 --mmax 2 --lmax 2 --order 8 --no-timestamp");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_GT(j["summary"]["pass"].get<int>(), 0);
  EXPECT_EQ(j["summary"]["fail"], 0);
}

TEST(Cli, ScalarSzego) { EXPECT_EQ(run("szego --n 2 --scalar --lmax 3").code, 0); }

TEST(Cli, DeterministicAcrossThreads) {
  const std::string args = "verify identities --n 2..3 --cases 3 --seed 5 --no-timestamp";
  const Result a = run(args, "RUMIN_LAB_THREADS=1");
  const Result b = run(args, "RUMIN_LAB_THREADS=4");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, run(args).out);
}

TEST(Cli, SeedChangesWitnessInputs) {
  const Result a = run("verify identities --n 2 --cases 2 --seed 1 --no-timestamp");
  const Result b = run("verify identities --n 2 --cases 2 --seed 2 --no-timestamp");
  EXPECT_NE(a.out, b.out);
}

TEST(Cli, Formats) {
  const Result md = run("verify hw --n 3 --mmax 0 --lmax 0 --format md --no-timestamp");
  ASSERT_EQ(md.code, 0);
  EXPECT_EQ(md.out.rfind("#", 0), 0u);
  const Result csv = run("verify hw --n 3 --mmax 0 --lmax 0 --format csv --no-timestamp");
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.rfind("id,", 0), 0u);
  EXPECT_EQ(run("verify hw --format xml").code, 2);
}

TEST(Cli, SpectraFlagsKnownTypo) {
  const Result r = run("spectra --n 3 --mmax 1 --lmax 1 --no-timestamp");
  EXPECT_EQ(r.code, 1);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_GT(j["summary"]["suspected"].get<int>(), 0);
  bool gamma = false;
  for (const auto& t : j["suspectedTypos"])
    if (t["id"] == "gamma triangle") gamma = true;
  EXPECT_TRUE(gamma);
}

TEST(Cli, OutFile) {
  const std::string path = testing::TempDir() + "rumin_lab_out.json";
  ASSERT_EQ(run("verify hw --n 3 --mmax 0 --lmax 0 --no-timestamp --out " + path).code, 0);
  FILE* f = std::fopen(path.c_str(), "r");
  ASSERT_NE(f, nullptr);
  std::fclose(f);
  std::remove(path.c_str());
}

TEST(Cli, Selftest) { EXPECT_EQ(run("selftest").code, 0); }
