#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace {

struct Result {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr discarded.
Result cli(const std::string& args) {
  const std::string cmd = std::string(CENTRA_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, AnalyzeSpec) {
  const auto r = cli("analyze dihedral:n=8");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "cent_count 4\n"));
  EXPECT_TRUE(contains(r.out, "zclass_count 4\n"));
  EXPECT_TRUE(contains(r.out, "centralizer.0 "));
  EXPECT_TRUE(contains(cli("analyze quaternion8 --format table").out, "cent_count"));
  const auto trivial = cli("analyze cyclic:n=1");
  EXPECT_TRUE(contains(trivial.out, "abelian true\n"));
  EXPECT_TRUE(contains(trivial.out, "cent_count 1\n"));
}

TEST(Cli, AnalyzeFixture) {
  const auto r = cli(std::string("analyze ") + CENTRA_TEST_FIXTURES + "/sg_64_73.permgrp");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "conjugate_type (4,1)\n"));
  EXPECT_TRUE(contains(r.out, "central_quotient_order 8\n"));
}

TEST(Cli, ConstructRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / ("centra_cli_" + std::to_string(::getpid()) + ".grp");
  ASSERT_EQ(cli("construct heisenberg:p=3 -o " + path.string()).code, 0);
  const auto r = cli("analyze " + path.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "name Heis(3)\n"));
  EXPECT_TRUE(contains(r.out, "cent_count 5\n"));
  std::filesystem::remove(path);
  EXPECT_TRUE(contains(cli("construct cyclic:n=2").out, "%grp 1\n"));
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(cli("analyze bogus:spec").code, 3);
  EXPECT_EQ(cli("analyze extraspecial:p=4,a=1,variant=+").code, 3);
  EXPECT_EQ(cli("construct extraspecial:p=4,a=1,variant=+").code, 3);
  EXPECT_EQ(cli("--order-cap 10 analyze symmetric:k=4").code, 3);
  EXPECT_EQ(cli("verify --theorem T99").code, 3);
  EXPECT_NE(cli("analyze").code, 0);
}

TEST(Cli, Isoclinic) {
  const auto yes = cli("isoclinic dihedral:n=8 quaternion8");
  EXPECT_EQ(yes.code, 0);
  EXPECT_TRUE(contains(yes.out, "isoclinic ("));
  const auto no = cli("isoclinic dihedral:n=8 symmetric:k=3");
  EXPECT_EQ(no.code, 1);
  EXPECT_TRUE(contains(no.out, "not isoclinic"));
  EXPECT_EQ(cli("isoclinic extraspecial:p=2,a=2,variant=+ extraspecial:p=2,a=2,variant=- --budget 1").code, 4);
}

TEST(Cli, Zclasses) {
  const auto r = cli("zclasses symmetric:k=3");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "zclass_count 3\n"));
}

TEST(Cli, VerifySelection) {
  const auto r = cli("verify --theorem T1,T4 --format table");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "violations=0"));
  EXPECT_FALSE(contains(r.out, "T2 "));
}

TEST(Cli, VerifyExitCodes) {
  const auto dir = std::filesystem::temp_directory_path() / ("centra_cli_m" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  {
    FILE* f = std::fopen((dir / "bad_assert.manifest").c_str(), "w");
    std::fputs("construct dihedral:n=8\n  assert cent_count 9\n", f);
    std::fclose(f);
    f = std::fopen((dir / "bad_load.manifest").c_str(), "w");
    std::fputs("construct dihedral:n=8\nfile missing.grp\n", f);
    std::fclose(f);
  }
  EXPECT_EQ(cli("verify --theorem ASSERT --corpus " + (dir / "bad_assert.manifest").string()).code, 2);
  const auto load = cli("verify --theorem T1 --corpus " + (dir / "bad_load.manifest").string());
  EXPECT_EQ(load.code, 3);
  EXPECT_TRUE(contains(load.out, "\"LOAD\""));
  std::filesystem::remove_all(dir);
}
