#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("unihunt_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  Outcome run(const std::string& args) const {
    const std::string out = path("stdout.txt");
    const std::string cmd = std::string(UNIHUNT_CLI) + " " + args + " > " + out + " 2> " + path("stderr.txt");
    const int status = std::system(cmd.c_str());
    Outcome r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = read(out);
    return r;
  }

  static std::string read(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }

  fs::path dir_;
};

const char* kList16 =
    "2:1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1:0:1/1:001d606b26a3330d:D16\n"
    "4:1,1,1,1,1,1,1,1,2,2,2,2,2,2,2,2:0:1/2:3c5ddd3cb3f225d5:2D8\n"
    "6:1,1,1,1,1,1,1,1,1,3,3,3,3,3,3,3:0:1/2:92f95a6653a0cf8d:2E8\n";
const char* kMass16 = "D16:1/1\n2D8:1/2\n2E8:1/2\n";

}  // namespace

TEST_F(Cli, NeighborAndBv) {
  Outcome r = run("neighbor --d 2 --x 1,1,1,1,1,1,1,1 --out " + path("e8.gram"));
  ASSERT_EQ(r.code, 0);
  r = run("bv --gram " + path("e8.gram"));
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("hash f5905f1303ba65a5"), std::string::npos);
  EXPECT_NE(r.out.find("vertices 120"), std::string::npos);
  EXPECT_NE(r.out.find("edges 3360"), std::string::npos);
}

TEST_F(Cli, FlagshipGraphAndReduce) {
  Outcome r = run("bv --d 59 --x 1..29");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("vertices 928"), std::string::npos);
  // The published edge count counts the ones of A, loops included.
  EXPECT_NE(r.out.find("arrows 259840"), std::string::npos);
  r = run("reduce --d 59 --x 1..29 --bound 3 --tries 1000");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("success 1"), std::string::npos);
  r = run("roots --d 59 --x 1..29");
  EXPECT_NE(r.out.find("roots 0"), std::string::npos);
}

TEST_F(Cli, Characteristic) {
  Outcome r = run("exc --d 2 --x 1,1,1,1,1,1,1,1,1,1,1,1 --eps 1");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("exc 24"), std::string::npos);
  r = run("aut --d 2 --x 1,1,1,1,1,1,1,1");
  EXPECT_NE(r.out.find("order 696729600"), std::string::npos);
}

TEST_F(Cli, BneWritesListAndProgress) {
  write("m8.tbl", "E8:1/1\n");
  const Outcome r = run("bne --n 8 --end 8 --root E8 --d-max 6 --mass " + path("m8.tbl") + " --list " + path("l8.lst") +
                    " --progress " + path("p8.log"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(read(path("l8.lst")), "2:1,1,1,1,1,1,1,1:0:1/1:f5905f1303ba65a5:E8\n");
  EXPECT_EQ(read(path("p8.log")).substr(0, 2), "2 ");
}

TEST_F(Cli, VerifyExitCodes) {
  write("m.tbl", kMass16);
  write("good.lst", kList16);
  EXPECT_EQ(run("verify --list " + path("good.lst") + " --mass " + path("m.tbl")).code, 0);
  std::string bad = kList16;
  bad.replace(bad.find("001d606b"), 8, "001d606c");
  write("bad.lst", bad);
  const Outcome r = run("verify --list " + path("bad.lst") + " --mass " + path("m.tbl"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("integrity"), std::string::npos);
}

TEST_F(Cli, InconsistentTableExitsOne) {
  write("m12.tbl", "D12:1/2\n");
  EXPECT_EQ(run("ne --n 12 --d-max 4 --mass " + path("m12.tbl")).code, 1);
}

TEST_F(Cli, BadInputExitsTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("neighbor --d 2 --x 1,1,a").code, 2);
  EXPECT_EQ(run("neighbor --d 2 --x 1,1,1").code, 2);  // not isotropic
  EXPECT_EQ(run("bv --gram " + path("missing.gram")).code, 2);
  write("broken.lst", "2:1,1:0\n");
  write("m.tbl", kMass16);
  const Outcome r = run("verify --list " + path("broken.lst") + " --mass " + path("m.tbl"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(read(path("stderr.txt")).find("line 1"), std::string::npos);
  EXPECT_EQ(run("bne --n 8 --end 8 --root E8").code, 2);
}

TEST_F(Cli, ConfigRoundTrip) {
  write("m14.tbl", "2E7:1/2\n");
  Outcome r = run("ne --n 14 --d-max 6 --threads 1 --mass " + path("m14.tbl") + " --save-config " + path("run.cfg") +
              " --list " + path("a.lst"));
  ASSERT_EQ(r.code, 0);
  const std::string cfg = read(path("run.cfg"));
  EXPECT_NE(cfg.find("subcommand=ne"), std::string::npos);
  EXPECT_NE(cfg.find("n=14"), std::string::npos);
  r = run("ne --config " + path("run.cfg") + " --list " + path("b.lst"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(read(path("a.lst")), read(path("b.lst")));
  EXPECT_FALSE(read(path("a.lst")).empty());
}

TEST_F(Cli, ResumeCompletesRun) {
  write("m.tbl", kMass16);
  const std::string files = " --mass " + path("m.tbl") + " --list " + path("r.lst") + " --progress " + path("r.log");
  Outcome r = run("ne --n 16 --d-max 4" + files);
  ASSERT_EQ(r.code, 0);
  r = run("ne --n 16 --d-max 6 --resume" + files);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(read(path("r.lst")), kList16);
}
