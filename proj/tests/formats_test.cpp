#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "unihunt/errors.hpp"
#include "unihunt/formats.hpp"
#include "unihunt/ledger.hpp"

using namespace unihunt;

namespace {

ClassEntry entry(const std::string& text) { return parse_entry(text); }

Rational q(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

int error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    read_list(in);
  } catch (const InputError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST(Entry, RoundTrip) {
  const std::string lines[] = {"2:1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1:0:1/1:001d606b26a3330d:D16", "6:1,1,1,1,1,1,1,1,1,3,3,3,3,3,3,3:0:1/2:92f95a6653a0cf8d:2E8",
                               "59:1,2,3:0:3/7:00000000000000ff:0"};
  for (const auto& l : lines) {
    const ClassEntry e = entry(l);
    EXPECT_EQ(parse_entry(format_entry(e)).spec, e.spec);
    EXPECT_EQ(format_entry(parse_entry(format_entry(e))), format_entry(e));
  }
  const ClassEntry e = entry("4:1,1,1,1,1,1,1,1,2,2,2,2,2,2,2,2:0:1/2:3c5ddd3cb3f225d5:2D8");
  EXPECT_EQ(e.spec.d, 4);
  EXPECT_EQ(e.spec.n(), 16);
  EXPECT_EQ(e.spec.x[8], 2);
  EXPECT_EQ(e.mu, q(1, 2));
  EXPECT_EQ(e.beta, 0x3c5ddd3cb3f225d5ULL);
  EXPECT_EQ(e.root.symbol(), "2D8");
}

TEST(Entry, RandomRoundTrip) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    ClassEntry e;
    e.spec.d = 2 + static_cast<std::int64_t>(rng() % 200);
    e.spec.x.resize(1 + rng() % 30);
    for (auto& c : e.spec.x) c = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(e.spec.d));
    e.spec.eps = e.spec.d % 2 == 0 ? static_cast<int>(rng() % 2) : 0;
    e.mu = q(1 + static_cast<long>(rng() % 1000), 1 + static_cast<long>(rng() % 100000));
    e.beta = rng();
    e.root = RootSystem::parse(i % 3 == 0 ? "0" : i % 3 == 1 ? "A1+2A2" : "D4+E6");
    const ClassEntry back = parse_entry(format_entry(e));
    EXPECT_EQ(back.spec, e.spec);
    EXPECT_EQ(back.mu, e.mu);
    EXPECT_EQ(back.beta, e.beta);
    EXPECT_EQ(back.root, e.root);
  }
}

TEST(Entry, Malformed) {
  for (const char* bad : {"", "2:1,1", "2:1,1:0:1/2:abc:0", "2:1,1:0:0/1:0000000000000000:0",
                          "2:1,1:0:1/0:0000000000000000:0", "2:1,1:2:1/1:0000000000000000:0",
                          "3:1,1:1:1/1:0000000000000000:0", "2:1,1:0:1/1:0000000000000000:E9"})
    EXPECT_THROW(parse_entry(bad), std::invalid_argument) << bad;
}

TEST(List, RoundTripAndLineNumbers) {
  std::vector<ClassEntry> es{entry("2:1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1:0:1/1:001d606b26a3330d:D16"),
                             entry("4:1,1,1,1,1,1,1,1,2,2,2,2,2,2,2,2:0:1/2:3c5ddd3cb3f225d5:2D8")};
  std::ostringstream out;
  write_list(out, es);
  std::istringstream in("# header\n\n" + out.str());
  const auto back = read_list(in);
  ASSERT_EQ(back.size(), 2U);
  EXPECT_EQ(format_entry(back[1]), format_entry(es[1]));

  EXPECT_EQ(error_line("# c\n2:1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1:0:1/1:001d606b26a3330d:D16\n\nbroken\n"), 4);
  // Rank mismatch against the first entry.
  EXPECT_EQ(error_line("2:1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1:0:1/1:001d606b26a3330d:D16\n2:1,1,1,1,1,1,1,1:0:1/1:001d606b26a3330d:D8\n"), 2);
}

TEST(List, MissingFile) { EXPECT_THROW(read_list_file("/nonexistent/list.txt"), InputError); }

TEST(MassTable, RoundTrip) {
  MassTable t{{RootSystem::parse("D16"), 1}, {RootSystem::parse("2D8"), q(1, 2)}, {RootSystem::parse("0"), q(5, 7)}};
  std::ostringstream out;
  write_mass_table(out, t);
  std::istringstream in(out.str());
  EXPECT_EQ(read_mass_table(in), t);
}

TEST(MassTable, Errors) {
  std::istringstream dup("D4:1/2\nD4:1/3\n");
  try {
    read_mass_table(dup);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  std::istringstream neg("D4:-1/2\n");
  EXPECT_THROW(read_mass_table(neg), InputError);
  std::istringstream bad("D4\n");
  EXPECT_THROW(read_mass_table(bad), InputError);
}

TEST(Progress, RoundTrip) {
  std::vector<ProgressRecord> rs{{2, 10, 1, 1, q(1, 2)}, {3, 0, 0, 0, q(1, 2)}, {4, 7, 3, 1, 0}};
  std::ostringstream out;
  write_progress(out, rs);
  std::istringstream in(out.str());
  EXPECT_EQ(read_progress(in), rs);
  EXPECT_EQ(format_progress(rs[0]), "2 10 1 1 1/2");
  std::istringstream bad("2 10 1\n");
  EXPECT_THROW(read_progress(bad), InputError);
}

TEST(Rational, ParseFormat) {
  EXPECT_EQ(parse_rational("3"), 3);
  EXPECT_EQ(parse_rational("6/4"), q(3, 2));
  EXPECT_EQ(format_rational(q(6, 4)), "3/2");
  EXPECT_EQ(format_rational(Rational(5)), "5/1");
  for (const char* bad : {"", "1/", "/2", "1/2/3", "a", "1/-2", "1/0"})
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}

TEST(Parity, RoundTrip) {
  for (auto p : {DParity::kAny, DParity::kOdd, DParity::kEven}) EXPECT_EQ(parse_parity(format_parity(p)), p);
  EXPECT_THROW(parse_parity("prime"), std::invalid_argument);
}

TEST(Config, RoundTrip) {
  RunConfig c;
  c.subcommand = "bne";
  c.n = 16;
  c.d = 9;
  c.x = {1, 2, 3};
  c.d_min = 3;
  c.d_max = 40;
  c.d_parity = DParity::kOdd;
  c.parts = {3, 3, 2};
  c.end = 8;
  c.root = "2A2";
  c.chunk = 64;
  c.threads = 4;
  c.tries = 77;
  c.seed = 123456789012345ULL;
  c.gram_path = "a.gram";
  c.mass_path = "m.txt";
  c.list_path = "l.txt";
  c.progress_path = "p.txt";
  std::istringstream in(serialize_config(c));
  EXPECT_EQ(parse_config(in), c);

  const auto path = std::filesystem::temp_directory_path() / "unihunt_config_test.cfg";
  std::ofstream(path) << serialize_config(c);
  EXPECT_EQ(read_config_file(path.string()), c);
  std::filesystem::remove(path);

  std::istringstream unknown("n=3\ncolour=blue\n");
  try {
    parse_config(unknown);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(Ledger, Conservation) {
  MassLedger l({{RootSystem::parse("D16"), 1}, {RootSystem::parse("2D8"), q(1, 2)}});
  EXPECT_FALSE(l.complete());
  EXPECT_EQ(l.total_remaining(), q(3, 2));
  l.subtract(entry("4:1,1,1,1,1,1,1,1,2,2,2,2,2,2,2,2:0:1/2:3c5ddd3cb3f225d5:2D8"));
  EXPECT_TRUE(l.conserved());
  EXPECT_FALSE(l.open(RootSystem::parse("2D8")));
  EXPECT_TRUE(l.open(RootSystem::parse("D16")));
  l.subtract(entry("2:1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1:0:1/1:001d606b26a3330d:D16"));
  EXPECT_TRUE(l.complete());
  EXPECT_TRUE(l.conserved());
  EXPECT_EQ(l.found().size(), 2U);
}

TEST(Ledger, RandomConservation) {
  std::mt19937_64 rng(32);
  const RootSystem r = RootSystem::parse("A1");
  MassLedger l({{r, 1}});
  Rational left = 1;
  for (int i = 0; i < 50; ++i) {
    ClassEntry e = entry("3:1,1,1:0:1/1:0000000000000000:A1");
    e.mu = left / static_cast<long>(2 + rng() % 5);
    l.subtract(e);
    left -= e.mu;
    EXPECT_TRUE(l.conserved());
    EXPECT_EQ(l.total_remaining(), left);
  }
}

TEST(Ledger, Overshoot) {
  MassLedger l({{RootSystem::parse("2D8"), q(1, 2)}});
  ClassEntry e = entry("4:1,1,1,1,1,1,1,1,2,2,2,2,2,2,2,2:0:1/2:3c5ddd3cb3f225d5:2D8");
  l.subtract(e);
  EXPECT_THROW(l.subtract(e), InconsistencyError);
  EXPECT_TRUE(l.conserved());
  e.root = RootSystem::parse("E8");
  EXPECT_THROW(l.subtract(e), InconsistencyError);
}
