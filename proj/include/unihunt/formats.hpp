#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "unihunt/neighbor.hpp"
#include "unihunt/root_system.hpp"

namespace unihunt {

// One isometry class found by a hunt, as stored in list files.
struct ClassEntry {
  NeighborSpec spec;
  Rational mu;  // reduced mass |W| / |O|
  std::uint64_t beta = 0;
  RootSystem root;
};

// "d:x1,...,xn:eps:num/den:hash:R" (eps always present).
std::string format_entry(const ClassEntry& e);
// Throws std::invalid_argument on malformed text.
ClassEntry parse_entry(const std::string& line);

// Blank lines and lines starting with '#' are skipped; errors carry 1-based line numbers.
std::vector<ClassEntry> read_list(std::istream& in);
std::vector<ClassEntry> read_list_file(const std::string& path);
void write_list(std::ostream& out, const std::vector<ClassEntry>& entries);

using MassTable = std::map<RootSystem, Rational>;

// Lines "R:num/den".
MassTable read_mass_table(std::istream& in);
MassTable read_mass_table_file(const std::string& path);
void write_mass_table(std::ostream& out, const MassTable& table);

// One row per d: "d iso found new num/den".
struct ProgressRecord {
  std::int64_t d = 0;
  std::int64_t iso = 0;
  std::int64_t found = 0;
  std::int64_t fresh = 0;
  Rational remaining;
  friend bool operator==(const ProgressRecord&, const ProgressRecord&) = default;
};

std::string format_progress(const ProgressRecord& r);
std::vector<ProgressRecord> read_progress(std::istream& in);
std::vector<ProgressRecord> read_progress_file(const std::string& path);
void write_progress(std::ostream& out, const std::vector<ProgressRecord>& records);

// "num/den" with den > 0; integers are accepted as num.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& q);  // always "num/den"

std::vector<int> parse_int_list(const std::string& text);

enum class DParity { kAny, kOdd, kEven };
std::string format_parity(DParity p);
DParity parse_parity(const std::string& text);

// Everything a run needs; serializes to "key=value" lines and back.
struct RunConfig {
  std::string subcommand;
  int n = 0;
  std::int64_t d = 0;
  Vec x;
  int eps = 0;
  std::int64_t d_min = 2;
  std::int64_t d_max = 0;
  DParity d_parity = DParity::kAny;
  std::vector<int> parts;
  int end = 0;
  std::string root;
  std::size_t chunk = 256;
  int threads = 0;
  std::int64_t tries = 1000;
  std::uint64_t seed = 1;
  std::int64_t bound = 3;
  std::string gram_path;
  std::string mass_path;
  std::string list_path;
  std::string out_path;
  std::string progress_path;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

std::string serialize_config(const RunConfig& c);
RunConfig parse_config(std::istream& in);
RunConfig read_config_file(const std::string& path);

}  // namespace unihunt
