#pragma once

#include <functional>
#include <optional>
#include <string>

#include "unihunt/bv.hpp"
#include "unihunt/formats.hpp"
#include "unihunt/isometry.hpp"
#include "unihunt/ledger.hpp"

namespace unihunt {

struct HuntResult;

struct HuntConfig {
  std::int64_t d_min = 2;
  std::int64_t d_max = 0;  // required: the search never runs unbounded
  DParity parity = DParity::kAny;
  std::size_t chunk = 256;
  int threads = 0;  // 0: OpenMP default
  IsometryOptions iso;

  // Resume state: entries and per-d records of an interrupted run.
  std::vector<ClassEntry> resume_entries;
  std::vector<ProgressRecord> resume_progress;

  // Called after every completed d (and once more when the run stops).
  std::function<void(const HuntResult&)> checkpoint;
};

struct HuntResult {
  std::vector<ClassEntry> entries;
  std::vector<ProgressRecord> progress;
  MassLedger ledger;
  bool complete = false;
  std::int64_t last_d = 0;
  std::vector<std::string> collisions;  // BV hash ties with different invariants
};

// Biased search for the classes with root system r, among normalized x of the given type.
HuntResult bne(int n, const RootSystem& r, const Rational& rmass, const std::vector<int>& parts, int end,
               const HuntConfig& config);

// Non-biased search over all normalized x; classifies the r_1 = 0 classes listed in the table.
HuntResult ne(int n, const MassTable& table, const HuntConfig& config);

// Order in which list entries are identified: (root system, BV hash) then full invariant.
class InvariantRegistry {
 public:
  enum class Outcome { kKnown, kNew, kCollision };
  Outcome insert(const RootSystem& r, const BvInvariant& inv);
  std::size_t size() const { return count_; }

 private:
  std::map<RootSystem, std::multimap<std::uint64_t, BvInvariant>> table_;
  std::size_t count_ = 0;
};

}  // namespace unihunt
