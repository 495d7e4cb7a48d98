#pragma once

#include "unihunt/formats.hpp"

namespace unihunt {

// Exact bookkeeping of reduced mass still to be found, per root system.
class MassLedger {
 public:
  MassLedger() = default;
  explicit MassLedger(MassTable target);

  const MassTable& target() const { return target_; }
  const MassTable& remaining() const { return remaining_; }
  const std::vector<ClassEntry>& found() const { return found_; }

  bool tracks(const RootSystem& r) const { return target_.count(r) != 0; }
  // True while some mass is left for r.
  bool open(const RootSystem& r) const;
  bool complete() const;
  Rational total_remaining() const;

  // Records a new class. Throws InconsistencyError if the remaining mass would go negative
  // or the root system is not in the table.
  void subtract(const ClassEntry& e);

  // target == remaining + sum of found mu, per root system.
  bool conserved() const;

 private:
  MassTable target_;
  MassTable remaining_;
  std::vector<ClassEntry> found_;
};

}  // namespace unihunt
