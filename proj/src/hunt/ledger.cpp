#include "unihunt/ledger.hpp"

#include "unihunt/errors.hpp"

namespace unihunt {

MassLedger::MassLedger(MassTable target) : target_(std::move(target)), remaining_(target_) {}

bool MassLedger::open(const RootSystem& r) const {
  auto it = remaining_.find(r);
  return it != remaining_.end() && sgn(it->second) > 0;
}

bool MassLedger::complete() const {
  for (const auto& [r, q] : remaining_)
    if (sgn(q) != 0) return false;
  return true;
}

Rational MassLedger::total_remaining() const {
  Rational s = 0;
  for (const auto& [r, q] : remaining_) s += q;
  return s;
}

void MassLedger::subtract(const ClassEntry& e) {
  auto it = remaining_.find(e.root);
  if (it == remaining_.end())
    throw InconsistencyError("root system " + e.root.symbol() + " of entry " + format_entry(e) +
                             " is not in the mass table");
  Rational left = it->second - e.mu;
  if (sgn(left) < 0)
    throw InconsistencyError("remaining mass for " + e.root.symbol() + " would become " + format_rational(left) +
                             " after entry " + format_entry(e));
  it->second = left;
  found_.push_back(e);
}

bool MassLedger::conserved() const {
  MassTable sum;
  for (const auto& e : found_) sum[e.root] += e.mu;
  for (const auto& [r, t] : target_) {
    Rational s = remaining_.at(r);
    if (auto it = sum.find(r); it != sum.end()) s += it->second;
    if (s != t) return false;
  }
  return true;
}

}  // namespace unihunt
