#pragma once

#include "unihunt/formats.hpp"
#include "unihunt/isometry.hpp"

namespace unihunt {

enum class VerifyIssue { kIntegrity, kUnknownRoot, kOvershoot, kDeficit, kDuplicateInvariant };

struct VerifyFinding {
  VerifyIssue issue;
  std::string message;
};

struct VerifyReport {
  std::vector<VerifyFinding> findings;  // integrity, then masses, then invariants
  std::map<RootSystem, Rational> mass_found;
  bool passed() const { return findings.empty(); }
  std::string summary() const;  // "pass" or the first finding
};

struct VerifyOptions {
  int threads = 0;
  IsometryOptions iso;
};

// Recomputes every entry and checks distinct BV invariants per root system and
// the per-root-system mass sums against the table.
VerifyReport verify(const std::vector<ClassEntry>& list, const MassTable& table, const VerifyOptions& options = {});

std::string issue_name(VerifyIssue i);

}  // namespace unihunt
