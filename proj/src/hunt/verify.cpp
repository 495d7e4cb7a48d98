#include "unihunt/verify.hpp"

#include <exception>

#include <omp.h>

#include "unihunt/bv.hpp"

namespace unihunt {

std::string issue_name(VerifyIssue i) {
  switch (i) {
    case VerifyIssue::kIntegrity: return "integrity";
    case VerifyIssue::kUnknownRoot: return "unknown-root-system";
    case VerifyIssue::kOvershoot: return "mass-overshoot";
    case VerifyIssue::kDeficit: return "mass-deficit";
    case VerifyIssue::kDuplicateInvariant: return "duplicate-bv";
  }
  return "?";
}

std::string VerifyReport::summary() const {
  if (passed()) return "pass";
  return "fail " + issue_name(findings.front().issue) + ": " + findings.front().message;
}

namespace {

struct Recomputed {
  RootSystem root;
  Rational mu;
  BvInvariant inv;
  std::string error;
};

}  // namespace

VerifyReport verify(const std::vector<ClassEntry>& list, const MassTable& table, const VerifyOptions& options) {
  const int count = static_cast<int>(list.size());
  std::vector<Recomputed> rc(count);
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (int i = 0; i < count; ++i) {
    try {
      Lattice lat = neighbor(list[i].spec);
      rc[i].root = root_system(lat);
      rc[i].mu = aut_order(lat, options.iso).reduced_mass;
      rc[i].inv = bv(lat);
    } catch (const std::exception& e) {
      rc[i].error = e.what();
    }
  }

  VerifyReport report;
  auto add = [&](VerifyIssue issue, std::string msg) { report.findings.push_back({issue, std::move(msg)}); };
  auto label = [&](int i) { return "entry " + std::to_string(i + 1) + " (" + format_spec(list[i].spec) + ")"; };

  for (int i = 0; i < count; ++i) {
    const auto& e = list[i];
    const auto& r = rc[i];
    if (!r.error.empty()) {
      add(VerifyIssue::kIntegrity, label(i) + ": " + r.error);
      continue;
    }
    if (!(r.root == e.root))
      add(VerifyIssue::kIntegrity, label(i) + ": root system " + r.root.symbol() + ", stored " + e.root.symbol());
    if (r.mu != e.mu)
      add(VerifyIssue::kIntegrity,
          label(i) + ": reduced mass " + format_rational(r.mu) + ", stored " + format_rational(e.mu));
    if (r.inv.hash != e.beta)
      add(VerifyIssue::kIntegrity, label(i) + ": BV hash " + hash_hex(r.inv.hash) + ", stored " + hash_hex(e.beta));
  }

  for (int i = 0; i < count; ++i)
    if (rc[i].error.empty()) report.mass_found[rc[i].root] += rc[i].mu;
  for (const auto& [root, m] : report.mass_found) {
    auto it = table.find(root);
    if (it == table.end() || it->second == 0) {
      add(VerifyIssue::kUnknownRoot, root.symbol() + ": found mass " + format_rational(m) + " but none expected");
    } else if (m > it->second) {
      add(VerifyIssue::kOvershoot,
          root.symbol() + ": found " + format_rational(m) + " exceeds " + format_rational(it->second));
    }
  }
  for (const auto& [root, m] : table) {
    if (m == 0) continue;
    auto it = report.mass_found.find(root);
    const Rational got = it == report.mass_found.end() ? Rational(0) : it->second;
    if (got < m)
      add(VerifyIssue::kDeficit, root.symbol() + ": found " + format_rational(got) + " of " + format_rational(m));
  }

  for (int i = 0; i < count; ++i) {
    if (!rc[i].error.empty()) continue;
    for (int j = 0; j < i; ++j) {
      if (!rc[j].error.empty() || !(rc[i].root == rc[j].root)) continue;
      if (bv_equal(rc[i].inv, rc[j].inv)) {
        add(VerifyIssue::kDuplicateInvariant, label(i) + " has the BV invariant of " + label(j));
        break;
      }
    }
  }
  return report;
}

}  // namespace unihunt
