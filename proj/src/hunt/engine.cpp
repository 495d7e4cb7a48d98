#include "unihunt/engine.hpp"

#include <exception>

#include <omp.h>

#include "unihunt/errors.hpp"

namespace unihunt {

InvariantRegistry::Outcome InvariantRegistry::insert(const RootSystem& r, const BvInvariant& inv) {
  auto& bucket = table_[r];
  auto [lo, hi] = bucket.equal_range(inv.hash);
  bool collided = false;
  for (auto it = lo; it != hi; ++it) {
    if (bv_equal(it->second, inv)) return Outcome::kKnown;
    collided = true;
  }
  bucket.emplace(inv.hash, inv);
  ++count_;
  return collided ? Outcome::kCollision : Outcome::kNew;
}

namespace {

struct Outcome {
  int eps = 0;
  RootSystem root;
  BvInvariant inv;
  Lattice lattice;
};

struct CandidateResult {
  bool iso = false;
  std::vector<Outcome> kept;
  std::exception_ptr error;
};

bool parity_ok(DParity p, std::int64_t d) {
  if (p == DParity::kOdd) return d % 2 == 1;
  if (p == DParity::kEven) return d % 2 == 0;
  return true;
}

int thread_count(const HuntConfig& c) { return c.threads > 0 ? c.threads : omp_get_max_threads(); }

class Hunt {
 public:
  Hunt(int n, MassTable table, const HuntConfig& config) : n_(n), config_(config) {
    if (config.d_max < config.d_min || config.d_max < 1)
      throw std::invalid_argument("hunt: a d-limit d_max >= d_min is required");
    if (config.chunk == 0) throw std::invalid_argument("hunt: chunk must be positive");
    result_.ledger = MassLedger(std::move(table));
  }

  // end_filter < 0: all types (NE); otherwise the fixed type of a BNE run.
  HuntResult run(const std::vector<int>* parts, int end) {
    std::int64_t start = std::max<std::int64_t>(config_.d_min, 1);
    start = resume(start);
    result_.complete = result_.ledger.complete();
    if (result_.complete) {
      if (config_.checkpoint) config_.checkpoint(result_);
      return result_;
    }
    for (std::int64_t d = start; d <= config_.d_max; ++d) {
      if (!parity_ok(config_.parity, d)) continue;
      ProgressRecord rec;
      rec.d = d;
      auto visit = [&](std::vector<Vec>& batch) {
        process_chunk(d, batch, parts ? end : -1, rec);
        return !result_.ledger.complete();
      };
      if (parts) {
        // A type with coordinates equal to d/2 has no candidates for odd d.
        if (end == 0 || d % 2 == 0) enumerate_normalized(n_, d, *parts, end, config_.chunk, visit);
      } else
        enumerate_all_normalized(n_, d, config_.chunk, visit);
      rec.remaining = result_.ledger.total_remaining();
      result_.progress.push_back(rec);
      result_.last_d = d;
      result_.complete = result_.ledger.complete();
      if (config_.checkpoint) config_.checkpoint(result_);
      if (result_.complete) break;
    }
    return result_;
  }

 private:
  // Replays persisted entries up to the last fully processed d; returns the next d.
  std::int64_t resume(std::int64_t start) {
    if (config_.resume_progress.empty()) {
      if (!config_.resume_entries.empty())
        throw std::invalid_argument("hunt: resume entries given without progress records");
      return start;
    }
    const std::int64_t last = config_.resume_progress.back().d;
    result_.progress = config_.resume_progress;
    result_.last_d = last;
    for (const auto& e : config_.resume_entries) {
      if (e.spec.d > last) continue;
      Lattice lat = neighbor(e.spec);
      RootSystem r = root_system(lat);
      BvInvariant inv = bv(lat);
      if (!(r == e.root) || inv.hash != e.beta)
        throw InconsistencyError("resume: stored entry does not recompute: " + format_entry(e));
      registry_.insert(r, inv);
      result_.ledger.subtract(e);
      result_.entries.push_back(e);
    }
    if (result_.progress.back().remaining != result_.ledger.total_remaining())
      throw InconsistencyError("resume: progress log and list disagree on the remaining mass");
    return std::max(start, last + 1);
  }

  CandidateResult evaluate(std::int64_t d, const Vec& x, int end) const {
    CandidateResult out;
    if (!is_isotropic(d, x) || !keep_line(d, x)) return out;
    out.iso = true;
    const int e = end >= 0 ? end : normal_form(d, x).end;
    const int eps_max = (d % 2 == 1 || e > 0) ? 0 : 1;
    for (int eps = 0; eps <= eps_max; ++eps) {
      Lattice lat = neighbor(d, x, eps);
      if (norm_counts(lat, 1)[1] != 0) continue;
      RootSystem r = root_system(lat);
      if (!result_.ledger.open(r)) continue;
      BvInvariant inv = bv(lat);
      out.kept.push_back({eps, std::move(r), std::move(inv), std::move(lat)});
    }
    return out;
  }

  void process_chunk(std::int64_t d, const std::vector<Vec>& batch, int end, ProgressRecord& rec) {
    const int count = static_cast<int>(batch.size());
    std::vector<CandidateResult> results(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count(config_))
    for (int i = 0; i < count; ++i) {
      try {
        results[i] = evaluate(d, batch[i], end);
      } catch (...) {
        results[i].error = std::current_exception();
      }
    }
    for (auto& r : results)
      if (r.error) std::rethrow_exception(r.error);

    // Single writer: registry order follows candidate order.
    struct Pending {
      ClassEntry entry;
      const Lattice* lattice;
    };
    std::vector<Pending> pending;
    for (int i = 0; i < count; ++i) {
      if (results[i].iso) ++rec.iso;
      for (auto& o : results[i].kept) {
        ++rec.found;
        auto status = registry_.insert(o.root, o.inv);
        if (status == InvariantRegistry::Outcome::kKnown) continue;
        NeighborSpec spec{d, batch[i], o.eps};
        if (status == InvariantRegistry::Outcome::kCollision)
          result_.collisions.push_back(format_spec(spec) + " " + hash_hex(o.inv.hash));
        ClassEntry e;
        e.spec = std::move(spec);
        e.beta = o.inv.hash;
        e.root = o.root;
        pending.push_back({std::move(e), &o.lattice});
      }
    }

    const int np = static_cast<int>(pending.size());
    std::vector<std::exception_ptr> errors(np);
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count(config_))
    for (int k = 0; k < np; ++k) {
      try {
        pending[k].entry.mu = aut_order(*pending[k].lattice, config_.iso).reduced_mass;
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);

    for (auto& p : pending) {
      result_.ledger.subtract(p.entry);
      result_.entries.push_back(p.entry);
      ++rec.fresh;
    }
  }

  int n_;
  HuntConfig config_;
  HuntResult result_;
  InvariantRegistry registry_;
};

}  // namespace

HuntResult bne(int n, const RootSystem& r, const Rational& rmass, const std::vector<int>& parts, int end,
               const HuntConfig& config) {
  int total = end;
  for (int p : parts) {
    if (p <= 0) throw std::invalid_argument("bne: partition parts must be positive");
    total += p;
  }
  if (end < 0 || total != n) throw std::invalid_argument("bne: partition plus end must equal n");
  if (rmass <= 0) throw std::invalid_argument("bne: reduced mass must be positive");
  Hunt hunt(n, MassTable{{r, rmass}}, config);
  return hunt.run(&parts, end);
}

HuntResult ne(int n, const MassTable& table, const HuntConfig& config) {
  MassTable t;
  for (const auto& [r, m] : table) {
    if (m < 0) throw std::invalid_argument("ne: negative mass for " + r.symbol());
    if (m > 0) t.emplace(r, m);
  }
  Hunt hunt(n, std::move(t), config);
  return hunt.run(nullptr, -1);
}

}  // namespace unihunt
