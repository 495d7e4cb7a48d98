#include "unihunt/neighbor.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace unihunt {

namespace {

std::int64_t fold(std::int64_t v, std::int64_t d) {
  const std::int64_t r = floor_mod(v, d);
  return std::min(r, d - r);
}

// Multiplicity of each folded value 0..d/2.
std::vector<int> multiplicities(std::int64_t d, std::span<const std::int64_t> x) {
  std::vector<int> m(d / 2 + 1, 0);
  for (auto v : x) ++m[fold(v, d)];
  return m;
}

}  // namespace

std::string NormalForm::type_string() const {
  std::vector<int> all = parts;
  if (end > 0) all.push_back(end);
  std::sort(all.rbegin(), all.rend());
  std::string out;
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i;
    while (j < all.size() && all[j] == all[i]) ++j;
    if (!out.empty()) out += ' ';
    out += std::to_string(all[i]) + "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

bool is_normalized(std::int64_t d, std::span<const std::int64_t> x) {
  if (x.empty() || d < 2 || x[0] != 1) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 1 || 2 * x[i] > d) return false;
    if (i > 0 && x[i] < x[i - 1]) return false;
  }
  const auto m = multiplicities(d, x);
  for (std::int64_t j = 2; 2 * j < d; ++j)
    if (m[j] > m[1]) return false;
  return true;
}

NormalForm normal_form(std::int64_t d, std::span<const std::int64_t> x) {
  if (d < 2) throw std::invalid_argument("normal_form: d must be at least 2");
  const auto m = multiplicities(d, x);
  NormalForm f;
  f.index = m[1];
  if (d % 2 == 0) f.end = m[d / 2];
  for (std::int64_t v = 1; 2 * v < d; ++v)
    if (m[v] > 0) f.parts.push_back(m[v]);
  std::sort(f.parts.rbegin(), f.parts.rend());
  return f;
}

Vec scale_fold_sort(std::int64_t d, std::span<const std::int64_t> x, std::int64_t u) {
  const std::int64_t inv = mod_inverse(u, d);
  Vec y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    y[i] = fold(static_cast<std::int64_t>(static_cast<__int128>(floor_mod(x[i], d)) * inv % d), d);
  std::sort(y.begin(), y.end());
  return y;
}

std::optional<Normalized> normalize(std::int64_t d, std::span<const std::int64_t> x) {
  if (d < 2) return std::nullopt;
  for (auto v : x)
    if (floor_mod(v, d) == 0) return std::nullopt;
  if (d == 2) return Normalized{Vec(x.size(), 1), 1};
  const auto m = multiplicities(d, x);
  int best = 0;
  for (std::int64_t v = 1; 2 * v < d; ++v) best = std::max(best, m[v]);
  for (std::int64_t a = 1; 2 * a < d; ++a)
    if (m[a] == best && std::gcd(a, d) == 1) return Normalized{scale_fold_sort(d, x, a), a};
  return std::nullopt;
}

namespace {

class Emitter {
 public:
  Emitter(std::size_t chunk, const BatchVisitor& visit) : chunk_(std::max<std::size_t>(chunk, 1)), visit_(visit) {}

  bool push(Vec x) {
    batch_.push_back(std::move(x));
    if (batch_.size() < chunk_) return true;
    return flush();
  }
  bool flush() {
    if (batch_.empty()) return true;
    const bool go = visit_(batch_);
    batch_.clear();
    stopped_ = !go;
    return go;
  }
  bool stopped() const { return stopped_; }

 private:
  std::size_t chunk_;
  const BatchVisitor& visit_;
  std::vector<Vec> batch_;
  bool stopped_ = false;
};

}  // namespace

void enumerate_normalized(int n, std::int64_t d, const std::vector<int>& parts_in, int end,
                          std::size_t chunk, const BatchVisitor& visit) {
  std::vector<int> parts = parts_in;
  std::sort(parts.rbegin(), parts.rend());
  if (std::accumulate(parts.begin(), parts.end(), 0) + end != n)
    throw std::invalid_argument("enumerate_normalized: parts and end must sum to n");
  if (end > 0 && d % 2 != 0) throw std::invalid_argument("enumerate_normalized: end > 0 needs even d");
  for (int p : parts)
    if (p <= 0) throw std::invalid_argument("enumerate_normalized: parts must be positive");
  Emitter out(chunk, visit);
  if (d == 2) {
    if (parts.empty()) out.push(Vec(n, 1));
    out.flush();
    return;
  }
  if (parts.empty() || d < 3) return;
  const std::int64_t h = (d - 1) / 2;
  std::map<int, int, std::greater<>> avail;
  for (std::size_t i = 1; i < parts.size(); ++i) ++avail[parts[i]];
  int left = static_cast<int>(parts.size()) - 1;
  Vec x(parts[0], 1);

  std::function<bool(std::int64_t)> rec = [&](std::int64_t v) -> bool {
    if (left == 0) {
      Vec full = x;
      full.insert(full.end(), end, d / 2);
      return out.push(std::move(full));
    }
    if (v > h || h - v + 1 < left) return true;
    for (auto& [size, count] : avail) {
      if (count == 0) continue;
      --count;
      --left;
      x.insert(x.end(), size, v);
      const bool go = rec(v + 1);
      x.resize(x.size() - size);
      ++left;
      ++count;
      if (!go) return false;
    }
    return rec(v + 1);
  };
  if (rec(2)) out.flush();
}

void enumerate_all_normalized(int n, std::int64_t d, std::size_t chunk, const BatchVisitor& visit) {
  Emitter out(chunk, visit);
  if (d == 2) {
    out.push(Vec(n, 1));
    out.flush();
    return;
  }
  if (d < 3) return;
  const std::int64_t h = (d - 1) / 2;
  const bool even = d % 2 == 0;
  Vec x;
  int k = 0;
  std::function<bool(std::int64_t, int)> rec = [&](std::int64_t v, int rest) -> bool {
    if (v > h) {
      if (rest > 0 && !even) return true;
      Vec full = x;
      full.insert(full.end(), rest, d / 2);
      return out.push(std::move(full));
    }
    if (!even && rest > k * (h - v + 1)) return true;
    for (int m = std::min(k, rest); m >= 0; --m) {
      x.insert(x.end(), m, v);
      const bool go = rec(v + 1, rest - m);
      x.resize(x.size() - m);
      if (!go) return false;
    }
    return true;
  };
  for (k = n; k >= 1; --k) {
    x.assign(k, 1);
    if (!rec(2, n - k)) return;
  }
  out.flush();
}

std::vector<Vec> line_equivalents(std::int64_t d, std::span<const std::int64_t> x) {
  const auto m = multiplicities(d, x);
  std::vector<Vec> out;
  for (std::int64_t i = 1; 2 * i <= d; ++i)
    if (m[i] == m[1] && std::gcd(i, d) == 1) out.push_back(scale_fold_sort(d, x, i));
  return out;
}

bool keep_line(std::int64_t d, std::span<const std::int64_t> x) {
  const Vec self(x.begin(), x.end());
  for (const auto& e : line_equivalents(d, x))
    if (self < e) return false;
  return true;
}

std::vector<Vec> dedup_lines(std::int64_t d, const std::vector<Vec>& batch) {
  std::vector<Vec> out;
  for (const auto& x : batch)
    if (keep_line(d, x)) out.push_back(x);
  return out;
}

}  // namespace unihunt
