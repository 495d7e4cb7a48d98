#include "unihunt/formats.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "unihunt/bv.hpp"
#include "unihunt/errors.hpp"

namespace unihunt {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto p = s.find(sep, start);
    if (p == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, p - start));
    start = p + 1;
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::int64_t to_i64(const std::string& tok, const std::string& what) {
  std::size_t pos = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (tok.empty() || pos != tok.size()) throw std::invalid_argument("bad " + what + " '" + tok + "'");
  return v;
}

std::uint64_t to_u64(const std::string& tok, const std::string& what) {
  std::size_t pos = 0;
  std::uint64_t v = 0;
  try {
    if (!tok.empty() && tok[0] == '-') throw std::invalid_argument("negative");
    v = std::stoull(tok, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (tok.empty() || pos != tok.size()) throw std::invalid_argument("bad " + what + " '" + tok + "'");
  return v;
}

// Calls f(line, lineno) for each non-blank, non-comment line; wraps errors with the line number.
template <class F>
void for_each_line(std::istream& in, F f) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    try {
      f(t, lineno);
    } catch (const InputError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what(), lineno);
    }
  }
}

template <class F>
auto with_file(const std::string& path, F f) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return f(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto parts = split(text, '/');
  if (parts.size() > 2) throw std::invalid_argument("bad rational '" + text + "'");
  auto parse_int = [&](const std::string& s) {
    Int v;
    const bool digits = !s.empty() && s.find_first_not_of("-0123456789") == std::string::npos &&
                        s.find('-', 1) == std::string::npos && s != "-";
    if (!digits || v.set_str(s, 10) != 0) throw std::invalid_argument("bad rational '" + text + "'");
    return v;
  };
  const Int num = parse_int(parts[0]);
  const Int den = parts.size() == 2 ? parse_int(parts[1]) : Int(1);
  if (sgn(den) <= 0) throw std::invalid_argument("rational needs a positive denominator: '" + text + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (trim(text).empty()) return out;
  for (const auto& tok : split(text, ',')) out.push_back(static_cast<int>(to_i64(trim(tok), "integer")));
  return out;
}

std::string format_entry(const ClassEntry& e) {
  std::ostringstream os;
  os << e.spec.d << ':' << format_vector(e.spec.x) << ':' << e.spec.eps << ':' << format_rational(e.mu) << ':'
     << hash_hex(e.beta) << ':' << e.root.symbol();
  return os.str();
}

ClassEntry parse_entry(const std::string& line) {
  const auto f = split(trim(line), ':');
  if (f.size() != 6) throw std::invalid_argument("list entry needs 6 fields d:x:eps:mu:hash:R, got " + std::to_string(f.size()));
  ClassEntry e;
  e.spec = parse_spec(f[0] + ":" + f[1] + ":" + f[2]);
  e.mu = parse_rational(f[3]);
  if (sgn(e.mu) <= 0) throw std::invalid_argument("reduced mass must be positive");
  e.beta = parse_hash_hex(f[4]);
  e.root = RootSystem::parse(f[5]);
  return e;
}

std::vector<ClassEntry> read_list(std::istream& in) {
  std::vector<ClassEntry> out;
  std::size_t n = 0;
  for_each_line(in, [&](const std::string& t, int) {
    out.push_back(parse_entry(t));
    if (n == 0) n = out.back().spec.x.size();
    if (out.back().spec.x.size() != n) throw std::invalid_argument("entry rank differs from the first entry");
  });
  return out;
}

std::vector<ClassEntry> read_list_file(const std::string& path) {
  return with_file(path, [](std::istream& in) { return read_list(in); });
}

void write_list(std::ostream& out, const std::vector<ClassEntry>& entries) {
  for (const auto& e : entries) out << format_entry(e) << '\n';
}

MassTable read_mass_table(std::istream& in) {
  MassTable t;
  for_each_line(in, [&](const std::string& line, int) {
    const auto f = split(line, ':');
    if (f.size() != 2) throw std::invalid_argument("mass table line must be R:num/den");
    const RootSystem r = RootSystem::parse(trim(f[0]));
    const Rational q = parse_rational(trim(f[1]));
    if (sgn(q) <= 0) throw std::invalid_argument("reduced mass must be positive");
    if (!t.emplace(r, q).second) throw std::invalid_argument("duplicate root system " + r.symbol());
  });
  return t;
}

MassTable read_mass_table_file(const std::string& path) {
  return with_file(path, [](std::istream& in) { return read_mass_table(in); });
}

void write_mass_table(std::ostream& out, const MassTable& table) {
  for (const auto& [r, q] : table) out << r.symbol() << ':' << format_rational(q) << '\n';
}

std::string format_progress(const ProgressRecord& r) {
  std::ostringstream os;
  os << r.d << ' ' << r.iso << ' ' << r.found << ' ' << r.fresh << ' ' << format_rational(r.remaining);
  return os.str();
}

std::vector<ProgressRecord> read_progress(std::istream& in) {
  std::vector<ProgressRecord> out;
  for_each_line(in, [&](const std::string& line, int) {
    std::istringstream is(line);
    std::vector<std::string> tok;
    for (std::string s; is >> s;) tok.push_back(s);
    if (tok.size() != 5) throw std::invalid_argument("progress line must be 'd iso found new rem'");
    out.push_back({to_i64(tok[0], "d"), to_i64(tok[1], "iso"), to_i64(tok[2], "found"), to_i64(tok[3], "new"),
                   parse_rational(tok[4])});
  });
  return out;
}

std::vector<ProgressRecord> read_progress_file(const std::string& path) {
  return with_file(path, [](std::istream& in) { return read_progress(in); });
}

void write_progress(std::ostream& out, const std::vector<ProgressRecord>& records) {
  for (const auto& r : records) out << format_progress(r) << '\n';
}

std::string format_parity(DParity p) {
  switch (p) {
    case DParity::kOdd:
      return "odd";
    case DParity::kEven:
      return "even";
    default:
      return "any";
  }
}

DParity parse_parity(const std::string& text) {
  if (text == "odd") return DParity::kOdd;
  if (text == "even") return DParity::kEven;
  if (text == "any") return DParity::kAny;
  throw std::invalid_argument("d parity must be odd, even or any: '" + text + "'");
}

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

std::string serialize_config(const RunConfig& c) {
  std::ostringstream os;
  os << "subcommand=" << c.subcommand << '\n'
     << "n=" << c.n << '\n'
     << "d=" << c.d << '\n'
     << "x=" << format_vector(c.x) << '\n'
     << "eps=" << c.eps << '\n'
     << "d_min=" << c.d_min << '\n'
     << "d_max=" << c.d_max << '\n'
     << "d_parity=" << format_parity(c.d_parity) << '\n'
     << "parts=" << join_ints(c.parts) << '\n'
     << "end=" << c.end << '\n'
     << "root=" << c.root << '\n'
     << "chunk=" << c.chunk << '\n'
     << "threads=" << c.threads << '\n'
     << "tries=" << c.tries << '\n'
     << "seed=" << c.seed << '\n'
     << "bound=" << c.bound << '\n'
     << "gram=" << c.gram_path << '\n'
     << "mass=" << c.mass_path << '\n'
     << "list=" << c.list_path << '\n'
     << "out=" << c.out_path << '\n'
     << "progress=" << c.progress_path << '\n';
  return os.str();
}

RunConfig parse_config(std::istream& in) {
  RunConfig c;
  for_each_line(in, [&](const std::string& line, int) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("config line must be key=value");
    const std::string k = trim(line.substr(0, eq));
    const std::string v = trim(line.substr(eq + 1));
    if (k == "subcommand") c.subcommand = v;
    else if (k == "n") c.n = static_cast<int>(to_i64(v, k));
    else if (k == "d") c.d = to_i64(v, k);
    else if (k == "x") {
      c.x.clear();
      if (!v.empty())
        for (const auto& t : split(v, ',')) c.x.push_back(to_i64(trim(t), k));
    } else if (k == "eps") c.eps = static_cast<int>(to_i64(v, k));
    else if (k == "d_min") c.d_min = to_i64(v, k);
    else if (k == "d_max") c.d_max = to_i64(v, k);
    else if (k == "d_parity") c.d_parity = parse_parity(v);
    else if (k == "parts") c.parts = parse_int_list(v);
    else if (k == "end") c.end = static_cast<int>(to_i64(v, k));
    else if (k == "root") c.root = v;
    else if (k == "chunk") c.chunk = static_cast<std::size_t>(to_u64(v, k));
    else if (k == "threads") c.threads = static_cast<int>(to_i64(v, k));
    else if (k == "tries") c.tries = to_i64(v, k);
    else if (k == "seed") c.seed = to_u64(v, k);
    else if (k == "bound") c.bound = to_i64(v, k);
    else if (k == "gram") c.gram_path = v;
    else if (k == "mass") c.mass_path = v;
    else if (k == "list") c.list_path = v;
    else if (k == "out") c.out_path = v;
    else if (k == "progress") c.progress_path = v;
    else throw std::invalid_argument("unknown config key '" + k + "'");
  });
  return c;
}

RunConfig read_config_file(const std::string& path) {
  return with_file(path, [](std::istream& in) { return parse_config(in); });
}

}  // namespace unihunt
