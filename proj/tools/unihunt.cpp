#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "unihunt/bv.hpp"
#include "unihunt/characteristic.hpp"
#include "unihunt/engine.hpp"
#include "unihunt/errors.hpp"
#include "unihunt/isometry.hpp"
#include "unihunt/oracle.hpp"
#include "unihunt/reduce.hpp"
#include "unihunt/streams.hpp"
#include "unihunt/verify.hpp"

using namespace unihunt;

namespace {

// "1,2,5..9" style lists.
Vec parse_vector(const std::string& text) {
  Vec out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto dots = tok.find("..");
    try {
      if (dots == std::string::npos) {
        out.push_back(std::stoll(tok));
      } else {
        const std::int64_t a = std::stoll(tok.substr(0, dots)), b = std::stoll(tok.substr(dots + 2));
        if (b < a || b - a > 100000) throw std::invalid_argument("range");
        for (std::int64_t v = a; v <= b; ++v) out.push_back(v);
      }
    } catch (const std::logic_error&) {
      throw InputError("bad integer list '" + text + "'");
    }
  }
  return out;
}

std::string join(const Vec& v) { return format_vector(v); }

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  // Write then rename, so a checkpoint is never half written.
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
    if (!out) throw InputError("cannot write " + path);
  }
  std::filesystem::rename(tmp, path);
}

Lattice load_lattice(const RunConfig& c) {
  if (!c.gram_path.empty()) return read_gram_file(c.gram_path);
  if (c.d > 0 && !c.x.empty()) {
    if (c.n > 0 && static_cast<int>(c.x.size()) != c.n)
      throw InputError("--x has " + std::to_string(c.x.size()) + " entries, --n is " + std::to_string(c.n));
    return neighbor(c.d, c.x, c.eps);
  }
  throw InputError("a lattice is needed: --gram FILE or --d D --x X [--eps E]");
}

std::string gram_text(const Lattice& l) {
  std::ostringstream os;
  write_gram(os, l);
  return os.str();
}

IsometryOptions iso_options(const RunConfig& c) {
  IsometryOptions o;
  o.seed = c.seed;
  return o;
}

int cmd_neighbor(const RunConfig& c) {
  if (c.d <= 0 || c.x.empty()) throw InputError("neighbor needs --d and --x");
  const Lattice l = load_lattice(c);
  const auto counts = norm_counts(l, 3);
  std::ostringstream s;
  s << "# spec " << format_spec({c.d, c.x, c.eps}) << "\n";
  s << "# det " << l.determinant().get_str() << " " << (l.is_even() ? "even" : "odd") << "\n";
  s << "# r1 " << counts.at(1) << " r2 " << counts.at(2) << " r3 " << counts.at(3) << "\n";
  s << "# roots " << root_system(l).symbol() << "\n";
  if (c.out_path.empty()) {
    std::cout << s.str() << gram_text(l);
  } else {
    write_text(c.out_path, gram_text(l));
    std::cout << s.str();
  }
  return 0;
}

int cmd_shorts(const RunConfig& c) {
  const Lattice l = load_lattice(c);
  if (c.bound < 1) throw InputError("--bound must be positive");
  const auto vs = short_vectors(l, c.bound);
  std::map<std::int64_t, std::int64_t> counts;
  for (const auto& r : vs.reps) counts[r.norm] += 2;
  for (std::int64_t k = 1; k <= c.bound; ++k) std::cout << "r" << k << " " << counts[k] << "\n";
  if (!c.out_path.empty()) {
    std::ostringstream os;
    for (const auto& r : vs.reps) os << r.norm << ":" << join(r.v) << "\n";
    write_text(c.out_path, os.str());
  }
  return 0;
}

int cmd_roots(const RunConfig& c) {
  const Lattice l = load_lattice(c);
  const RootSystem r = root_system(l);
  std::cout << "roots " << r.symbol() << "\n";
  std::cout << "count " << r.root_count() << "\n";
  std::cout << "weyl " << weyl_order(r).get_str() << "\n";
  return 0;
}

int cmd_bv(const RunConfig& c) {
  const Lattice l = load_lattice(c);
  const BvInvariant inv = bv(l);
  std::cout << "hash " << hash_hex(inv.hash) << "\n";
  std::cout << "vertices " << inv.vertices << "\n";
  std::cout << "edges " << inv.edges << "\n";
  std::cout << "arrows " << inv.arrows << "\n";
  return 0;
}

int cmd_reduce(const RunConfig& c) {
  const Lattice l = load_lattice(c);
  std::cerr << "seed " << c.seed << "\n";
  const auto res = reduce(l, c.bound, c.tries, c.seed);
  std::cout << "success " << (res.success ? 1 : 0) << "\n";
  std::cout << "tries " << res.tries_used << "\n";
  if (!res.success) return 1;
  std::cout << "bound " << res.achieved_bound << "\n";
  std::ostringstream os;
  for (int i = 0; i < res.basis.rows(); ++i) {
    for (int j = 0; j < res.basis.cols(); ++j) os << (j ? " " : "") << res.basis(i, j).get_str();
    os << "\n";
  }
  write_text(c.out_path, os.str());
  return 0;
}

int cmd_aut(const RunConfig& c) {
  const Lattice l = load_lattice(c);
  const auto rep = aut_order(l, iso_options(c));
  std::cout << "order " << rep.order.get_str() << "\n";
  std::cout << "roots " << rep.roots.symbol() << "\n";
  std::cout << "weyl " << rep.weyl.get_str() << "\n";
  std::cout << "reduced_order " << rep.reduced_order.get_str() << "\n";
  std::cout << "reduced_mass " << format_rational(rep.reduced_mass) << "\n";
  return 0;
}

int cmd_exc(const RunConfig& c) {
  const Lattice l = load_lattice(c);
  if (l.is_even()) {
    std::cout << "even lattice: 0 is characteristic\n";
    return 0;
  }
  const auto rep = characteristic_vectors(l, 7);
  std::cout << "exc " << rep.exc_size << "\n";
  const auto m = min_characteristic_norm(l, l.rank());
  std::cout << "min_norm " << (m ? std::to_string(*m) : std::string("none<=n")) << "\n";
  for (const auto& v : rep.vectors) std::cout << v.norm << ":" << join(v.v) << "\n";
  return 0;
}

int cmd_companions(const RunConfig& c) {
  const Lattice l = load_lattice(c);
  const auto comps = companions(l);
  for (int k = 0; k < 2; ++k) {
    const auto counts = norm_counts(comps[k], 1);
    std::cout << "companion " << k + 1 << " roots " << root_system(comps[k]).symbol() << " r1 " << counts.at(1)
              << (counts.at(1) > 0 ? " singular" : "") << "\n";
    if (!c.out_path.empty()) write_text(c.out_path + "." + std::to_string(k + 1), gram_text(comps[k]));
  }
  return 0;
}

HuntConfig hunt_config(const RunConfig& c, bool resume) {
  if (c.n <= 0) throw InputError("--n is required");
  if (c.d_max <= 0) throw InputError("--d-max is required: the search is never unbounded");
  HuntConfig h;
  h.d_min = c.d_min;
  h.d_max = c.d_max;
  h.parity = c.d_parity;
  h.chunk = c.chunk;
  h.threads = c.threads;
  h.iso = iso_options(c);
  if (resume) {
    if (c.list_path.empty() || c.progress_path.empty()) throw InputError("--resume needs --list and --progress");
    if (std::filesystem::exists(c.progress_path)) {
      h.resume_progress = read_progress_file(c.progress_path);
      if (std::filesystem::exists(c.list_path)) h.resume_entries = read_list_file(c.list_path);
    }
  }
  const std::string list = c.list_path, progress = c.progress_path;
  h.checkpoint = [list, progress](const HuntResult& r) {
    if (!list.empty()) {
      std::ostringstream os;
      write_list(os, r.entries);
      write_text(list, os.str());
    }
    if (!progress.empty()) {
      std::ostringstream os;
      write_progress(os, r.progress);
      write_text(progress, os.str());
    }
  };
  return h;
}

int report_hunt(const RunConfig& c, const HuntResult& r) {
  if (c.list_path.empty()) write_list(std::cout, r.entries);
  for (const auto& col : r.collisions) std::cerr << "bv hash collision " << col << "\n";
  std::cerr << (r.complete ? "complete" : "incomplete") << " at d " << r.last_d << ", remaining "
            << format_rational(r.ledger.total_remaining()) << "\n";
  return 0;
}

int cmd_bne(const RunConfig& c, bool resume) {
  if (c.root.empty()) throw InputError("bne needs --root");
  if (c.mass_path.empty()) throw InputError("bne needs --mass");
  const RootSystem r = RootSystem::parse(c.root);
  const MassTable table = read_mass_table_file(c.mass_path);
  auto it = table.find(r);
  if (it == table.end()) throw InputError("root system " + r.symbol() + " is not in " + c.mass_path);
  const auto res = bne(c.n, r, it->second, c.parts, c.end, hunt_config(c, resume));
  return report_hunt(c, res);
}

int cmd_ne(const RunConfig& c, bool resume) {
  if (c.mass_path.empty()) throw InputError("ne needs --mass");
  const auto res = ne(c.n, read_mass_table_file(c.mass_path), hunt_config(c, resume));
  return report_hunt(c, res);
}

int cmd_strict2(const RunConfig& c) {
  if (c.d <= 0 || c.x.empty()) throw InputError("strict2 needs --d and --x");
  std::cout << "candidates " << strict_two_count(c.d, c.x).get_str() << "\n";
  std::cout << "visible " << visible_root_system(c.d, c.x).symbol() << "\n";
  for (const auto& s : strict_two_neighbors({c.d, c.x, 0})) std::cout << format_spec(s) << "\n";
  return 0;
}

int cmd_verify(const RunConfig& c) {
  if (c.list_path.empty() || c.mass_path.empty()) throw InputError("verify needs --list and --mass");
  const auto list = read_list_file(c.list_path);
  const auto table = read_mass_table_file(c.mass_path);
  VerifyOptions o;
  o.threads = c.threads;
  o.iso = iso_options(c);
  const auto rep = verify(list, table, o);
  for (const auto& f : rep.findings) std::cout << issue_name(f.issue) << ": " << f.message << "\n";
  std::cout << rep.summary() << "\n";
  return rep.passed() ? 0 : 1;
}

int cmd_oracle(const RunConfig& c) {
  if (c.n <= 0) throw InputError("oracle-mass needs --n");
  const auto res = two_neighbor_closure(c.n, c.threads);
  std::ostringstream os;
  os << "# rank " << c.n << ", " << res.classes.size() << " classes\n";
  for (const auto& k : res.classes)
    os << "# r1 " << k.r1 << " roots " << k.root.symbol() << " order " << k.aut.get_str() << "\n";
  write_mass_table(os, res.mass_table());
  write_text(c.out_path, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  // A config file supplies defaults; explicit flags override it.
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--config") {
      try {
        cfg = read_config_file(argv[i + 1]);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
    }
  }

  CLI::App app{"Neighbor-method search for unimodular lattices"};
  app.fallthrough();
  app.require_subcommand(1);
  std::string config_path, save_path, x_text = join(cfg.x), parts_text, parity_text = format_parity(cfg.d_parity);
  for (std::size_t i = 0; i < cfg.parts.size(); ++i) parts_text += (i ? "," : "") + std::to_string(cfg.parts[i]);
  bool resume = false;
  app.add_option("--config", config_path, "Read settings from a key=value file");
  app.add_option("--save-config", save_path, "Write the effective settings to a file");
  app.add_option("--threads", cfg.threads, "Thread count (0 = all)");
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--chunk", cfg.chunk, "Candidates per chunk");
  app.add_option("--d-min", cfg.d_min, "Smallest d");
  app.add_option("--d-max", cfg.d_max, "Largest d");
  app.add_option("--d-parity", parity_text, "odd, even or any");
  app.add_option("--tries", cfg.tries, "Random tries for reduce");
  app.add_option("--bound", cfg.bound, "Norm bound");
  app.add_option("--n", cfg.n, "Rank");
  app.add_option("--d", cfg.d, "Neighbor index d");
  app.add_option("--x", x_text, "Vector x, e.g. 1,2,3 or 1..29");
  app.add_option("--eps", cfg.eps, "Parity choice for even d");
  app.add_option("--parts", parts_text, "Multiplicities of the values below d/2");
  app.add_option("--end", cfg.end, "Multiplicity of d/2");
  app.add_option("--root", cfg.root, "Root system symbol");
  app.add_option("--gram", cfg.gram_path, "Gram matrix file");
  app.add_option("--mass", cfg.mass_path, "Mass table file");
  app.add_option("--list", cfg.list_path, "List file");
  app.add_option("--out", cfg.out_path, "Output file");
  app.add_option("--progress", cfg.progress_path, "Progress log file");
  app.add_flag("--resume", resume, "Continue from --list and --progress");

  const std::vector<std::pair<std::string, std::string>> subs = {
      {"neighbor", "Build N_d(x; eps) and print its Gram matrix"},
      {"shorts", "Count short vectors up to --bound"},
      {"roots", "Root system"},
      {"bv", "BV invariant"},
      {"reduce", "Random search for a basis of norm <= --bound"},
      {"aut", "Automorphism group order"},
      {"exc", "Characteristic vectors of norm < 8"},
      {"companions", "Companions of a lattice of rank 4 mod 8"},
      {"bne", "Biased neighbor search for one root system"},
      {"ne", "Neighbor search over all types"},
      {"strict2", "Strict 2-neighbors of an odd-d neighbor"},
      {"verify", "Check a list file against a mass table"},
      {"oracle-mass", "Mass table by 2-neighbor closure (small n)"},
  };
  for (const auto& [name, help] : subs) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cfg.subcommand = app.get_subcommands().front()->get_name();
    cfg.x = x_text.empty() ? Vec{} : parse_vector(x_text);
    cfg.parts = parts_text.empty() ? std::vector<int>{} : parse_int_list(parts_text);
    cfg.d_parity = parse_parity(parity_text);
    if (!save_path.empty()) write_text(save_path, serialize_config(cfg));

    const std::string& s = cfg.subcommand;
    if (s == "neighbor") return cmd_neighbor(cfg);
    if (s == "shorts") return cmd_shorts(cfg);
    if (s == "roots") return cmd_roots(cfg);
    if (s == "bv") return cmd_bv(cfg);
    if (s == "reduce") return cmd_reduce(cfg);
    if (s == "aut") return cmd_aut(cfg);
    if (s == "exc") return cmd_exc(cfg);
    if (s == "companions") return cmd_companions(cfg);
    if (s == "bne") return cmd_bne(cfg, resume);
    if (s == "ne") return cmd_ne(cfg, resume);
    if (s == "strict2") return cmd_strict2(cfg);
    if (s == "verify") return cmd_verify(cfg);
    if (s == "oracle-mass") return cmd_oracle(cfg);
  } catch (const InconsistencyError& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
