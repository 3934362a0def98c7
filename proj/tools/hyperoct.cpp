// hyperoct: critical points of hyperoctahedral-invariant systems.
//
// Exit codes: 0 success, 1 failed check or internal error, 2 bad input,
// 3 positive-dimensional critical set.

#include <iomanip>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "hyperoct/io.hpp"
#include "hyperoct/oracle.hpp"

using namespace hyperoct;

namespace {

struct Options {
  std::string input;
  uint64_t seed = 0;
  std::string field;  // empty: the one named in the file
  bool debug_dup = false;
  bool json = false;
  bool table = false;
  uint32_t n = 3, s = 1, d = 8;
};

// Runs fn with the field named by tag ("Q", "rational" or a prime).
template <class Fn>
int with_field(const std::string& tag, Fn&& fn) {
  if (tag == "Q" || tag == "rational") return fn(RationalField());
  uint64_t p = 0;
  try {
    size_t used = 0;
    p = std::stoull(tag, &used);
    if (used != tag.size()) throw std::invalid_argument(tag);
  } catch (const std::exception&) {
    throw ParseError("field must be a prime or Q, got '" + tag + "'");
  }
  if (p > UINT32_MAX) throw ParseError("prime too large: " + tag);
  try {
    return fn(PrimeField(static_cast<uint32_t>(p)));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string field_of(const Options& o, const Json& j) {
  if (!o.field.empty()) return o.field;
  uint64_t p = system_characteristic(j);
  return p == 0 ? "Q" : std::to_string(p);
}

// Degree bound d: the file's "d" if present, else the actual degree.
template <class K>
uint64_t nC_of(const InvariantSystem<K>& sys, const Json& j) {
  uint32_t d = sys.degree();
  if (j.contains("d")) {
    if (!is_count(j["d"])) throw ParseError("'d' must be a count");
    uint32_t bound = j["d"].get<uint32_t>();
    if (bound < d) throw ParseError("'d' is below the degree of the system");
    d = bound;
  }
  if (d % 2) throw ParseError("degree bound must be even");
  return d == 0 ? 0 : bound_nC(sys.n, sys.s, d);
}

template <class K>
void print_rep_table(const HyperRep<K>& rep, uint64_t nC) {
  std::cout << std::left << std::setw(18) << "type" << std::setw(8) << "level" << std::setw(8) << "degree"
            << std::setw(8) << "orbit" << std::setw(10) << "expanded" << "v\n";
  for (const auto& e : rep.entries)
    std::cout << std::setw(18) << e.type.to_string() << std::setw(8) << e.level << std::setw(8) << e.param.degree()
              << std::setw(8) << orbit_size_x(e.type.lambda, rep.n) << std::setw(10) << expansion_count(e, rep.n)
              << e.param.v.to_string() << "\n";
  std::cout << "compressed " << rep.compressed_total() << ", expanded " << expansion_count(rep) << ", nC " << nC
            << ", seed " << rep.seed << "\n";
}

int cmd_solve(const Options& o) {
  Json j = read_json_file(o.input);
  return with_field(field_of(o, j), [&](auto f) {
    auto sys = system_from_json(j, f);
    auto rep = critical_hyperoctahedral(sys, o.seed, {o.debug_dup});
    if (o.table)
      print_rep_table(rep, nC_of(sys, j));
    else
      std::cout << rep_to_json(rep, nC_of(sys, j)).dump(2) << "\n";
    return 0;
  });
}

int cmd_naive(const Options& o) {
  Json j = read_json_file(o.input);
  return with_field(field_of(o, j), [&](auto f) {
    auto sys = system_from_json(j, f);
    Rng rng(o.seed);
    auto r = naive_solve(sys, rng);
    r.seed = o.seed;
    if (o.table)
      std::cout << "equations " << naive_system(sys).size() << ", points " << r.degree() << "\n";
    else
      std::cout << param_to_json(r).dump(2) << "\n";
    return 0;
  });
}

int cmd_check(const Options& o) {
  Json j = read_json_file(o.input);
  return with_field(field_of(o, j), [&](auto f) {
    auto sys = system_from_json(j, f);
    auto rep = critical_hyperoctahedral(sys, o.seed, {o.debug_dup});
    Rng rng(o.seed);
    uint64_t naive = naive_solve(sys, rng).degree();
    uint64_t expanded = expansion_count(rep);
    uint64_t nC = nC_of(sys, j);
    // Entries from coordinate subspaces of dimension s, where the rank
    // condition holds automatically.
    uint64_t auto_c = 0, auto_e = 0;
    for (const auto& e : rep.entries)
      if (e.level == sys.s) {
        auto_c += e.param.degree();
        auto_e += expansion_count(e, sys.n);
      }
    bool pass = expanded == naive;
    if (o.json) {
      Json out{{"size_H", rep.compressed_total()},
               {"size_N", naive},
               {"expansion", expanded},
               {"bound_nC", nC},
               {"rank_automatic", {{"compressed", auto_c}, {"expanded", auto_e}}},
               {"status", pass ? "PASS" : "FAIL"}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "Size(H)    " << rep.compressed_total() << "\n"
                << "Size(N)    " << naive << "\n"
                << "expansion  " << expanded << "\n"
                << "nC         " << nC << "\n"
                << "level s    " << auto_c << " compressed, " << auto_e << " expanded (rank condition automatic)\n"
                << "level > s  " << rep.compressed_total() - auto_c << " compressed, " << expanded - auto_e
                << " expanded\n"
                << (pass ? "PASS" : "FAIL") << "  expansion " << (pass ? "==" : "!=") << " Size(N)\n";
    }
    return pass ? 0 : 1;
  });
}

int cmd_gen(const Options& o) {
  if (o.d % 2) throw ParseError("d must be even");
  if (o.s == 0 || o.s >= o.n) throw ParseError("need 0 < s < n");
  if (o.n >= kMaxVars) throw ParseError("n out of range");
  return with_field(o.field.empty() ? std::to_string(kDefaultPrime) : o.field, [&](auto f) {
    auto sys = random_invariant_system(f, o.n, o.s, o.d, o.seed);
    try {
      sys.validate();
    } catch (const InvarianceError& e) {
      throw ParseError(e.what());
    }
    Json out = system_to_json(sys);
    out["d"] = o.d;
    std::cout << out.dump(2) << "\n";
    return 0;
  });
}

int cmd_count(const Options& o) {
  BoundSet b = bounds(o.n, o.s, o.d);
  if (o.json) {
    std::cout << Json{{"n", o.n}, {"s", o.s}, {"d", o.d}, {"C", b.C}, {"nC", b.nC}, {"E", b.E}, {"Gamma", b.Gamma},
                      {"delta", b.delta}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "n " << o.n << ", s " << o.s << ", d " << o.d << "\n"
              << "C      " << b.C << "\n"
              << "nC     " << b.nC << "\n"
              << "E      " << b.E << "\n"
              << "Gamma  " << b.Gamma << "\n"
              << "delta  " << b.delta << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical points of hyperoctahedral-invariant polynomial systems"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* c, bool needs_input) {
    if (needs_input) c->add_option("input", o.input, "system file (JSON)")->required();
    c->add_option("--seed", o.seed, "random seed");
    c->add_option("--field", o.field, "prime p or Q; overrides the file");
    auto* js = c->add_flag("--json", o.json, "JSON output");
    c->add_flag("--table", o.table, "table output")->excludes(js);
  };
  auto add_nsd = [&](CLI::App* c) {
    c->add_option("--n", o.n, "number of variables");
    c->add_option("--s", o.s, "number of constraints");
    c->add_option("--d", o.d, "degree bound (even)");
  };

  auto* solve = app.add_subcommand("solve", "critical points by orbit type");
  add_common(solve, true);
  solve->add_flag("--debug-dup", o.debug_dup, "verify that repeated types describe nested sets");
  auto* check = app.add_subcommand("check", "compare with the direct solution");
  add_common(check, true);
  check->add_flag("--debug-dup", o.debug_dup, "verify that repeated types describe nested sets");
  auto* naive = app.add_subcommand("naive", "solve constraints plus all maximal minors directly");
  add_common(naive, true);
  auto* gen = app.add_subcommand("gen", "random invariant system");
  add_common(gen, false);
  add_nsd(gen);
  auto* count = app.add_subcommand("count", "degree bounds for (n, s, d)");
  add_common(count, false);
  add_nsd(count);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*solve) return cmd_solve(o);
    if (*check) return cmd_check(o);
    if (*naive) return cmd_naive(o);
    if (*gen) return cmd_gen(o);
    if (*count) return cmd_count(o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvarianceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PositiveDimensional& e) {
    std::cerr << "error: positive-dimensional: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
