// Command-line front end. Talks to the library only through misinfo.h.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "misinfo.h"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitInput = 2;

struct Common {
  std::string in = "-";
  std::string out = "-";
  std::size_t threads = 1;
  std::uint64_t seed = 0;
  std::string format;
  double tol = 1e-9;
  double support_eps = 1e-7;
  bool allow_degenerate = false;
  std::size_t max_nodes = 1000000;
  bool one_based = false;
};

struct InputError {
  std::string message;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError{"cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw InputError{"cannot write '" + path + "'"};
}

int status_exit(mi_status s) {
  if (s == MI_OK) return 0;
  std::cerr << "error: " << mi_last_error() << "\n";
  return s == MI_ERR_DOMAIN ? kExitDomain : kExitInput;
}

// RAII holders for library handles.
struct Options {
  mi_options* p = mi_options_new();
  ~Options() { mi_options_free(p); }
};
struct Text {
  char* p = nullptr;
  ~Text() { mi_string_free(p); }
};
struct Misinfo {
  mi_misinfo* p = nullptr;
  ~Misinfo() { mi_misinfo_free(p); }
};
struct Game {
  mi_game* p = nullptr;
  ~Game() { mi_game_free(p); }
};

mi_status configure(const Common& c, Options& o) {
  mi_status s;
  if ((s = mi_options_set_threads(o.p, c.threads)) != MI_OK) return s;
  if ((s = mi_options_set_seed(o.p, c.seed)) != MI_OK) return s;
  if ((s = mi_options_set_tolerance(o.p, c.tol)) != MI_OK) return s;
  if ((s = mi_options_set_support_eps(o.p, c.support_eps)) != MI_OK) return s;
  if ((s = mi_options_set_allow_degenerate(o.p, c.allow_degenerate ? 1 : 0)) != MI_OK) return s;
  if ((s = mi_options_set_max_nodes(o.p, c.max_nodes)) != MI_OK) return s;
  return mi_options_set_index_base(o.p, c.one_based ? 1 : 0);
}

void add_common(CLI::App* cmd, Common& c, bool with_input = true) {
  if (with_input) cmd->add_option("--in", c.in, "Input JSON file, - for stdin");
  cmd->add_option("--out", c.out, "Output file, - for stdout");
  cmd->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", c.seed, "Seed for every random choice");
  cmd->add_option("--tol", c.tol, "Numeric solver tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--support-eps", c.support_eps, "Numeric support threshold")->check(CLI::PositiveNumber);
  cmd->add_flag("--allow-degenerate", c.allow_degenerate, "Use vertex equilibria of degenerate games");
  cmd->add_option("--max-nodes", c.max_nodes, "Cap on distinct games during traversal")->check(CLI::PositiveNumber);
  cmd->add_flag("--one-based", c.one_based, "Report positions 1-based");
}

using Producer = mi_status (*)(const mi_misinfo*, const mi_options*, char**);

int run_misinfo_report(const Common& c, Producer produce) {
  Options o;
  if (mi_status s = configure(c, o); s != MI_OK) return status_exit(s);
  std::string text = read_input(c.in);
  Misinfo mg;
  if (mi_status s = mi_misinfo_from_json(text.c_str(), &mg.p); s != MI_OK) return status_exit(s);
  Text out;
  if (mi_status s = produce(mg.p, o.p, &out.p); s != MI_OK) return status_exit(s);
  write_output(c.out, out.p);
  return 0;
}

std::vector<std::size_t> parse_counts(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      long v = std::stol(part, &used);
      if (used != part.size() || v < 1) throw InputError{"bad strategy count '" + part + "'"};
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::logic_error&) {
      throw InputError{"bad strategy count '" + part + "'"};
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Misinformation games: equilibria, adaptation and stable misinformed equilibria"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(mi_version()));

  Common c;
  auto* solve = app.add_subcommand("solve", "Equilibria of a normal-form game");
  add_common(solve, c);
  auto* nme = app.add_subcommand("nme", "Natural misinformed equilibria, PoM and PoA");
  add_common(nme, c);
  auto* canon = app.add_subcommand("canonicalize", "Pad a misinformation game to canonical form");
  add_common(canon, c);
  auto* inflate = app.add_subcommand("inflate", "Add dummy players and dominated strategies to a game");
  add_common(inflate, c);
  std::size_t players = 0;
  std::string strategies;
  inflate->add_option("--players", players, "Target number of players")->required();
  inflate->add_option("--strategies", strategies, "Target strategy counts, comma separated")->required();
  auto* adapt = app.add_subcommand("adapt", "Run the adaptation procedure and report its metrics");
  add_common(adapt, c);
  adapt->add_option("--format", c.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  auto* sme = app.add_subcommand("sme", "All stable misinformed equilibria");
  add_common(sme, c);
  auto* one = app.add_subcommand("one-sme", "One stable misinformed equilibrium along a single path");
  add_common(one, c);
  auto* dot = app.add_subcommand("export-dot", "Adaptation graph in Graphviz format");
  add_common(dot, c);
  bool loopless = false;
  dot->add_flag("--loopless", loopless, "Drop self-loops and aliases");
  auto* exp = app.add_subcommand("experiment", "Monte Carlo over random misinformation games");
  add_common(exp, c, false);
  std::string setting = "2x2";
  std::size_t runs = 100;
  long lo = -10, hi = 10;
  exp->add_option("--setting", setting, "Shape such as 3x2");
  exp->add_option("--runs", runs, "Number of runs")->check(CLI::PositiveNumber);
  exp->add_option("--lo", lo, "Smallest payoff");
  exp->add_option("--hi", hi, "Largest payoff");
  exp->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  auto* adv = app.add_subcommand("adversarial", "Instance whose adaptation needs one step per position");
  add_common(adv, c, false);
  adv->add_option("--setting", setting, "Shape such as 3x2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*solve) {
      Options o;
      if (mi_status s = configure(c, o); s != MI_OK) return status_exit(s);
      std::string text = read_input(c.in);
      Game g;
      if (mi_status s = mi_game_from_json(text.c_str(), &g.p); s != MI_OK) return status_exit(s);
      Text out;
      if (mi_status s = mi_solve(g.p, o.p, &out.p); s != MI_OK) return status_exit(s);
      write_output(c.out, out.p);
      return 0;
    }
    if (*inflate) {
      auto counts = parse_counts(strategies);
      std::string text = read_input(c.in);
      Game g, big;
      if (mi_status s = mi_game_from_json(text.c_str(), &g.p); s != MI_OK) return status_exit(s);
      if (mi_status s = mi_inflate(g.p, players, counts.data(), counts.size(), &big.p); s != MI_OK)
        return status_exit(s);
      Text out;
      if (mi_status s = mi_game_to_json(big.p, &out.p); s != MI_OK) return status_exit(s);
      write_output(c.out, out.p);
      return 0;
    }
    if (*canon) {
      std::string text = read_input(c.in);
      Misinfo mg, canonical;
      if (mi_status s = mi_misinfo_from_json(text.c_str(), &mg.p); s != MI_OK) return status_exit(s);
      if (mi_status s = mi_canonicalize(mg.p, &canonical.p); s != MI_OK) return status_exit(s);
      Text out;
      if (mi_status s = mi_misinfo_to_json(canonical.p, &out.p); s != MI_OK) return status_exit(s);
      write_output(c.out, out.p);
      return 0;
    }
    if (*nme) return run_misinfo_report(c, mi_nme);
    if (*adapt) {
      if (c.format == "dot")
        return run_misinfo_report(c, [](const mi_misinfo* m, const mi_options* o, char** out) {
          return mi_export_dot(m, o, 0, out);
        });
      return run_misinfo_report(c, mi_adapt);
    }
    if (*sme) return run_misinfo_report(c, mi_sme);
    if (*one) return run_misinfo_report(c, mi_one_sme);
    if (*dot) {
      Producer p = loopless ? Producer([](const mi_misinfo* m, const mi_options* o, char** out) {
        return mi_export_dot(m, o, 1, out);
      })
                            : Producer([](const mi_misinfo* m, const mi_options* o, char** out) {
                                return mi_export_dot(m, o, 0, out);
                              });
      return run_misinfo_report(c, p);
    }
    if (*exp) {
      Options o;
      if (mi_status s = configure(c, o); s != MI_OK) return status_exit(s);
      Text out;
      int format = c.format == "json" ? 1 : 0;
      if (mi_status s = mi_experiment(setting.c_str(), runs, lo, hi, o.p, format, &out.p); s != MI_OK)
        return status_exit(s);
      write_output(c.out, out.p);
      return 0;
    }
    if (*adv) {
      Misinfo mg;
      if (mi_status s = mi_adversarial(setting.c_str(), &mg.p); s != MI_OK) return status_exit(s);
      Text out;
      if (mi_status s = mi_misinfo_to_json(mg.p, &out.p); s != MI_OK) return status_exit(s);
      write_output(c.out, out.p);
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitInput;
  }
  return kExitInput;
}
