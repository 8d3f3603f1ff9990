// Command-line front end; talks to the library only through witt.h.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "witt/witt.h"

namespace {

struct Options {
  unsigned p = 3, m = 1, n = 1;
  std::vector<std::string> lambda;
  std::string chi, gradation = "both", format = "json", out;
  std::uint64_t seed = 1;
  unsigned max_ext = 6, threads = 0;
  std::size_t max_dim = 20000;
  double sample = 1.0;
  bool corrupt = false, timings = false;
};

int usage_error(const std::string& msg) {
  std::cerr << "wittctl: " << msg << "\n";
  return 2;
}

int run(const std::string& command, const Options& o) {
  witt_config* c = nullptr;
  if (witt_config_new(&c) != WITT_OK) return usage_error(witt_last_error());
  std::string chi_text;
  if (!o.chi.empty()) {
    std::ifstream in(o.chi);
    if (!in) {
      witt_config_free(c);
      return usage_error("cannot read character file '" + o.chi + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    chi_text = ss.str();
  }
  std::vector<std::pair<std::string, std::string>> kv{
      {"p", std::to_string(o.p)},         {"m", std::to_string(o.m)},
      {"n", std::to_string(o.n)},         {"gradation", o.gradation},
      {"seed", std::to_string(o.seed)},   {"max-ext", std::to_string(o.max_ext)},
      {"max-dim", std::to_string(o.max_dim)}, {"threads", std::to_string(o.threads)},
      {"sample", std::to_string(o.sample)}, {"corrupt", o.corrupt ? "true" : "false"},
      {"timings", o.timings ? "true" : "false"}};
  for (const auto& l : o.lambda) kv.emplace_back("lambda", l);
  if (!chi_text.empty()) kv.emplace_back("chi", chi_text);
  for (const auto& [k, v] : kv)
    if (witt_config_set(c, k.c_str(), v.c_str()) != WITT_OK) {
      const std::string msg = witt_last_error();
      witt_config_free(c);
      return usage_error(msg);
    }

  char* text = nullptr;
  int code = 0;
  const witt_status st = witt_run(c, command.c_str(), o.format.c_str(), &text, &code);
  witt_config_free(c);
  if (st != WITT_OK) return usage_error(std::string(witt_status_name(st)) + ": " + witt_last_error());
  if (o.out.empty()) {
    std::fwrite(text, 1, std::char_traits<char>::length(text), stdout);
  } else {
    std::ofstream f(o.out, std::ios::binary);
    f << text;
    if (!f) {
      witt_string_free(text);
      return usage_error("cannot write '" + o.out + "'");
    }
  }
  witt_string_free(text);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for restricted Witt superalgebras W(m,n,1) and their Kac modules"};
  app.set_version_flag("--version", std::string(witt_version()));
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* s) {
    s->add_option("--p", o.p, "odd prime")->capture_default_str();
    s->add_option("--m", o.m, "number of even variables")->capture_default_str();
    s->add_option("--n", o.n, "number of odd variables")->capture_default_str();
    s->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    s->add_option("--seed", o.seed, "random seed")->capture_default_str();
    s->add_option("--out", o.out, "write the report here instead of stdout");
    s->add_flag("--timings", o.timings, "include wall-clock timings (reports are no longer reproducible)");
  };

  auto* info = app.add_subcommand("info", "dimensions, gradings, roots and the Borel chain");
  common(info);

  auto* verify = app.add_subcommand("verify", "axiom suites for the structure constants");
  common(verify);
  verify->add_option("--sample", o.sample, "fraction of Jacobi triples to check")->check(CLI::Range(0.0, 1.0));
  verify->add_flag("--corrupt", o.corrupt, "test mode: perturb one structure constant first");

  auto* table = app.add_subcommand("kac-table", "restricted Kac modules K(lambda) over a weight sweep");
  common(table);
  table->add_option("--lambda", o.lambda, "weight as csv in toral order (repeatable), or all");
  table->add_option("--max-dim", o.max_dim, "largest carrier dimension")->capture_default_str();
  table->add_option("--threads", o.threads, "worker threads (0: all cores)");

  auto* nonres = app.add_subcommand("nonres", "nonrestricted Kac modules of types I and II");
  common(nonres);
  nonres->add_option("--chi", o.chi, "character file (JSON: label -> integer)")->required();
  nonres->add_option("--lambda", o.lambda, "integer offsets added to the toral weight");
  nonres->add_option("--gradation", o.gradation, "I, II or both")->check(CLI::IsMember({"I", "II", "both"}))->capture_default_str();
  nonres->add_option("--max-ext", o.max_ext, "largest field extension degree")->check(CLI::Range(1, 6))->capture_default_str();
  nonres->add_option("--max-dim", o.max_dim, "largest carrier dimension")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int r = app.exit(e);
    return r == 0 ? 0 : 2;
  }
  for (auto* s : app.get_subcommands()) return run(s->get_name(), o);
  return 2;
}
