#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "linkage/cache.hpp"
#include "linkage/dsl.hpp"

using namespace linkage;
using namespace linkage::dsl;

namespace {

constexpr int kParseError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void add_run_options(CLI::App* app, RunConfig& cfg, bool& json, std::string& cache_dir) {
  app->add_flag("--json", json, "Write the JSON report to stdout");
  app->add_option("--bound", cfg.bound, "Ext-vanishing bound B (-1: 2(n+1))");
  app->add_option("--probe-primes", cfg.probe_primes, "Extra probe primes, e.g. \"x,y;y,z\"");
  app->add_option("--cache-dir", cache_dir, "Resolution cache directory (overrides LINKAGE_LAB_CACHE)");
  app->add_flag("--fail-fast", cfg.fail_fast, "Stop at the first failure");
  app->add_flag("--strict", cfg.strict, "Exit 4 when a check is inapplicable");
  app->add_option("--seed", cfg.seed, "Seed for randomized isomorphism trials");
  app->add_option("--field", cfg.field, "Replace the field of every poly() ring (QQ, ZZ/p)");
  app->add_option("--n-max", cfg.n_max, "Largest n for theorem checks");
  app->add_option("--max-degree", cfg.max_degree, "Degree budget");
  app->add_option("--max-rank", cfg.max_rank, "Rank budget");
  app->add_option("--time-limit", cfg.time_limit, "Wall-clock limit for the run in seconds");
}

void configure_cache(const std::string& flag) {
  std::string dir = flag;
  if (dir.empty())
    if (const char* env = std::getenv("LINKAGE_LAB_CACHE")) dir = env;
  if (!dir.empty()) resolution_cache().set_directory(dir);
}

int report_parse_error(const std::string& file, const DslError& e) {
  std::cerr << file << ":" << e.pos().line << ":" << e.pos().col << ": error: " << e.message();
  if (!e.expected().empty()) {
    std::cerr << " (expected ";
    for (std::size_t i = 0; i < e.expected().size(); ++i) std::cerr << (i ? ", " : "") << e.expected()[i];
    std::cerr << ")";
  }
  std::cerr << "\n";
  return kParseError;
}

int finish(const RunResult& r, const RunConfig& cfg, bool json) {
  if (json) {
    std::cout << report_json(r);
  } else {
    for (const auto& line : r.text) std::cout << line << "\n";
    std::cout << "-- " << r.failures << " failures, " << r.budget_hits << " budget exceeded, " << r.inapplicable
              << " inapplicable\n";
  }
  return exit_code(r, cfg.strict);
}

/// Declarations of the file followed by a single check statement.
std::string check_source(const std::string& file_text, const std::string& theorem,
                         const std::vector<std::string>& binds) {
  Script decls;
  for (auto& st : parse(file_text).statements)
    if (is_declaration(st)) decls.statements.push_back(std::move(st));
  std::string src = pretty_print(decls) + "check " + theorem + "(";
  for (std::size_t i = 0; i < binds.size(); ++i) src += (i ? ", " : "") + binds[i];
  return src + ");\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linkage-lab: module linkage workbench"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  RunConfig cfg;
  bool json = false;
  std::string cache_dir;
  std::string file;

  CLI::App* run = app.add_subcommand("run", "Evaluate a script");
  run->add_option("file", file, "Script file")->required();
  add_run_options(run, cfg, json, cache_dir);

  std::string theorem;
  std::vector<std::string> binds;
  CLI::App* chk = app.add_subcommand("check", "Check one theorem against declarations in a script");
  chk->add_option("theorem", theorem, "Theorem id, e.g. THM_MS")->required();
  chk->add_option("file", file, "Script file with ring and module declarations")->required();
  chk->add_option("--bind", binds, "Binding name=value, e.g. M=M or I=[x*y]")->take_all();
  add_run_options(chk, cfg, json, cache_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kParseError;
  }

  std::string text;
  try {
    text = read_file(file);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  }

  Script script;
  try {
    if (chk->parsed()) {
      const std::string src = check_source(text, theorem, binds);
      try {
        script = parse(src);
      } catch (const DslError& e) {
        return report_parse_error("<check>", e);
      }
    } else {
      script = parse(text);
    }
  } catch (const DslError& e) {
    return report_parse_error(file, e);
  }

  configure_cache(cache_dir);
  try {
    return finish(execute(script, cfg), cfg, json);
  } catch (const std::exception& e) {
    // configuration errors such as an unknown --field
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  }
}
