// cmw: computes graded-module invariants (depth, dim, grade, imperfection,
// Cohen-Macaulay defect, projective and Gorenstein dimension, Serre
// conditions) over quotients of polynomial rings, and runs the registered
// statement checks and randomized campaigns. Input is a small declarative
// script; see README.md for the grammar.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cmw/interp.hpp"
#include "cmw/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"commutative algebra module workbench"};
  app.set_version_flag("--version", std::string(cmw::kToolName) + " " + cmw::kToolVersion);

  std::string script_path;
  app.add_option("script", script_path, "script file (stdin when omitted)");

  cmw::ExecOptions opt;
  app.add_flag("--json", opt.json, "emit the report as JSON");
  app.add_option("--cache-dir", opt.cache_dir,
                 "resolution cache directory (default .cmw-cache, env CMW_CACHE_DIR)");
  app.add_flag("--no-cache", opt.no_cache, "disable the on-disk resolution cache");
  app.add_option("--bound", opt.bound, "truncation bound override for resolutions over R");
  app.add_flag("--fail-fast", opt.fail_fast, "stop at the first failing command");
  std::int64_t seed = -1;
  app.add_option("--seed", seed, "override campaign seeds");
  app.add_flag("--timings", opt.timings, "include wall-clock timings in reports");
  app.add_option("--threads", opt.threads, "OpenMP thread count (0 = runtime default)");
  app.add_flag("--serial", [&](std::int64_t) { opt.parallel = false; },
               "run campaigns on a single thread");

  CLI11_PARSE(app, argc, argv);
  if (seed >= 0) opt.seed = static_cast<uint64_t>(seed);

  std::string text;
  if (script_path.empty()) {
    std::ostringstream os;
    os << std::cin.rdbuf();
    text = os.str();
  } else {
    std::ifstream in(script_path);
    if (!in) {
      std::cerr << "cmw: cannot open " << script_path << "\n";
      return cmw::kExitParse;
    }
    std::ostringstream os;
    os << in.rdbuf();
    text = os.str();
  }

  cmw::Script script;
  try {
    script = cmw::parse_script(text);
  } catch (const cmw::Error& e) {
    std::cerr << "cmw: parse error: " << e.what() << "\n";
    return cmw::kExitParse;
  }

  cmw::Report rep = cmw::execute(script, opt);
  std::cout << (opt.json ? cmw::report_to_json(rep, opt) : cmw::report_to_text(rep, opt));
  return cmw::report_exit_code(rep);
}
