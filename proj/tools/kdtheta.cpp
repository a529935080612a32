#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "kdt/errors.hpp"
#include "kdt/suites.hpp"

// Exit status: 0 all checks pass, 1 some check failed, 2 bad configuration.
int main(int argc, char** argv) {
  kdt::RunConfig config;
  std::string out_path, format = "table";

  CLI::App app{"Exact verification suites for contact Lie pseudoalgebras", "kdtheta"};
  app.set_version_flag("--version", kdt::kToolVersion);
  app.add_option("--algebra", config.algebra, "sl2, heisenberg:N or a path to a data file")->capture_default_str();
  app.add_option("--suite", config.suites,
                 "verify-core, rumin, singular, classify or annihilation (repeatable)");
  app.add_option("--degree-bound", config.degree_bound, "PBW degree bound")->capture_default_str();
  app.add_option("--truncation", config.truncation, "contact truncation for annihilation")->capture_default_str();
  app.add_option("--seed", config.seed, "random seed")->capture_default_str();
  app.add_option("--c-min", config.c_min, "lowest c in the classification scan")->capture_default_str();
  app.add_option("--c-max", config.c_max, "highest c in the classification scan")->capture_default_str();
  app.add_option("--samples", config.samples, "exactness samples per interior term")->capture_default_str();
  app.add_option("--exactness-degree", config.exactness_degree, "degree bound for exactness preimages")
      ->capture_default_str();
  app.add_option("--module", config.module, "singular suite: trivial, pi<p> or sym2")->capture_default_str();
  app.add_option("--c", config.c, "singular suite: the value of c (rational)")->capture_default_str();
  app.add_option("--threads", config.threads, "worker threads for the scan, 0 = hardware")->capture_default_str();
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"table", "json"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  kdt::Report report;
  try {
    report = kdt::run_suites(config);
  } catch (const kdt::Error& e) {
    // bad flags, unreadable or non-contact algebra data
    std::cerr << "kdtheta: " << e.what() << "\n";
    return 2;
  }

  const std::string text = format == "json" ? report.to_json().dump(2) + "\n" : report.to_table();
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "kdtheta: cannot write " << out_path << "\n";
      return 2;
    }
    f << text;
    std::cerr << report.passed() << "/" << report.checks.size() << " checks passed\n";
  }
  return report.ok() ? 0 : 1;
}
