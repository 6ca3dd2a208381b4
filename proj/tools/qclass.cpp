// qclass verify <suite> --config file.json [--mode generic|specialized]
//        [--out report.json] [--format json|text] [--jobs K] [--no-timing]

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qclass/suites.hpp"
#include "qclass/verma.hpp"

namespace {

enum Exit { kPass = 0, kFail = 1, kConfig = 2, kResource = 3 };

void apply_cap(const char* var, int value) {
  // The environment wins over the config file.
  if (value > 0 && std::getenv(var) == nullptr) setenv(var, std::to_string(value).c_str(), 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification engine for non-Levi conjugacy classes of SO_q(N)"};
  app.require_subcommand(1);
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite, config_path, mode, out_path, format = "json";
  int jobs = 0;
  bool no_timing = false;
  verify->add_option("suite", suite, "rmatrix | verma | singular | tensor | spectra | all")->required();
  verify->add_option("--config", config_path, "class configuration (JSON)")->required();
  verify->add_option("--mode", mode, "generic | specialized (overrides the config)");
  verify->add_option("--out", out_path, "write the report to this file instead of stdout");
  verify->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--no-timing", no_timing, "omit wall times, making reports byte-identical across runs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kConfig;
  }

  qclass::SuiteConfig cfg;
  try {
    if (!qclass::is_suite(suite)) throw qclass::ConfigError("unknown suite '" + suite + "'");
    std::ifstream in(config_path);
    if (!in) throw qclass::ConfigError("cannot read " + config_path);
    std::stringstream buf;
    buf << in.rdbuf();
    cfg = qclass::parse_config(buf.str());
    cfg.suite = suite;
    if (!mode.empty()) cfg.mode = qclass::parse_mode(mode);
    if (jobs > 0) cfg.jobs = jobs;
  } catch (const qclass::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfig;
  }
  apply_cap("QCLASS_CAP_WORDLEN", cfg.word_length_cap);
  apply_cap("QCLASS_CAP_WINDOW", cfg.window_cap);

  qclass::Report report;
  try {
    report = qclass::run_suite(cfg);
  } catch (const qclass::ResourceError& e) {
    std::cerr << "resource cap exceeded in " << e.what() << "\n";
    return kResource;
  } catch (const qclass::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfig;
  }

  const std::string body =
      format == "json" ? qclass::report_json(report, !no_timing) : qclass::report_text(report, !no_timing);
  if (out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return kConfig;
    }
    out << body;
  }
  return report.passed() ? kPass : kFail;
}
