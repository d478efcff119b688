#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "reflex/errors.hpp"
#include "reflex/verify/evaluator.hpp"
#include "reflex/verify/paper.hpp"
#include "reflex/verify/properties.hpp"

namespace {

using namespace reflex::verify;

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw reflex::InvalidArgument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  Config config;
  std::string report = "text";
  std::string out;
  bool timing = true;
};

void addCommon(CLI::App* cmd, Options& o) {
  cmd->add_option("--field", o.config.field, "Coefficient field")
      ->check(CLI::IsMember({"gf32003", "qq", "both"}));
  cmd->add_option("--max-degree", o.config.maxDegree, "Degree bound for Hilbert-function checks");
  cmd->add_option("--max-res", o.config.maxRes, "Resolution length bound")->check(CLI::PositiveNumber);
  cmd->add_option("--report", o.report, "Report format")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", o.out, "Write the report to this file");
  cmd->add_option("--jobs", o.config.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_flag("!--no-timing", o.timing, "Write 0 for every wall time");
}

int emit(const Report& r, const Options& o) {
  std::string text = o.report == "json" ? toJson(r, o.timing) + "\n" : toText(r, o.timing);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    if (!f) throw reflex::InvalidArgument("cannot write '" + o.out + "'");
    f << text;
  }
  return r.exitCode();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact commutative algebra scenario verifier"};
  app.require_subcommand(1);

  Options opts;
  std::string file;
  auto* run = app.add_subcommand("run", "Run a scenario file");
  run->add_option("file", file, "Scenario file")->required();
  addCommon(run, opts);

  std::string example;
  std::string dataFile;
  auto* paper = app.add_subcommand("paper", "Run a built-in example");
  paper->add_option("--example", example, "2.4, 2.5, vasconcelos, thm-2.3-generic or cor-2.8")->required();
  paper->add_option("--data", dataFile, "Data scenario for thm-2.3-generic");
  addCommon(paper, opts);

  std::string suite;
  int trials = 50;
  auto* property = app.add_subcommand("property", "Run a randomized property suite");
  property->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(propertySuiteNames()));
  property->add_option("--trials", trials, "Number of trials")->check(CLI::PositiveNumber);
  property->add_option("--seed", opts.config.seed, "Random seed");
  addCommon(property, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) return emit(runScenarioText(readFile(file), file, opts.config), opts);
    if (paper->parsed()) {
      std::optional<std::string> data;
      if (!dataFile.empty()) data = readFile(dataFile);
      return emit(runPaperExample(example, opts.config, data), opts);
    }
    return emit(runPropertySuite(suite, trials, opts.config), opts);
  } catch (const reflex::Error& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "verify: internal error: " << e.what() << "\n";
    return 2;
  }
}
