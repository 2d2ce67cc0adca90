#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "braidalg/cli/job.hpp"
#include "braidalg/errors.hpp"

namespace braidalg::cli {

namespace {

nlohmann::json read_job(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read job file " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("job file " + path + " is not valid JSON: " + e.what());
  }
}

void write_report(const nlohmann::ordered_json& report, const std::string& path, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write report to " + path);
  file << text;
}

}  // namespace

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of baxterised braid-type algebras"};
  std::string job_path, out_path, mode;
  std::uint64_t seed = 0;
  int trials = 0;
  app.add_option("--job", job_path, "Job file (JSON)")->required();
  auto* out_opt = app.add_option("--out", out_path, "Report file; stdout when absent");
  auto* seed_opt = app.add_option("--seed", seed, "Seed for random mode and sample points");
  auto* trials_opt = app.add_option("--trials", trials, "Trials for random mode")->check(CLI::PositiveNumber);
  auto* mode_opt = app.add_option("--mode", mode, "symbolic or random")->check(CLI::IsMember({"symbolic", "random"}));
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  std::string command = "?";
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const nlohmann::json job = read_job(job_path);
    if (job.is_object() && job.contains("command") && job["command"].is_string()) command = job["command"];
    if (!*out_opt && job.is_object() && job.contains("out")) {
      if (!job["out"].is_string()) throw UsageError("field out must be a string");
      out_path = job["out"].get<std::string>();
    }
    Overrides ov;
    if (*seed_opt) ov.seed = seed;
    if (*trials_opt) ov.trials = trials;
    if (*mode_opt) ov.mode = mode;

    Outcome outcome;
    try {
      outcome = run_job(job, ov);
    } catch (const PreconditionError& e) {
      outcome.report.check = command;
      outcome.report.error = std::string("precondition: ") + e.what();
      outcome.report.finalize();
    } catch (const MathError& e) {
      outcome.report.check = command;
      outcome.report.error = e.what();
      outcome.report.finalize();
    }
    write_report(render(command, outcome), out_path, out);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    err << command << ": " << verify::to_string(outcome.report.status) << " (" << ms << " ms)";
    if (!outcome.report.error.empty()) err << ": " << outcome.report.error;
    err << "\n";
    return exit_code(outcome.report);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace braidalg::cli
