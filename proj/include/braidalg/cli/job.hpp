#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "braidalg/verify/report.hpp"
#include "json.hpp"

namespace braidalg::cli {

/// Command-line values that take precedence over the job file.
struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<std::string> mode;
};

struct Outcome {
  verify::VerifyReport report;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
};

/// Validates and runs one job. UsageError on schema violations;
/// PreconditionError and MathError propagate.
Outcome run_job(const nlohmann::json& job, const Overrides& overrides = {});

/// Deterministic report record: command, report fields, extra results.
nlohmann::ordered_json render(const std::string& command, const Outcome& outcome);

/// 0 pass, 1 fail or error.
int exit_code(const verify::VerifyReport& report);

/// Full command-line entry point. Returns the process exit code:
/// 0 pass, 1 mathematical fail, 2 usage or schema error, 3 internal error.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace braidalg::cli
