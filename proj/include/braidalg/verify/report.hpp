#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "braidalg/exact/rational.hpp"
#include "json.hpp"

namespace braidalg::verify {

enum class Status { Pass, Fail, Error };
std::string to_string(Status s);

/// Outcome for one identity: zero residual iff nonzero_entries == 0.
struct Residual {
  std::string label;
  std::size_t nonzero_entries = 0;
  std::size_t max_terms = 0;  // largest numerator term count among entries
  bool vacuous = false;       // both sides are the zero matrix
  std::string detail;
};

struct Sample {
  int trial = 0;
  std::map<std::string, exact::Rational> point;
  int pole_resamples = 0;
  bool equal = true;
};

struct VerifyReport {
  std::string check;
  Status status = Status::Pass;
  std::vector<Residual> residuals;
  std::string mode = "symbolic";
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<Sample> samples;
  std::vector<std::string> notes;
  std::string error;
  double elapsed_ms = 0;

  bool passed() const { return status == Status::Pass; }
  /// Sets status from the residuals unless an error was recorded.
  void finalize();
  /// Elapsed time is left out unless asked for, so that reports of the
  /// same job compare byte-for-byte.
  nlohmann::ordered_json to_json(bool with_elapsed = false) const;
};

}  // namespace braidalg::verify
