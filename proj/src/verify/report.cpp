#include "braidalg/verify/report.hpp"

namespace braidalg::verify {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "?";
}

void VerifyReport::finalize() {
  if (!error.empty()) {
    status = Status::Error;
    return;
  }
  status = Status::Pass;
  for (const auto& r : residuals) {
    if (r.nonzero_entries) status = Status::Fail;
  }
  for (const auto& s : samples) {
    if (!s.equal) status = Status::Fail;
  }
}

nlohmann::ordered_json VerifyReport::to_json(bool with_elapsed) const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["status"] = to_string(status);
  j["mode"] = mode;
  if (mode == "random") {
    j["seed"] = seed;
    j["trials"] = trials;
  }
  auto& res = j["residuals"] = nlohmann::ordered_json::array();
  for (const auto& r : residuals) {
    nlohmann::ordered_json e;
    e["label"] = r.label;
    e["nonzero_entries"] = r.nonzero_entries;
    e["max_terms"] = r.max_terms;
    if (r.vacuous) e["vacuous"] = true;
    if (!r.detail.empty()) e["detail"] = r.detail;
    res.push_back(std::move(e));
  }
  if (!samples.empty()) {
    auto& ss = j["samples"] = nlohmann::ordered_json::array();
    for (const auto& s : samples) {
      nlohmann::ordered_json e;
      e["trial"] = s.trial;
      nlohmann::ordered_json pt = nlohmann::ordered_json::object();
      for (const auto& [k, v] : s.point) pt[k] = v.to_string();
      e["point"] = std::move(pt);
      e["pole_resamples"] = s.pole_resamples;
      e["equal"] = s.equal;
      ss.push_back(std::move(e));
    }
  }
  if (!notes.empty()) j["notes"] = notes;
  if (!error.empty()) j["error"] = error;
  if (with_elapsed) j["elapsed_ms"] = elapsed_ms;
  return j;
}

}  // namespace braidalg::verify
