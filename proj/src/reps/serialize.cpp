#include "braidalg/errors.hpp"
#include "braidalg/exact/parse.hpp"
#include "braidalg/reps/rep.hpp"

namespace braidalg::reps {

nlohmann::ordered_json rep_to_json(const Rep& rep) {
  nlohmann::ordered_json j;
  j["name"] = rep.name;
  j["n"] = rep.n;
  j["dim"] = rep.dim;
  j["field"] = rep.field();
  auto& mats = j["matrices"] = nlohmann::ordered_json::array();
  for (const auto& g : rep.gens) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < g.rows(); ++i) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (std::size_t k = 0; k < g.cols(); ++k) row.push_back(g(i, k).to_string());
      rows.push_back(std::move(row));
    }
    mats.push_back(std::move(rows));
  }
  return j;
}

Rep rep_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw UsageError("rep must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key != "name" && key != "symbols" && key != "matrices") throw UsageError("unknown rep field: " + key);
  }
  if (!j.contains("matrices") || !j["matrices"].is_array()) throw UsageError("rep needs a matrices array");
  std::vector<std::string> symbols;
  if (j.contains("symbols")) {
    if (!j["symbols"].is_array()) throw UsageError("rep symbols must be an array of names");
    for (const auto& s : j["symbols"]) {
      if (!s.is_string()) throw UsageError("rep symbols must be strings");
      symbols.push_back(s.get<std::string>());
    }
  }
  const Ring ring = Ring::of(symbols);
  std::vector<RMatrix> gens;
  for (const auto& m : j["matrices"]) {
    if (!m.is_array() || m.empty()) throw UsageError("each matrix must be a nonempty array of rows");
    const std::size_t d = m.size();
    std::vector<RatFunc> entries;
    for (const auto& row : m) {
      if (!row.is_array() || row.size() != d) throw UsageError("matrices must be square");
      for (const auto& e : row) {
        if (!e.is_string()) throw UsageError("matrix entries must be strings");
        entries.push_back(exact::parse_ratfunc(e.get<std::string>(), ring));
      }
    }
    gens.emplace_back(d, d, std::move(entries));
  }
  return make_rep(j.value("name", std::string("custom")), std::move(gens));
}

}  // namespace braidalg::reps
