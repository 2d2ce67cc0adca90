#include "braidalg/cli/job.hpp"

#include <algorithm>
#include <set>

#include "braidalg/baxter/baxter.hpp"
#include "braidalg/errors.hpp"
#include "braidalg/exact/parse.hpp"
#include "braidalg/ncalg/relations.hpp"
#include "braidalg/reps/rep.hpp"
#include "braidalg/verify/verify.hpp"

namespace braidalg::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;
using baxter::SpectralFn;
using exact::Rational;
using reps::Rep;
using verify::Residual;
using verify::VerifyReport;

const std::set<std::string> kCommon{"command", "mode", "seed", "trials", "out"};

void only_fields(const json& job, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : job.items()) {
    if (kCommon.count(key)) continue;
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      throw UsageError("unknown field in job: " + key);
    }
  }
}

const json& field(const json& j, const char* key) {
  if (!j.contains(key)) throw UsageError(std::string("missing field: ") + key);
  return j.at(key);
}

std::string text(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) throw UsageError(std::string("field ") + key + " must be a string");
  return v.get<std::string>();
}

Rational scalar(const json& j, const char* key) { return Rational::parse(text(j, key)); }

Rational scalar_or(const json& j, const char* key, const Rational& fallback) {
  return j.contains(key) ? scalar(j, key) : fallback;
}

int integer(const json& j, const char* key, int fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw UsageError(std::string("field ") + key + " must be an integer");
  return v.get<int>();
}

bool flag(const json& j, const char* key) {
  if (!j.contains(key)) return false;
  if (!j.at(key).is_boolean()) throw UsageError(std::string("field ") + key + " must be true or false");
  return j.at(key).get<bool>();
}

std::map<std::string, std::string> string_map(const json& j, const char* what) {
  if (!j.is_object()) throw UsageError(std::string(what) + " must be an object of strings");
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_string()) throw UsageError(std::string(what) + "." + k + " must be a string");
    out.emplace(k, v.get<std::string>());
  }
  return out;
}

// "B3_2dim", {"builtin": "B3_2dim", "params": {...}, "flip": true} or an
// inline {"name", "symbols", "matrices"} record.
Rep parse_rep(const json& j) {
  if (j.is_string()) return reps::builtin_rep(j.get<std::string>());
  if (!j.is_object()) throw UsageError("rep must be a name or an object");
  if (j.contains("matrices")) return reps::rep_from_json(j);
  for (const auto& [k, v] : j.items()) {
    if (k != "builtin" && k != "params" && k != "flip") throw UsageError("unknown field in rep: " + k);
  }
  const reps::RepParams params = j.contains("params") ? string_map(j.at("params"), "rep.params") : reps::RepParams{};
  Rep rep = reps::builtin_rep(text(j, "builtin"), params);
  return flag(j, "flip") ? reps::flip_rep(rep) : rep;
}

// The algebra parameter c of A(a,b,c) occurs in a rep as well as in f of
// case (i) and in the Lemma; a rep that leaves it unset takes that value.
Rep bind_c(const Rep& rep, const Rational& c, std::vector<std::string>& notes) {
  if (!rep.ring.contains("c")) return rep;
  notes.push_back("rep parameter c bound to c=" + c.to_string());
  std::vector<std::string> rest;
  for (const auto& n : rep.ring.names()) {
    if (n != "c") rest.push_back(n);
  }
  return rep.specialize({{"c", c}}).embed(exact::Ring::of(rest));
}

std::map<std::string, Rational> numeric_params(const json& job) {
  std::map<std::string, Rational> out;
  if (!job.contains("params")) return out;
  for (const auto& [k, v] : string_map(job.at("params"), "params")) out.emplace(k, Rational::parse(v));
  return out;
}

Residual flag_residual(const std::string& label, bool ok, const std::string& detail = {}) {
  Residual r;
  r.label = label;
  r.nonzero_entries = ok ? 0 : 1;
  if (!ok) r.detail = detail;
  return r;
}

struct Mode {
  bool random = false;
  std::uint64_t seed = 1;
  int trials = 20;
};

Mode parse_mode(const json& job, const Overrides& ov) {
  Mode m;
  std::string mode = job.contains("mode") ? text(job, "mode") : "symbolic";
  if (ov.mode) mode = *ov.mode;
  if (mode == "random" || mode == "randomized") {
    m.random = true;
  } else if (mode != "symbolic") {
    throw UsageError("mode must be symbolic or random, got " + mode);
  }
  if (job.contains("seed")) {
    if (!job.at("seed").is_number_unsigned()) throw UsageError("seed must be a non-negative integer");
    m.seed = job.at("seed").get<std::uint64_t>();
  }
  m.trials = integer(job, "trials", m.trials);
  if (ov.seed) m.seed = *ov.seed;
  if (ov.trials) m.trials = *ov.trials;
  if (m.trials < 1) throw UsageError("trials must be positive");
  return m;
}

void require_symbolic(const Mode& m, const std::string& command) {
  if (m.random) throw UsageError(command + " has no random mode");
}

Outcome check_algebra(const json& job) {
  only_fields(job, {"rep", "algebra", "params"});
  const Rep rep = parse_rep(field(job, "rep"));
  const auto alg = ncalg::algebra_from_string(text(job, "algebra"));
  const auto params = job.contains("params") ? ncalg::parse_params(string_map(job.at("params"), "params"))
                                             : ncalg::AlgebraParams{};
  return {reps::check_relations(rep, ncalg::relations_for(alg, rep.n, params))};
}

// Brute force over {p/q : |p| <= grid_max, q <= grid_den} per generator
// against the classification, plus uniform values from the seed.
Outcome scalar_reps(const json& job, const Mode& mode) {
  only_fields(job, {"algebra", "params", "n", "grid_max", "grid_den", "uniform_samples", "assignment"});
  const auto alg = ncalg::algebra_from_string(text(job, "algebra"));
  const auto params = numeric_params(job);
  const int n = integer(job, "n", 3);
  if (n < 2) throw UsageError("n must be at least 2");
  const auto classes = reps::classify_scalar(alg, params);
  const auto predicted = [&](const std::vector<Rational>& v) {
    return std::any_of(classes.begin(), classes.end(), [&](const auto& c) { return c.matches(v); });
  };

  Outcome out;
  VerifyReport& report = out.report;
  report.check = "scalar reps " + ncalg::to_string(alg);
  auto& cls = out.extra["classes"] = ordered_json::array();
  for (const auto& c : classes) cls.push_back(c.describe());

  if (job.contains("assignment")) {
    const json& a = job.at("assignment");
    if (!a.is_array()) throw UsageError("assignment must be an array of strings");
    std::vector<Rational> values;
    for (const auto& v : a) {
      if (!v.is_string()) throw UsageError("assignment entries must be strings");
      values.push_back(Rational::parse(v.get<std::string>()));
    }
    if (static_cast<int>(values.size()) != n - 1) throw UsageError("assignment needs n-1 values");
    const bool ok = reps::verify_scalar(values, alg, params);
    out.extra["assignment_passes"] = ok;
    report.residuals.push_back(flag_residual("assignment", ok, "assignment fails the relations"));
    report.finalize();
    return out;
  }

  const int pmax = integer(job, "grid_max", 4), qmax = integer(job, "grid_den", 2);
  if (pmax < 0 || qmax < 1) throw UsageError("grid_max >= 0 and grid_den >= 1 required");
  std::vector<Rational> grid;
  for (int q = 1; q <= qmax; ++q)
    for (int p = -pmax; p <= pmax; ++p) grid.emplace_back(p, q);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::size_t mismatches = 0, passing = 0, total = 0;
  std::vector<std::size_t> idx(static_cast<std::size_t>(n - 1), 0);
  for (;;) {
    std::vector<Rational> v;
    for (auto i : idx) v.push_back(grid[i]);
    const bool ok = reps::verify_scalar(v, alg, params);
    passing += ok ? 1 : 0;
    mismatches += ok != predicted(v) ? 1 : 0;
    ++total;
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == grid.size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  Residual grid_res;
  grid_res.label = "grid brute force";
  grid_res.nonzero_entries = mismatches;
  grid_res.detail = std::to_string(passing) + " of " + std::to_string(total) + " assignments pass";
  report.residuals.push_back(grid_res);

  const int samples = integer(job, "uniform_samples", 10);
  std::size_t uniform_bad = 0;
  for (int t = 0; t < samples; ++t) {
    auto rng = verify::trial_rng(mode.seed, t);
    const Rational lambda = verify::sample_rational(rng);
    const std::vector<Rational> v(static_cast<std::size_t>(n - 1), lambda);
    uniform_bad += reps::verify_scalar(v, alg, params) != predicted(v) ? 1 : 0;
  }
  Residual uni;
  uni.label = "uniform lambda sample";
  uni.nonzero_entries = uniform_bad;
  uni.detail = std::to_string(samples) + " values";
  report.residuals.push_back(uni);
  report.seed = mode.seed;
  report.finalize();
  return out;
}

std::vector<Rep> rep_list(const json& job) {
  if (job.contains("rep")) return {parse_rep(job.at("rep"))};
  const json& list = field(job, "reps");
  if (!list.is_array() || list.empty()) throw UsageError("reps must be a non-empty array");
  std::vector<Rep> out;
  for (const auto& r : list) out.push_back(parse_rep(r));
  return out;
}

std::vector<SpectralFn> fn_list(const json& job) {
  if (job.contains("fn")) return {SpectralFn::from_json(job.at("fn"))};
  const json& list = field(job, "fns");
  if (!list.is_array() || list.empty()) throw UsageError("fns must be a non-empty array");
  std::vector<SpectralFn> out;
  for (const auto& f : list) out.push_back(SpectralFn::from_json(f));
  return out;
}

// H_closed - H_series(N) has numerator z-valuation > N in every entry.
Outcome series(const json& job, const std::vector<Rep>& reps_) {
  const int order = integer(job, "series_order", 8);
  if (order < 0) throw UsageError("series_order must be non-negative");
  Outcome out;
  out.report.check = "series order " + std::to_string(order);
  for (const auto& rep : reps_) {
    for (int site = 1; site < rep.n; ++site) {
      const auto diff = baxter::H_closed(rep, site) - baxter::H_series(rep, site, "z", static_cast<unsigned>(order));
      const long val = baxter::min_valuation(diff, "z");
      const bool ok = val < 0 || val > order;
      out.report.residuals.push_back(flag_residual("series " + rep.name + " s" + std::to_string(site), ok,
                                                   "z-valuation " + std::to_string(val)));
    }
  }
  out.report.finalize();
  return out;
}

// Regularity and unitarity of R for every (rep, fn, site); the matrix is
// included when a single pair is asked for.
Outcome baxterise(const json& job) {
  only_fields(job, {"rep", "reps", "fn", "fns", "site", "series_order"});
  if (job.contains("rep") == job.contains("reps")) throw UsageError("give exactly one of rep, reps");
  const auto reps_ = rep_list(job);
  Outcome out;
  if (job.contains("series_order")) {
    if (job.contains("fn") || job.contains("fns")) throw UsageError("series_order takes no spectral function");
    return series(job, reps_);
  }
  if (job.contains("fn") == job.contains("fns")) throw UsageError("give exactly one of fn, fns");
  const auto fns = fn_list(job);
  out.report.check = "baxterise";
  for (const auto& rep : reps_) {
    std::vector<int> sites;
    if (job.contains("site")) {
      sites.push_back(integer(job, "site", 1));
    } else {
      for (int s = 1; s < rep.n; ++s) sites.push_back(s);
    }
    for (const auto& fn : fns) {
      for (int site : sites) {
        const auto R = baxter::build_R(rep, site, fn);
        const std::string tag = rep.name + " f=" + fn.label() + " s" + std::to_string(site);
        out.report.residuals.push_back(flag_residual("construction " + tag, R.invariant_holds()));
        out.report.residuals.push_back(flag_residual("regularity " + tag, baxter::check_regularity(R), "R(x,x) != I"));
        out.report.residuals.push_back(
            flag_residual("unitarity " + tag, baxter::check_unitarity(rep, site, fn), "R(x,y) R(y,x) != I"));
        if (reps_.size() == 1 && fns.size() == 1 && sites.size() == 1) {
          auto& m = out.extra["R"] = ordered_json::array();
          for (std::size_t i = 0; i < R.value.rows(); ++i) {
            ordered_json row = ordered_json::array();
            for (std::size_t k = 0; k < R.value.cols(); ++k) row.push_back(R.value(i, k).to_string());
            m.push_back(std::move(row));
          }
        }
      }
    }
  }
  out.report.finalize();
  return out;
}

Outcome verify_ybe(const json& job, const Mode& mode) {
  only_fields(job, {"rep", "fn"});
  const SpectralFn fn = SpectralFn::from_json(field(job, "fn"));
  std::vector<std::string> notes;
  Rep rep = parse_rep(field(job, "rep"));
  if (fn.kind() == SpectralFn::Case::I) rep = bind_c(rep, fn.c(), notes);
  Outcome out{mode.random ? verify::ybe_random(rep, fn, mode.trials, mode.seed) : verify::ybe_symbolic(rep, fn)};
  out.report.notes.insert(out.report.notes.begin(), notes.begin(), notes.end());
  return out;
}

Outcome verify_lemmas(const json& job) {
  const std::string suite = text(job, "suite");
  if (suite == "A") {
    only_fields(job, {"suite", "rep", "alpha1", "alpha2", "b", "c"});
    const Rational c = scalar_or(job, "c", Rational());
    std::vector<std::string> notes;
    const Rep rep = bind_c(parse_rep(field(job, "rep")), c, notes);
    Outcome out{verify::lemma_suite_A(rep, scalar(job, "alpha1"), scalar(job, "alpha2"), scalar_or(job, "b", Rational()), c)};
    out.report.notes.insert(out.report.notes.begin(), notes.begin(), notes.end());
    return out;
  }
  if (suite == "B") {
    only_fields(job, {"suite", "rep"});
    return {verify::lemma_suite_B(parse_rep(field(job, "rep")))};
  }
  throw UsageError("suite must be A or B, got " + suite);
}

Outcome transfer(const json& job, const Mode& mode) {
  only_fields(job, {"rep", "fn", "lengths", "points", "count", "corrupt"});
  verify::TransferOptions opt;
  opt.seed = mode.seed;
  opt.trials = mode.trials;
  opt.corrupt = flag(job, "corrupt");
  if (job.contains("lengths")) {
    const json& l = job.at("lengths");
    if (!l.is_array() || l.empty()) throw UsageError("lengths must be a non-empty array");
    opt.lengths.clear();
    for (const auto& v : l) {
      if (!v.is_number_integer()) throw UsageError("lengths must be integers");
      opt.lengths.push_back(v.get<int>());
    }
  }
  if (job.contains("points")) {
    if (job.contains("count")) throw UsageError("give points or count, not both");
    for (const auto& p : job.at("points")) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
        throw UsageError("points must be pairs of strings");
      }
      opt.points.emplace_back(Rational::parse(p[0].get<std::string>()), Rational::parse(p[1].get<std::string>()));
    }
  } else {
    const int count = integer(job, "count", 5);
    if (count < 1) throw UsageError("count must be positive");
    opt.points = verify::random_point_pairs(mode.seed, count);
  }
  return {verify::transfer_commute(parse_rep(field(job, "rep")), SpectralFn::from_json(field(job, "fn")), opt)};
}

Outcome prop1(const json& job) {
  only_fields(job, {"drop", "mutations"});
  Outcome out;
  out.report.check = "prop1";
  std::optional<ncalg::Prop1Term> drop;
  if (job.contains("drop")) {
    const std::string name = text(job, "drop");
    for (auto t : ncalg::kProp1Terms) {
      if (ncalg::to_string(t) == name) drop = t;
    }
    if (!drop) throw UsageError("unknown term to drop: " + name);
  }
  const auto res = ncalg::prop1_certificate(drop);
  Residual r;
  r.label = drop ? "certificate without " + ncalg::to_string(*drop) : "certificate";
  r.nonzero_entries = res.residual.size();
  r.max_terms = res.residual.size();
  out.report.residuals.push_back(r);
  out.extra["target"] = res.target.to_string();
  if (!res.pass) out.extra["residual"] = res.residual.to_string();
  if (flag(job, "mutations")) {
    if (drop) throw UsageError("mutations and drop are exclusive");
    for (auto t : ncalg::kProp1Terms) {
      const auto m = ncalg::prop1_certificate(t);
      out.report.residuals.push_back(flag_residual("mutation control: drop " + ncalg::to_string(t), !m.pass,
                                                   "dropping the term still gives zero"));
    }
  }
  out.report.finalize();
  return out;
}

Outcome correspondences(const json& job) {
  only_fields(job, {"kind", "rep", "scalar"});
  const auto kind = reps::correspondence_from_string(text(job, "kind"));
  const Rep rep = parse_rep(field(job, "rep"));
  const std::string s = text(job, "scalar");
  exact::Ring ring = rep.ring;
  for (const auto& sym : exact::symbols_in(s)) ring = ring.with({sym});
  return {reps::correspondence_check(kind, rep, exact::parse_ratfunc(s, ring))};
}

}  // namespace

Outcome run_job(const json& job, const Overrides& overrides) {
  if (!job.is_object()) throw UsageError("job must be a JSON object");
  const std::string command = text(job, "command");
  const Mode mode = parse_mode(job, overrides);
  if (command == "verify-ybe") return verify_ybe(job, mode);
  if (command == "transfer-commute") return transfer(job, mode);
  require_symbolic(mode, command);
  if (command == "scalar-reps") return scalar_reps(job, mode);
  if (command == "check-algebra") return check_algebra(job);
  if (command == "baxterise") return baxterise(job);
  if (command == "verify-lemmas") return verify_lemmas(job);
  if (command == "prop1") return prop1(job);
  if (command == "correspondences") return correspondences(job);
  throw UsageError("unknown command: " + command);
}

ordered_json render(const std::string& command, const Outcome& outcome) {
  ordered_json j;
  j["command"] = command;
  const ordered_json report = outcome.report.to_json();
  for (const auto& [k, v] : report.items()) j[k] = v;
  for (auto& [k, v] : outcome.extra.items()) j[k] = v;
  return j;
}

int exit_code(const verify::VerifyReport& report) { return report.passed() ? 0 : 1; }

}  // namespace braidalg::cli
