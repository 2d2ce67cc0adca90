#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "braidalg/cli/job.hpp"
#include "braidalg/errors.hpp"

using namespace braidalg;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = BRAIDALG_FIXTURES;

struct Result {
  int code;
  std::string out, err;
};

Result cli_run(std::vector<std::string> args) {
  args.insert(args.begin(), "braidalg");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path write_job(const std::string& name, const std::string& body) {
  const fs::path p = fs::temp_directory_path() / ("braidalg_test_" + name + ".json");
  std::ofstream(p) << body;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

nlohmann::json report_of(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("documented examples") {
  const auto prop1 = cli_run({"--job", write_job("prop1", R"({"command":"prop1"})").string()});
  CHECK(prop1.code == 0);
  CHECK(report_of(prop1)["residuals"][0]["nonzero_entries"] == 0);

  const auto ybe = cli_run({"--job", write_job("ybe", R"({"command":"verify-ybe","rep":"A3_2dim","fn":{"case":"i","alpha1":"2","alpha2":"1","b":"0","c":"1"},"mode":"symbolic"})").string()});
  CHECK(ybe.code == 0);
  CHECK(report_of(ybe)["status"] == "pass");

  const auto bad = cli_run({"--job", (kFixtures / "cli/malformed_scalar.json").string()});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("usage error") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(cli_run({"--job", (kFixtures / "cli/unknown_field.json").string()}).code == 2);
  CHECK(cli_run({}).code == 2);
  CHECK(cli_run({"--job", "/nonexistent/job.json"}).code == 2);
  CHECK(cli_run({"--job", write_job("notjson", "{").string()}).code == 2);
  CHECK(cli_run({"--job", write_job("nocmd", R"({"rep":"A3_2dim"})").string()}).code == 2);
  CHECK(cli_run({"--job", write_job("badcmd", R"({"command":"solve"})").string()}).code == 2);
  CHECK(cli_run({"--job", (kFixtures / "ac1/prop1.json").string(), "--mode", "fast"}).code == 2);
  CHECK(cli_run({"--job", write_job("lemmarandom", R"({"command":"verify-lemmas","suite":"B","rep":"B3_2dim","mode":"random"})").string()}).code == 2);
  CHECK(cli_run({"--job", write_job("numscalar", R"({"command":"verify-ybe","rep":"A3_2dim","fn":{"case":"i","alpha1":2,"alpha2":"1","b":"0","c":"1"}})").string()}).code == 2);
  CHECK(cli_run({"--job", write_job("alpha", R"({"command":"verify-ybe","rep":"A3_2dim","fn":{"case":"i","alpha1":"3","alpha2":"1","b":"0","c":"1"}})").string()}).code == 2);

  // Mathematical failure.
  const auto fail = cli_run({"--job", (kFixtures / "ac2/negative_b_only_case_iii.json").string()});
  CHECK(fail.code == 1);
  CHECK(report_of(fail)["status"] == "fail");

  // Precondition failures are mathematical: exit 1, status error.
  const auto pre = cli_run({"--job", write_job("pre", R"({"command":"verify-lemmas","suite":"A","rep":"A3_2dim","alpha1":"1","alpha2":"0","b":"0","c":"1"})").string()});
  CHECK(pre.code == 1);
  CHECK(report_of(pre)["status"] == "error");
  CHECK(report_of(pre)["error"].get<std::string>().find("Lemma requires a") != std::string::npos);
}

TEST_CASE("every command runs from a job file") {
  for (const auto& dir : fs::directory_iterator(kFixtures)) {
    for (const auto& f : fs::directory_iterator(dir.path())) {
      const auto r = cli_run({"--job", f.path().string()});
      CHECK_MESSAGE((r.code == 0 || r.code == 1 || r.code == 2), f.path().string());
      if (r.code != 2) CHECK_NOTHROW(report_of(r));
    }
  }
  const auto corr = cli_run({"--job", write_job("shift", R"({"command":"correspondences","kind":"B_to_A_shift","rep":"B3_2dim","scalar":"1"})").string()});
  CHECK(corr.code == 0);
  const auto single = cli_run({"--job", write_job("bax", R"({"command":"baxterise","rep":"B3_2dim","fn":{"case":"ii"},"site":1})").string()});
  CHECK(single.code == 0);
  CHECK(report_of(single)["R"].size() == 2);
  const auto assign = cli_run({"--job", (kFixtures / "cli/scalar_assignment.json").string()});
  CHECK(assign.code == 0);
  CHECK(report_of(assign)["assignment_passes"] == true);
  const auto assign_bad = cli_run({"--job", write_job("assign", R"({"command":"scalar-reps","algebra":"A","params":{"a":"1","b":"0","c":"1"},"assignment":["1","2"]})").string()});
  CHECK(assign_bad.code == 1);
}

TEST_CASE("reports are byte-identical for the same job and seed") {
  const fs::path a = fs::temp_directory_path() / "braidalg_test_a.json";
  const fs::path b = fs::temp_directory_path() / "braidalg_test_b.json";
  const std::string job = (kFixtures / "cli/ybe_random.json").string();
  CHECK(cli_run({"--job", job, "--out", a.string()}).code == 0);
  CHECK(cli_run({"--job", job, "--out", b.string()}).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).find("elapsed") == std::string::npos);

  CHECK(cli_run({"--job", job, "--out", b.string(), "--seed", "8"}).code == 0);
  CHECK(slurp(a) != slurp(b));
  const auto seeded = nlohmann::json::parse(slurp(b));
  CHECK(seeded["seed"] == 8);

  CHECK(cli_run({"--job", job, "--out", b.string(), "--trials", "3"}).code == 0);
  CHECK(nlohmann::json::parse(slurp(b))["samples"].size() == 3);

  const auto sym = cli_run({"--job", job, "--mode", "symbolic"});
  CHECK(report_of(sym)["mode"] == "symbolic");
}
