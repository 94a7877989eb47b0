// Tests for the batch job layer: JSON parsing, report envelopes, error
// channels, and the installed binary's exit-code contract.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "decostab/errors.hpp"
#include "decostab/jobs.hpp"
#include "decostab/version.hpp"

using decostab::JobOptions;
using decostab::run_job_document;
using decostab::run_job_text;
using decostab::UsageError;
using json = nlohmann::ordered_json;

namespace {

json parse_report(const std::string& text) { return json::parse(text); }

#ifdef DECOSTAB_CLI_PATH
/// Runs the real binary through the shell; returns its exit status.
int run_binary(const std::string& args) {
  const std::string cmd = std::string(DECOSTAB_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = std::string("/tmp/decostab_cli_test_") + name;
  std::ofstream out(path);
  out << content;
  out.close();
  return path;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}
#endif

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("testset jobs are byte-deterministic and carry the envelope") {
  const std::string job = R"({"command":"testset","payload":{"a":1,"b":1,"c":0,"r":2}})";
  const std::string first = run_job_text(job);
  const std::string second = run_job_text(job);
  CHECK(first == second);

  const json report = parse_report(first);
  CHECK(report.at("command") == "testset");
  CHECK(report.at("payload") == json::parse(R"({"a":1,"b":1,"c":0,"r":2})"));
  CHECK(report.at("library_version") == decostab::kLibraryVersion);
  CHECK_FALSE(report.contains("seed"));

  const json& result = report.at("result");
  REQUIRE(result.at("entries").size() == 1);
  CHECK(result.at("entries")[0].at("ranks") == json::array({1}));
  CHECK(result.at("entries")[0].at("alphas") == json::array({"1"}));
}

TEST_CASE("walls jobs mirror the enumeration example") {
  const std::string job =
      R"({"command":"walls","payload":{"r":2,"d":3,"a":1,"b":1,"c":0,"dLambda":0,"bounds":{"1":[0,1]}}})";
  const json report = parse_report(run_job_text(job));
  const json& result = report.at("result");
  CHECK(result.at("walls") == json::array({"1", "3"}));
  CHECK(result.at("provenance").size() == 2);
}

TEST_CASE("walls jobs classify a supplied delta and verify on request") {
  const std::string job =
      R"({"command":"walls","payload":{"r":2,"d":3,"a":1,"b":1,"c":0,"dLambda":0,)"
      R"("bounds":{"1":[0,1]},"delta":"2","verify":true}})";
  const json report = parse_report(run_job_text(job));
  const json& result = report.at("result");
  CHECK(result.at("chamber").at("kind") == "InChamber");
  CHECK(result.at("chamber").at("wall_index") == 1);
  CHECK(result.at("chamber").at("lower") == "1");
  CHECK(result.at("chamber").at("upper") == "3");
  REQUIRE(result.at("verification").size() == 2);
  for (const auto& v : result.at("verification")) {
    CHECK(v.at("confirmed") == true);
  }

  // The --verify-walls option is equivalent to the payload flag.
  const std::string plain_job =
      R"({"command":"walls","payload":{"r":2,"d":3,"a":1,"b":1,"c":0,"dLambda":0,)"
      R"("bounds":{"1":[0,1]}}})";
  JobOptions options;
  options.verify_walls = true;
  const json via_option = parse_report(run_job_text(plain_job, options));
  CHECK(via_option.at("result").at("verification") == result.at("verification"));
}

TEST_CASE("seed is echoed from the job or the command line") {
  const std::string without = R"({"command":"testset","payload":{"a":1,"b":1,"c":0,"r":2}})";
  const std::string with_seed =
      R"({"command":"testset","payload":{"a":1,"b":1,"c":0,"r":2},"seed":7})";
  CHECK(parse_report(run_job_text(with_seed)).at("seed") == 7);

  JobOptions options;
  options.seed = 42;
  // The command-line seed wins over the document's.
  CHECK(parse_report(run_job_text(with_seed, options)).at("seed") == 42);
  CHECK(parse_report(run_job_text(without, options)).at("seed") == 42);
}

TEST_CASE("malformed jobs raise usage errors") {
  CHECK_THROWS_AS(run_job_text("{not json"), UsageError);
  CHECK_THROWS_AS(run_job_text(R"(["array"])"), UsageError);
  CHECK_THROWS_AS(run_job_text(R"({"payload":{}})"), UsageError);
  CHECK_THROWS_AS(run_job_text(R"({"command":"walls"})"), UsageError);
  CHECK_THROWS_AS(run_job_text(R"({"command":"walls","payload":3})"), UsageError);
  CHECK_THROWS_AS(run_job_text(R"({"command":"nonsense","payload":{}})"), UsageError);
  // Schema violations inside a known command are usage errors too.
  CHECK_THROWS_AS(run_job_text(R"({"command":"fan","payload":{"r":"x"}})"), UsageError);
  CHECK_THROWS_AS(run_job_text(R"({"command":"testset","payload":{"a":1}})"), UsageError);
  CHECK_THROWS_AS(
      run_job_text(R"({"command":"thresholds","payload":{"r":2,"d":0,"a":1,"b":1,"c":0}})"),
      UsageError);

  // run_job_document propagates usage errors rather than reporting them.
  CHECK_THROWS_AS(run_job_document("{not json"), UsageError);
}

TEST_CASE("domain errors become machine-readable failure reports") {
  // A balanced point admits no instability certificate.
  const std::string job =
      R"({"command":"instability","payload":{"r":2,"a":1,"b":1,"c":0,)"
      R"("coeffs":[{"idx":[1],"val":"1"},{"idx":[2],"val":"1"}]}})";
  const auto outcome = run_job_document(job);
  CHECK(outcome.exit_code == 3);
  const json report = parse_report(outcome.report_text);
  CHECK(report.at("command") == "instability");
  CHECK_FALSE(report.contains("result"));
  CHECK(report.at("error").at("code") == "not-unstable");
  CHECK(report.at("error").at("message").is_string());

  // The same job through the text API throws the typed exception.
  CHECK_THROWS_AS(run_job_text(job), decostab::PreconditionError);

  // Probe with an unstable second factor reports its own code.
  const std::string probe =
      R"({"command":"probe","payload":{)"
      R"("w1":{"r":2,"a":1,"b":1,"c":0,"coeffs":[{"idx":[1],"val":"1"},{"idx":[2],"val":"1"}]},)"
      R"("w2":{"r":2,"a":1,"b":1,"c":0,"coeffs":[{"idx":[1],"val":"1"}]},)"
      R"("eta":"1"}})";
  const auto probe_outcome = run_job_document(probe);
  CHECK(probe_outcome.exit_code == 3);
  CHECK(parse_report(probe_outcome.report_text).at("error").at("code") == "unstable-factor");
}

TEST_CASE("successful documents report exit code zero") {
  const std::string job = R"({"command":"testset","payload":{"a":1,"b":1,"c":0,"r":2}})";
  const auto outcome = run_job_document(job);
  CHECK(outcome.exit_code == 0);
  CHECK(outcome.report_text == run_job_text(job));
}

TEST_CASE("instability jobs expose the certificate and residual") {
  const std::string job =
      R"({"command":"instability","payload":{"r":2,"a":2,"b":1,"c":1,)"
      R"("coeffs":[{"idx":[1,1],"val":"1"}]}})";
  const json result = parse_report(run_job_text(job)).at("result");
  const json& cert = result.at("certificate");
  CHECK(cert.at("lambda_star") == json::array({-1, 1}));
  CHECK(cert.at("mu_value") == "-2");
  CHECK(cert.at("norm_sq") == 2);
  CHECK(result.at("residual").at("level_value") == "-2");

  // Wrapped form with basis changes: the collapsing change from the
  // perfect-square example is found even though the bare point is balanced.
  const std::string wrapped =
      R"({"command":"instability","payload":{)"
      R"("point":{"r":2,"a":2,"b":1,"c":1,"coeffs":[)"
      R"({"idx":[1,1],"val":"1"},{"idx":[1,2],"val":"1"},)"
      R"({"idx":[2,1],"val":"1"},{"idx":[2,2],"val":"1"}]},)"
      R"("basis_changes":[[["0","1"],["1","-1"]]]}})";
  const json moved = parse_report(run_job_text(wrapped)).at("result");
  CHECK(moved.at("certificate").at("mu_value") == "-2");
}

TEST_CASE("probe jobs summarize the verdict in the status line") {
  const std::string job =
      R"({"command":"probe","payload":{)"
      R"("w1":{"r":2,"a":2,"b":1,"c":1,"coeffs":[{"idx":[1,1],"val":"1"}]},)"
      R"("w2":{"r":2,"a":2,"b":1,"c":0,"coeffs":[{"idx":[1,1],"val":"1"},{"idx":[2,2],"val":"1"}]},)"
      R"("eta":"1/2"}})";
  const json result = parse_report(run_job_text(job)).at("result");
  CHECK(result.at("unstable") == true);
  CHECK(result.at("status") == "unstable at eta=1/2");
  CHECK(result.at("lambda_star") == json::array({-1, 1}));
  CHECK(result.at("mu_1") == "-2");
  CHECK(result.at("mu_2") == "2");
  CHECK(result.at("combined") == "-1");

  const std::string stable_job =
      R"({"command":"probe","payload":{)"
      R"("w1":{"r":2,"a":2,"b":1,"c":1,"coeffs":[{"idx":[1,1],"val":"1"}]},)"
      R"("w2":{"r":2,"a":2,"b":1,"c":0,"coeffs":[{"idx":[1,1],"val":"1"},{"idx":[2,2],"val":"1"}]},)"
      R"("eta":"1"}})";
  const json stable = parse_report(run_job_text(stable_job)).at("result");
  CHECK(stable.at("unstable") == false);
  CHECK(stable.at("status") == "semistable at eta=1");
  CHECK_FALSE(stable.contains("lambda_star"));
}

TEST_CASE("thresholds jobs accept exactly one of the two shapes") {
  const std::string bounds_job =
      R"({"command":"thresholds","payload":{"r":2,"d":0,"a":1,"b":1,"c":0,"dLambda":0,)"
      R"("n_per_rank":[3]}})";
  const json bounds = parse_report(run_job_text(bounds_job)).at("result");
  CHECK(bounds.at("delta0") == "0");
  CHECK(bounds.at("delta1") == "0");

  const std::string product_job =
      R"({"command":"thresholds","payload":{"r":2,)"
      R"("weights_1":[[1,0],[0,1]],"weights_2":[[1,1]]}})";
  const json product = parse_report(run_job_text(product_job)).at("result");
  CHECK(product.at("eta_infinity") == "1");

  const std::string both =
      R"({"command":"thresholds","payload":{"r":2,"d":0,"a":1,"b":1,"c":0,)"
      R"("n_per_rank":[3],"weights_1":[[1,0]],"weights_2":[[1,1]]}})";
  CHECK_THROWS_AS(run_job_text(both), UsageError);
}

TEST_CASE("wall reports feed straight back into chamber classification") {
  const std::string walls_job =
      R"({"command":"walls","payload":{"r":2,"d":3,"a":1,"b":1,"c":0,"dLambda":0,)"
      R"("bounds":{"1":[0,1]}}})";
  const json walls = parse_report(run_job_text(walls_job)).at("result").at("walls");

  json check_job = json::object();
  check_job["command"] = "check";
  json payload = json::object();
  payload["config"] = json::parse(
      R"({"sheaf":{"rank":2,"degree":3,"genus":0},"dLambda":0,)"
      R"("point":{"r":2,"a":1,"b":1,"c":0,"coeffs":[{"idx":[2],"val":"1"}]}})");
  payload["degree_bounds"] = json::parse(R"({"1":[0,1]})");
  payload["delta"] = "2";
  payload["walls"] = walls;
  check_job["payload"] = std::move(payload);

  const json result = parse_report(run_job_text(check_job.dump())).at("result");
  CHECK(result.at("verdict") == "Unstable");
  CHECK(result.at("chamber").at("kind") == "InChamber");
  CHECK(result.at("chamber").at("wall_index") == 1);
  CHECK(result.at("chamber").at("lower") == "1");
  CHECK(result.at("chamber").at("upper") == "3");
}

TEST_CASE("check jobs support asymptotic verdicts") {
  const std::string job =
      R"({"command":"check","payload":{)"
      R"("config":{"sheaf":{"rank":2,"degree":3,"genus":0},"dLambda":0,)"
      R"("point":{"r":2,"a":1,"b":1,"c":0,"coeffs":[{"idx":[1],"val":"1"},{"idx":[2],"val":"1"}]}},)"
      R"("degree_bounds":{"1":[0,1]},"asymptotic":true}})";
  const json result = parse_report(run_job_text(job)).at("result");
  CHECK(result.at("verdict") == "Semistable");
  CHECK(result.at("generic_point_semistable") == true);
  CHECK(result.at("has_mu_zero_member") == false);
}

#ifdef DECOSTAB_CLI_PATH

TEST_CASE("binary exit codes follow the 0/2/3 contract") {
  const std::string good = write_temp(
      "good.json", R"({"command":"testset","payload":{"a":1,"b":1,"c":0,"r":2}})");
  CHECK(run_binary("--job " + good) == 0);

  const std::string bad_schema =
      write_temp("bad_schema.json", R"({"command":"fan","payload":{"r":"x"}})");
  CHECK(run_binary("--job " + bad_schema) == 2);

  const std::string not_json = write_temp("not_json.json", "{nope");
  CHECK(run_binary("--job " + not_json) == 2);

  const std::string domain = write_temp(
      "domain.json",
      R"({"command":"instability","payload":{"r":2,"a":1,"b":1,"c":0,)"
      R"("coeffs":[{"idx":[1],"val":"1"},{"idx":[2],"val":"1"}]}})");
  CHECK(run_binary("--job " + domain) == 3);

  CHECK(run_binary("") == 2);                      // no job at all
  CHECK(run_binary("--job " + good + " extra arg more") == 2);  // both forms at once
}

TEST_CASE("binary --out writes exactly the library's report") {
  const std::string job_text =
      R"({"command":"walls","payload":{"r":2,"d":3,"a":1,"b":1,"c":0,"dLambda":0,)"
      R"("bounds":{"1":[0,1]}}})";
  const std::string job_path = write_temp("out_job.json", job_text);
  const std::string out_path = "/tmp/decostab_cli_test_report.json";
  std::remove(out_path.c_str());
  REQUIRE(run_binary("--job " + job_path + " --out " + out_path) == 0);
  CHECK(read_file(out_path) == run_job_text(job_text));
  std::remove(out_path.c_str());
}

TEST_CASE("binary positional form matches the job-file form") {
  const std::string out_path = "/tmp/decostab_cli_test_positional.json";
  std::remove(out_path.c_str());
  const std::string payload = R"({"a":1,"b":1,"c":0,"r":2})";
  const std::string payload_path = write_temp("positional_payload.json", payload);
  REQUIRE(run_binary("testset " + payload_path + " --out " + out_path) == 0);
  const std::string report = read_file(out_path);
  CHECK(report == run_job_text(R"({"command":"testset","payload":)" + payload + "}"));
  std::remove(out_path.c_str());
}

#endif  // DECOSTAB_CLI_PATH

TEST_SUITE_END();
