// Batch front end: one JSON job document in, one JSON report out.
//
// Either form works:
//   decostab <command> <payload.json> [flags]
//   decostab --job <job.json> [flags]
// where <command> is one of testset, fan, instability, walls, check,
// thresholds, probe.  Exit codes: 0 success (whatever the verdict),
// 2 usage error (bad flags, unreadable file, malformed JSON), 3 domain
// error (infeasible input; the report carries a machine-readable reason).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "decostab/errors.hpp"
#include "decostab/jobs.hpp"

namespace {

constexpr int kExitUsage = 2;

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/// Single atomic publication of the report: stdout in one write, or a
/// temporary file renamed into place.
bool write_report(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return static_cast<bool>(std::cout.flush());
  }
  const std::string tmp_path = out_path + ".tmp";
  {
    std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << text) || !out.flush()) return false;
  }
  if (std::rename(tmp_path.c_str(), out_path.c_str()) != 0) {
    std::remove(tmp_path.c_str());
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "decostab: exact stability data for decorated sheaves "
      "(weights, instability subgroups, fans, test sets, thresholds, walls)"};

  std::string command;
  std::string payload_path;
  std::string job_path;
  std::string out_path;
  long seed_value = 0;
  bool verify_walls = false;

  app.add_option("command", command,
                 "subcommand: testset | fan | instability | walls | check | thresholds | probe");
  app.add_option("payload", payload_path, "JSON payload file for the subcommand");
  auto* job_opt = app.add_option("--job,-j", job_path,
                                 "full job document file: {\"command\", \"payload\", \"seed\"?}");
  auto* seed_opt =
      app.add_option("--seed", seed_value, "seed recorded in the report (overrides the document)");
  app.add_option("--out,-o", out_path, "write the report to this file instead of stdout");
  app.add_flag("--verify-walls", verify_walls,
               "walls command: add the brute-force wall confirmation pass");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const bool has_subcommand_form = !command.empty();
  const bool has_job_form = job_opt->count() > 0;
  if (has_subcommand_form == has_job_form) {
    std::cerr << "usage: pass either <command> <payload.json> or --job <job.json>\n";
    return kExitUsage;
  }
  if (has_subcommand_form && payload_path.empty()) {
    std::cerr << "usage: subcommand '" << command << "' needs a JSON payload file\n";
    return kExitUsage;
  }

  std::string job_text;
  if (has_job_form) {
    auto text = read_file(job_path);
    if (!text) {
      std::cerr << "usage: cannot read job file '" << job_path << "'\n";
      return kExitUsage;
    }
    job_text = std::move(*text);
  } else {
    auto text = read_file(payload_path);
    if (!text) {
      std::cerr << "usage: cannot read payload file '" << payload_path << "'\n";
      return kExitUsage;
    }
    nlohmann::ordered_json job;
    job["command"] = command;
    try {
      job["payload"] = nlohmann::ordered_json::parse(*text);
    } catch (const nlohmann::ordered_json::parse_error& e) {
      std::cerr << "usage: payload file is not valid JSON: " << e.what() << "\n";
      return kExitUsage;
    }
    job_text = job.dump();
  }

  decostab::JobOptions options;
  if (seed_opt->count() > 0) options.seed = seed_value;
  options.verify_walls = verify_walls;

  try {
    const decostab::JobOutcome outcome = decostab::run_job_document(job_text, options);
    if (!write_report(outcome.report_text, out_path)) {
      std::cerr << "error: cannot write report to '" << (out_path.empty() ? "<stdout>" : out_path)
                << "'\n";
      return 1;
    }
    return outcome.exit_code;
  } catch (const decostab::UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
