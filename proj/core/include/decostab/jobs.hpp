#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace decostab {

/// Malformed job document or payload: not JSON, missing or ill-typed
/// fields, unknown command.  Kept apart from DomainError so front ends can
/// map schema problems to the usage exit code (2) and infeasible inputs to
/// the domain exit code (3).
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct JobOptions {
  /// Overrides the job document's seed when set.
  std::optional<long> seed;
  /// Adds the brute-force wall confirmation pass to the `walls` command.
  bool verify_walls = false;
};

/// Runs one job document {"command": ..., "payload": {...}, "seed"?: n}
/// and returns the report document as pretty-printed JSON (trailing
/// newline included).  The report embeds the command, the input payload,
/// the seed when one was given, the library version, and the result, all
/// with exact rationals as "p/q" strings.  Output is byte-identical for
/// identical (document, options) pairs.  Throws UsageError on malformed
/// documents and DomainError subclasses on infeasible inputs.
std::string run_job_text(const std::string& job_text, const JobOptions& options = {});

/// Report text plus the process exit code it should map to.
struct JobOutcome {
  std::string report_text;
  int exit_code = 0;
};

/// As run_job_text, but converts DomainError into a machine-readable
/// {"error": {"code", "message"}} report with exit code 3 instead of
/// throwing.  UsageError (exit 2) still propagates: a malformed document
/// has no trustworthy payload to echo.
JobOutcome run_job_document(const std::string& job_text, const JobOptions& options = {});

}  // namespace decostab
