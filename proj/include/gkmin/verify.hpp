#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gkmin/json_io.hpp"

namespace gkmin {

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string suite;
  std::string id;
  CheckStatus status = CheckStatus::Pass;
  /// Reason for a skip, or the error text of a check that threw.
  std::string note;
  /// Serialized counterexample; null unless the check failed.
  Json witness;
  double wall_time_ms = 0;
};

struct VerifyOptions {
  int n = 3;
  /// One of suite_names().
  std::string suite = "all";
  /// KL-dependent checks are skipped above this degree.
  int oracle_max_n = 6;
  /// Seeds the random weights and samples; each check derives its own stream.
  std::uint64_t seed = 1;
  /// Worker threads; 0 means hardware concurrency.
  unsigned threads = 0;
};

struct VerificationReport {
  std::string suite;
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;  // registry order
  double wall_time_ms = 0;

  bool passed() const;
  std::size_t count(CheckStatus s) const;
  Json to_json() const;
};

/// "symgroup", "tableaux", "kl", "dyck", "weights", "langlands", "coherent", "all".
const std::vector<std::string>& suite_names();

/// Runs every check of the selected suite at degree n on a worker pool.
/// Throws DomainError for n < 2 or an unknown suite, and lets
/// ResourceLimitError from any check propagate.
VerificationReport run_verify(const VerifyOptions& options);

} // namespace gkmin
