// SPDX-License-Identifier: MIT
//
// Verification suites: every bundled table is recomputed from first
// principles and every structural property of the small-coweight machinery
// and the matrix models is exercised.  Checks are independent cases that can
// run serially or sharded across OpenMP workers; the report order is
// canonical either way.
#pragma once

#include <string>
#include <vector>

namespace reederkit {

struct ReportRecord {
  std::string command;  // check name, e.g. "stalk/E7/w2+w7/2A1"
  std::string inputs;   // human-readable input summary
  std::string outputs;  // computed value; mismatches also carry the expected value
  std::string status;   // "ok" | "mismatch" | "error"
  std::string origin;   // bundled table the expectation comes from ("" if none)
};

bool all_ok(const std::vector<ReportRecord>& report);

/// Runs one of the suites: "tables", "poset", "stalk", "matrix", or "all".
/// jobs > 1 shards cases across OpenMP threads when available and falls back
/// to serial execution otherwise; results are identical in either mode.
std::vector<ReportRecord> verify_suite(const std::string& suite, int jobs = 1);

/// The individual case runners behind verify_suite, exposed for benchmarks:
/// each returns the report records of its suite computed serially.
std::vector<ReportRecord> verify_cases_serial(const std::string& suite);

}  // namespace reederkit
