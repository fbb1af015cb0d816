#pragma once

#include <functional>
#include <string>
#include <vector>

#include "quadent/json_io.hpp"
#include "quadent/teleport.hpp"

namespace quadent {

// PASS: the claim holds. FAIL: it does not and nothing explains why.
// FLAGGED: the engine refutes the published value; the engine is authoritative.
// UNVERIFIED: only a consistent bound or no procedure is available.
enum class ClaimStatus { Pass, Fail, Flagged, Unverified };
std::string to_string(ClaimStatus s);

struct Claim {
  std::string id;
  std::string section;   // teleport, densecode, entanglement, basis, locc
  std::string text;      // e.g. "Omega DC2 capacity: 4 cbits"
  std::string observed;
  ClaimStatus status = ClaimStatus::Fail;
  std::string printed;   // "", "as-printed", "as-corrected"
  std::string note;
};

struct SuiteReport {
  std::uint64_t seed = 42;
  double tolerance = kTol;
  std::vector<Claim> claims;

  int count(ClaimStatus s) const;
  bool ok() const { return count(ClaimStatus::Fail) == 0; }
};

using ClaimTask = std::function<Claim(const RunOptions&)>;

// Every claim evaluator, in report order.
std::vector<ClaimTask> paper_claims();

// Runs tasks on `threads` workers (0: hardware concurrency); the report
// keeps task order.
SuiteReport run_claims(const std::vector<ClaimTask>& tasks, const RunOptions& opt = {}, unsigned threads = 0);
SuiteReport run_paper_suite(const RunOptions& opt = {}, unsigned threads = 0);

Json to_json(const SuiteReport& r);
std::string render_table(const SuiteReport& r);

}  // namespace quadent
