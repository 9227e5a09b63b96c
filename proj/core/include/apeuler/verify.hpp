#pragma once

#include <string>
#include <vector>

namespace apeuler {

struct VerifyOptions {
  long p = 5;
  long M = 8;
  unsigned long long seed = 12345;
};

// status is "pass", "fail" or "skipped"; detail carries the comparison that
// decided it (values, agreement digits, or the rejection that was expected)
struct VerifyCase {
  std::string id;
  std::string status;
  std::string detail;
};

struct VerifySuiteResult {
  std::string suite;
  std::vector<VerifyCase> cases;
  int exit_code = 0;

  long passed() const;
  long failed() const;
  long skipped() const;
};

// registered suite names in their canonical order ("all" not included)
const std::vector<std::string>& verify_suite_names();

// runs one named suite; throws std::invalid_argument for an unknown name
VerifySuiteResult run_verify_suite(const std::string& suite, const VerifyOptions& opts);

// "all" expands to every registered suite in canonical order
std::vector<VerifySuiteResult> run_verify(const std::string& suite_or_all,
                                          const VerifyOptions& opts);

}  // namespace apeuler
