#pragma once

#include <string>
#include <vector>

namespace frob {

enum class CheckStatus { pass, fail, skip };

struct Check {
    std::string id;
    std::string description;
    CheckStatus status = CheckStatus::pass;
    std::string detail;  // failure explanation / extra context, empty for clean passes
};

struct VerifyReport {
    std::string suite;
    std::vector<Check> checks;
    long elapsed_ms = 0;
    int failures() const;
    bool all_passed() const { return failures() == 0; }
};

// suite: one of "jordan", "classify", "masa", "catalog", "all".  max_n caps
// the parameterized family sizes exercised.  Deterministic: the checks, their
// order, and their results are identical across runs.
VerifyReport run_verify(const std::string& suite, int max_n = 10);

// format "text": one check per line, "[PASS] id — description" (failures
// append the detail), then a one-line summary.  format "json": stable field
// order {"suite","checks":[{"id","description","status","detail"}],"elapsed_ms"}.
std::string emit_report(const VerifyReport& report, const std::string& format);

} // namespace frob
