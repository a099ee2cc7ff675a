#pragma once

// The verification suite: every numbered acceptance check, runnable at two
// sizes. `full` uses the release truncations; `fast` shrinks them to keep a
// complete run under half a minute. Both the CLI `verify` command and the
// acceptance test binary drive this list, so there are no hidden checks.

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace telesum {

enum class VerifyLevel { fast, full };

struct CheckResult {
    std::string id;       // "01-theorem1-limit", ...
    std::string detail;   // human-readable measurement summary
    bool pass = false;
    double elapsed_ms = 0.0;
};

struct Check {
    std::string id;
    std::function<CheckResult(VerifyLevel)> run;
};

// The numbered checks, in order.
const std::vector<Check>& verification_checks();

// Run every check, print one PASS/FAIL line each to `out`, return true iff
// all passed.
bool run_verification(VerifyLevel level, std::ostream& out);

}  // namespace telesum
