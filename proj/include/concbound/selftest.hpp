#pragma once

// End-to-end reproduction checks for the benchmark families. Each check
// prints one PASS/FAIL line; run_selftest returns the number of failures.

#include <iosfwd>
#include <string>
#include <vector>

namespace concbound {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

std::vector<CheckResult> run_acceptance_checks();

// prints one line per check to os, returns the number of failures
int run_selftest(std::ostream& os);

} // namespace concbound
