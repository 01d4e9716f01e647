// End-to-end validation suite: every check pins its tolerance in code and
// reports one pass/fail line. Run by the CLI `validate` subcommand and by
// the acceptance test binary.

#pragma once

#include <string>
#include <vector>

namespace dsq {

struct CheckResult {
    std::string name;
    bool passed;
    bool warned;  // passed, but with a recorded caveat
    std::string detail;
};

std::vector<CheckResult> run_acceptance();

/// True iff every check passed.
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace dsq
