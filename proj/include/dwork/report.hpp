// report.hpp
// Check registry and result reporting shared by the CLI, the unit tests and
// the acceptance suite.  A check is a pure function from run parameters to a
// pass/fail result; failures raise exceptions that are captured into the
// result's detail string.
#pragma once

#include "dwork/rat.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace dwork {

struct CheckContext {
    uint64_t seed = 0;
    int samples = 25;
    unsigned precision_bits = 128;
    Rat psi5 = Rat(1, 2);  // parameter for checks that sample a pencil member
};

struct CheckResult {
    std::string id;
    enum class Status { pass, fail, skipped } status = Status::pass;
    std::string details;
    double elapsed_ms = 0.0;
    std::string provenance;  // which table/equation/section the check pins down
};

struct CheckDef {
    std::string id;
    std::string provenance;
    std::function<void(const CheckContext&)> body;  // throws on failure
};

// All registered checks, grouped by id prefix (dwork.*, dp5.*, pluecker.*,
// picard.*, fiber.*).
const std::vector<CheckDef>& all_checks();

// Run one check, capturing exceptions into a fail result.
CheckResult run_check(const CheckDef& def, const CheckContext& ctx);

// Run every check whose id matches the pattern.  Patterns: a suite name
// (all, dwork, dp5, pluecker, picard, fiber) or a glob on check ids where '*'
// matches any suffix ("picard.*").  Throws std::invalid_argument for an
// unknown suite / non-matching pattern.
std::vector<CheckResult> run_matching(const std::string& pattern, const CheckContext& ctx);

bool pattern_matches(const std::string& pattern, const std::string& id);

} // namespace dwork
