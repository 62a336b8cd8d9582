#include "dwork/report.hpp"

#include <chrono>
#include <stdexcept>

namespace dwork {

CheckResult run_check(const CheckDef& def, const CheckContext& ctx) {
    CheckResult res;
    res.id = def.id;
    res.provenance = def.provenance;
    auto start = std::chrono::steady_clock::now();
    try {
        def.body(ctx);
        res.status = CheckResult::Status::pass;
        res.details = "ok";
    } catch (const std::exception& e) {
        res.status = CheckResult::Status::fail;
        res.details = e.what();
    }
    auto end = std::chrono::steady_clock::now();
    res.elapsed_ms = std::chrono::duration<double, std::milli>(end - start).count();
    return res;
}

bool pattern_matches(const std::string& pattern, const std::string& id) {
    if (pattern == "all") return true;
    auto star = pattern.find('*');
    if (star == std::string::npos) {
        // Suite name: match "suite." prefix or an exact id.
        if (id == pattern) return true;
        return id.size() > pattern.size() && id.compare(0, pattern.size(), pattern) == 0 &&
               id[pattern.size()] == '.';
    }
    // Single trailing-star glob.
    std::string prefix = pattern.substr(0, star);
    return id.size() >= prefix.size() && id.compare(0, prefix.size(), prefix) == 0;
}

std::vector<CheckResult> run_matching(const std::string& pattern, const CheckContext& ctx) {
    static const std::vector<std::string> suites = {"all",    "dwork",  "dp5",
                                                    "pluecker", "picard", "fiber"};
    std::vector<const CheckDef*> selected;
    for (const auto& def : all_checks())
        if (pattern_matches(pattern, def.id)) selected.push_back(&def);
    if (selected.empty()) throw std::invalid_argument("unknown suite or pattern: " + pattern);
    std::vector<CheckResult> out;
    out.reserve(selected.size());
    for (const CheckDef* def : selected) out.push_back(run_check(*def, ctx));
    return out;
}

} // namespace dwork
