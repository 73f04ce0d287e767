#pragma once

#include <string>
#include <vector>

namespace weylpoly {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness; // empty on pass, first failing instance otherwise
};

struct CheckReport {
    std::string suite;
    std::vector<CheckResult> checks;
    long long wall_ms = 0;

    bool all_pass() const {
        for (const CheckResult& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

} // namespace weylpoly
