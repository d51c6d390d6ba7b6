#pragma once

#include <string>
#include <vector>

namespace qbranch {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double deviation = 0.0;
};

struct Report {
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string name, bool ok, std::string detail = "", double dev = 0.0) {
        checks.push_back({std::move(name), ok, std::move(detail), dev});
    }
    void merge(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
};

}  // namespace qbranch
