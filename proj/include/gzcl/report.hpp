#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace gzcl {

struct Check {
    std::string label;
    bool passed = false;
    std::string detail;  // counterexample or context when failed
};

/// Pass/fail ledger returned by the verify_* routines.
struct Report {
    std::string name;
    std::vector<Check> checks;

    void add(std::string label, bool passed, std::string detail = {}) {
        checks.push_back({std::move(label), passed, std::move(detail)});
    }
    void merge(const Report& other) {
        for (const auto& c : other.checks)
            checks.push_back({other.name.empty() ? c.label : other.name + ": " + c.label, c.passed, c.detail});
    }
    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    }
    const Check* first_failure() const {
        auto it = std::find_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; });
        return it == checks.end() ? nullptr : &*it;
    }
};

}  // namespace gzcl
