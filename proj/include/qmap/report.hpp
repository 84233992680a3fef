#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace qmap {

struct Check {
    std::string name;
    bool ok = true;
    std::string detail;
};

/// Ordered list of named pass/fail checks.
struct Report {
    std::vector<Check> checks;

    void add(std::string name, bool ok, std::string detail = {}) {
        checks.push_back({std::move(name), ok, std::move(detail)});
    }
    void append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

    bool ok() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
    }
    const Check* first_failure() const {
        auto it = std::find_if(checks.begin(), checks.end(), [](const Check& c) { return !c.ok; });
        return it == checks.end() ? nullptr : &*it;
    }
};

}  // namespace qmap
