#pragma once

#include <string>
#include <vector>

namespace dlcoh {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Report {
    std::string title;
    std::vector<Check> checks;
    std::vector<std::string> notes;  // informational lines, not pass/fail

    void add(std::string name, bool passed, std::string detail = {}) {
        checks.push_back({std::move(name), passed, std::move(detail)});
    }
    void note(std::string line) { notes.push_back(std::move(line)); }
    void merge(const Report& other, const std::string& prefix = {}) {
        for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.passed, c.detail});
        for (const auto& n : other.notes) notes.push_back(prefix + n);
    }
    bool ok() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    std::size_t failures() const {
        std::size_t f = 0;
        for (const auto& c : checks) f += c.passed ? 0 : 1;
        return f;
    }
};

}  // namespace dlcoh
