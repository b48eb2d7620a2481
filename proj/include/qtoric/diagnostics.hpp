#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qtoric {

// Thrown for contract violations; `code` is a stable machine-readable tag
// such as "NotPolytopal" or "DegreeOverflow".
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct Issue {
    std::string code;
    std::string message;
};

// Collected validator output.  Validators report every problem they find
// instead of stopping at the first one.
struct Validation {
    std::vector<Issue> issues;

    bool ok() const { return issues.empty(); }

    bool has(const std::string& code) const {
        for (const auto& issue : issues) {
            if (issue.code == code) return true;
        }
        return false;
    }

    void add(std::string code, std::string message) {
        issues.push_back(Issue{std::move(code), std::move(message)});
    }

    void merge(const Validation& other) {
        issues.insert(issues.end(), other.issues.begin(), other.issues.end());
    }

    std::string summary() const {
        std::string out;
        for (const auto& issue : issues) {
            out += issue.code;
            out += ": ";
            out += issue.message;
            out += '\n';
        }
        return out;
    }
};

} // namespace qtoric
