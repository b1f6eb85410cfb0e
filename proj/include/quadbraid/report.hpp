#pragma once

#include "quadbraid/target.hpp"

#include <deque>
#include <string>
#include <vector>

namespace quadbraid {

/// One counterexample to a checked identity: a human-readable description of
/// the arguments plus the two sides that failed to agree.
struct FailureCase {
    std::string detail;
    std::string lhs;
    std::string rhs;
};

/// Tally for one identity family (e.g. one axiom checked over a sweep).
struct IdentityCheck {
    std::string name;
    long long checked = 0;
    long long failures = 0;
    std::vector<FailureCase> sample;  // first kMaxSample counterexamples

    static constexpr std::size_t kMaxSample = 10;

    void pass() { ++checked; }

    void fail(std::string detail, std::string lhs, std::string rhs) {
        ++checked;
        ++failures;
        if (sample.size() < kMaxSample)
            sample.push_back(FailureCase{std::move(detail), std::move(lhs), std::move(rhs)});
    }

    void fail(std::string detail, const Coeff& lhs, const Coeff& rhs) {
        fail(std::move(detail), lhs.str(), rhs.str());
    }

    void record(bool ok, const char* detail_if_bad, const Coeff& lhs, const Coeff& rhs) {
        if (ok) pass();
        else fail(detail_if_bad, lhs, rhs);
    }

    bool passed() const { return failures == 0; }
};

struct CheckReport {
    // deque, not vector: add() hands out references that stay valid while
    // later families are appended
    std::deque<IdentityCheck> checks;

    IdentityCheck& add(std::string name) {
        checks.push_back(IdentityCheck{std::move(name)});
        return checks.back();
    }

    const IdentityCheck* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed()) return false;
        return true;
    }

    long long total_checked() const {
        long long n = 0;
        for (const auto& c : checks) n += c.checked;
        return n;
    }

    long long total_failures() const {
        long long n = 0;
        for (const auto& c : checks) n += c.failures;
        return n;
    }
};

}  // namespace quadbraid
