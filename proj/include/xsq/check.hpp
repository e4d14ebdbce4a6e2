#pragma once

// Structured pass/fail reports for axiom checkers.  Violations are content,
// not exceptions; each carries the rule name and a witness tuple of element
// indices.

#include <string>
#include <vector>

#include "xsq/common.hpp"

namespace xsq {

inline constexpr std::size_t kMaxWitnesses = 8;

struct Violation {
    std::string rule;
    std::vector<int> witness;
};

struct CheckItem {
    std::string name;
    long long checked = 0;
    long long failures = 0;
    std::vector<Violation> violations;  // capped sample of the failures

    bool ok() const { return failures == 0; }
};

struct CheckReport {
    std::vector<CheckItem> items;
    std::string mode = "exhaustive";

    CheckItem& item(const std::string& name) {
        for (auto& it : items)
            if (it.name == name) return it;
        items.push_back(CheckItem{name, 0, {}});
        return items.back();
    }

    void record(const std::string& name, bool pass, std::vector<int> witness = {}) {
        CheckItem& it = item(name);
        ++it.checked;
        if (!pass) {
            ++it.failures;
            if (it.violations.size() < kMaxWitnesses)
                it.violations.push_back(Violation{name, std::move(witness)});
        }
    }

    bool ok() const {
        for (const auto& it : items)
            if (!it.ok()) return false;
        return true;
    }

    std::vector<std::string> failing() const {
        std::vector<std::string> f;
        for (const auto& it : items)
            if (!it.ok()) f.push_back(it.name);
        return f;
    }

    std::string summary() const {
        std::string s;
        for (const auto& it : items) {
            if (!s.empty()) s += "; ";
            s += it.name + (it.ok() ? ":pass" : ":FAIL");
        }
        return s;
    }

    void merge(const CheckReport& other, const std::string& prefix) {
        for (const auto& it : other.items) {
            CheckItem& mine = item(prefix + it.name);
            mine.checked += it.checked;
            mine.failures += it.failures;
            for (const auto& v : it.violations)
                if (mine.violations.size() < kMaxWitnesses) mine.violations.push_back(v);
        }
        if (other.mode != "exhaustive") mode = other.mode;
    }
};

}  // namespace xsq
