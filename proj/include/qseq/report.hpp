#pragma once

// Check reports.  Verification functions return a Report: a flat list of named
// checks with a level index, a pass flag, and a proved/conjectural tag.  The
// tag decides the exit-code contract: a failed proved identity is an error,
// a failed conjectural observation beyond its tested range is a warning.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace qseq {

struct CheckResult {
    std::string check;    // stable identifier, e.g. "arch.anchor"
    int level;            // arch level r or block index k; -1 if global
    bool pass;
    bool conjectural;     // true: observed regularity; false: proved identity
    std::string detail;   // short human-readable note (expected vs got, ...)
};

struct Report {
    std::vector<CheckResult> items;

    void add(const std::string& check, int level, bool pass, bool conjectural,
             std::string detail = "") {
        items.push_back({check, level, pass, conjectural, std::move(detail)});
    }
    void merge(const Report& other) {
        items.insert(items.end(), other.items.begin(), other.items.end());
    }

    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    // True when no *proved* check failed (conjectural failures are tolerated
    // by the exit-code contract).
    bool proved_pass() const {
        for (const auto& it : items)
            if (!it.pass && !it.conjectural) return false;
        return true;
    }
    std::size_t fail_count() const {
        std::size_t c = 0;
        for (const auto& it : items)
            if (!it.pass) ++c;
        return c;
    }
};

// Render the report as a fixed-width grid, one row per check name, one column
// per level, cells "ok" / "FAIL" / "warn" (warn = failed but conjectural).
// Deterministic: rows keep first-appearance order, columns are sorted.
void print_grid(std::ostream& os, const Report& report);

// One line per item, for verbose output and logs.
void print_lines(std::ostream& os, const Report& report);

}  // namespace qseq
