#pragma once

#include <set>
#include <string>
#include <vector>

namespace yb {

// One failed instance of an axiom or identity. `where` holds the basis tuple
// (1-based, the convention used in every human-facing report in this project);
// `detail` carries the residual or the differing values.
struct Violation {
    std::string rule;
    std::vector<long> where;
    std::string detail;
};

// Result of verifying an axiom set over a structure. Failures are data, not
// exceptions: an empty `violations` list means the check passed.
struct VerificationReport {
    std::string subject;
    long cases = 0;
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }

    void add(std::string rule, std::vector<long> where, std::string detail) {
        violations.push_back({std::move(rule), std::move(where), std::move(detail)});
    }

    void absorb(const VerificationReport& other) {
        cases += other.cases;
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }

    static std::string tuple_str(const std::vector<long>& t) {
        std::string s = "(";
        for (size_t i = 0; i < t.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(t[i]);
        }
        return s + ")";
    }

    // "PASS <subject> (N cases checked)" or a FAIL line with the first witness.
    std::string summary() const {
        if (ok())
            return "PASS " + subject + " (" + std::to_string(cases) + " cases checked)";
        std::string s = "FAIL " + subject + " (" + std::to_string(violations.size()) +
                        " violations in " + std::to_string(cases) + " cases); first: " +
                        violations.front().rule + " at " + tuple_str(violations.front().where);
        if (!violations.front().detail.empty()) s += ": " + violations.front().detail;
        return s;
    }
};

// One differing matrix entry (1-based row/col). `note` optionally carries a
// derivation of what the computed value should be and why.
struct DiffCell {
    long row = 0, col = 0;
    std::string computed, reference;
    std::string note;
};

// Outcome of comparing a computed matrix against embedded reference data.
// Never a failure by itself; consumers decide what a nonempty diff means.
struct DiffReport {
    long rows = 0, cols = 0;
    std::vector<DiffCell> cells;

    bool empty() const { return cells.empty(); }

    std::set<long> differing_columns() const {
        std::set<long> out;
        for (const auto& c : cells) out.insert(c.col);
        return out;
    }

    std::string summary() const {
        if (empty())
            return "MATCH (" + std::to_string(rows) + "x" + std::to_string(cols) + ", no differences)";
        return "DIFF (" + std::to_string(cells.size()) + " cells in " +
               std::to_string(differing_columns().size()) + " columns)";
    }
};

}  // namespace yb
