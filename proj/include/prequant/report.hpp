#pragma once
// Verification reports: one record per check with the target value, the
// computed value, the tolerance used, and a pass flag. Reports are plain data
// so runs can be diffed; timings are the only fields allowed to vary between
// identical runs, and stripVolatileFields removes them for comparisons.

#include <complex>
#include <string>
#include <vector>

#include "json.hpp"

namespace prequant {

inline constexpr const char* kVersion = "0.1.0";

struct CheckRecord {
    std::string name;
    nlohmann::json expected;
    nlohmann::json computed;
    double tolerance = 0.0;
    bool pass = false;
    std::string source;  // where the target value comes from
    std::string note;    // free-form context: errors, skips, flags
    nlohmann::json details;  // method-specific payload (grids, timings, ...)

    // |expected - computed| <= tolerance.
    static CheckRecord numeric(const std::string& name, double expected, double computed,
                               double tolerance, const std::string& source);

    // Complex targets, stored as [re, im]; pass on modulus of the difference.
    static CheckRecord complexValue(const std::string& name, std::complex<double> expected,
                                    std::complex<double> computed, double tolerance,
                                    const std::string& source);

    // Exact integer equality.
    static CheckRecord integer(const std::string& name, long long expected, long long computed,
                               const std::string& source);

    // A measured quantity that must stay below a bound.
    static CheckRecord bound(const std::string& name, double value, double limit,
                             const std::string& source);

    // A measured quantity that must reach a floor.
    static CheckRecord atLeast(const std::string& name, double value, double limit,
                               const std::string& source);

    // A named condition that must hold.
    static CheckRecord condition(const std::string& name, bool holds, const std::string& source);

    // An error path: pass = false, note carries the reason.
    static CheckRecord failed(const std::string& name, const std::string& source,
                              const std::string& reason);

    // A non-check annotation (skipped sample, emitted file); always passes.
    static CheckRecord info(const std::string& name, const std::string& note);
};

struct VerificationReport {
    std::string command;
    nlohmann::json provenance;
    std::vector<CheckRecord> checks;

    void add(CheckRecord rec) { checks.push_back(std::move(rec)); }
    bool pass() const;
    int failureCount() const;
};

nlohmann::json toJson(const VerificationReport& r);

// name,expected,computed,tolerance,pass,source,note rows; json-valued cells
// are dumped compactly and quoted.
std::string toCsv(const VerificationReport& r);

// Recursively removes "runtime_ms" entries so two runs of the same command
// with the same seed compare equal.
nlohmann::json stripVolatileFields(nlohmann::json j);

// Console rendering: per-check lines at verbosity >= 1, failures and the
// verdict always.
std::string formatSummary(const VerificationReport& r, int verbosity);

}  // namespace prequant
