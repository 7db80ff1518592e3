#include "prequant/report.hpp"

#include <cmath>
#include <complex>
#include <sstream>

namespace prequant {

namespace {

std::string csvQuote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

std::string jsonCell(const nlohmann::json& j) {
    if (j.is_null()) return "";
    if (j.is_string()) return csvQuote(j.get<std::string>());
    return csvQuote(j.dump());
}

}  // namespace

CheckRecord CheckRecord::numeric(const std::string& name, double expected, double computed,
                                 double tolerance, const std::string& source) {
    CheckRecord r;
    r.name = name;
    r.expected = expected;
    r.computed = computed;
    r.tolerance = tolerance;
    r.pass = std::abs(expected - computed) <= tolerance;
    r.source = source;
    return r;
}

CheckRecord CheckRecord::complexValue(const std::string& name, std::complex<double> expected,
                                      std::complex<double> computed, double tolerance,
                                      const std::string& source) {
    CheckRecord r;
    r.name = name;
    r.expected = {expected.real(), expected.imag()};
    r.computed = {computed.real(), computed.imag()};
    r.tolerance = tolerance;
    r.pass = std::abs(expected - computed) <= tolerance;
    r.source = source;
    return r;
}

CheckRecord CheckRecord::integer(const std::string& name, long long expected, long long computed,
                                 const std::string& source) {
    CheckRecord r;
    r.name = name;
    r.expected = expected;
    r.computed = computed;
    r.tolerance = 0.0;
    r.pass = expected == computed;
    r.source = source;
    return r;
}

CheckRecord CheckRecord::bound(const std::string& name, double value, double limit,
                               const std::string& source) {
    CheckRecord r;
    r.name = name;
    r.expected = {{"at_most", limit}};
    r.computed = value;
    r.tolerance = limit;
    r.pass = value <= limit;
    r.source = source;
    return r;
}

CheckRecord CheckRecord::atLeast(const std::string& name, double value, double limit,
                                 const std::string& source) {
    CheckRecord r;
    r.name = name;
    r.expected = {{"at_least", limit}};
    r.computed = value;
    r.tolerance = limit;
    r.pass = value >= limit;
    r.source = source;
    return r;
}

CheckRecord CheckRecord::condition(const std::string& name, bool holds,
                                   const std::string& source) {
    CheckRecord r;
    r.name = name;
    r.expected = true;
    r.computed = holds;
    r.pass = holds;
    r.source = source;
    return r;
}

CheckRecord CheckRecord::failed(const std::string& name, const std::string& source,
                                const std::string& reason) {
    CheckRecord r;
    r.name = name;
    r.pass = false;
    r.source = source;
    r.note = reason;
    return r;
}

CheckRecord CheckRecord::info(const std::string& name, const std::string& note) {
    CheckRecord r;
    r.name = name;
    r.pass = true;
    r.source = "annotation";
    r.note = note;
    return r;
}

bool VerificationReport::pass() const { return failureCount() == 0; }

int VerificationReport::failureCount() const {
    int n = 0;
    for (const auto& c : checks)
        if (!c.pass) ++n;
    return n;
}

nlohmann::json toJson(const VerificationReport& r) {
    nlohmann::json j;
    j["command"] = r.command;
    j["provenance"] = r.provenance;
    j["pass"] = r.pass();
    auto& checks = j["checks"] = nlohmann::json::array();
    for (const auto& c : r.checks) {
        nlohmann::json rec;
        rec["name"] = c.name;
        rec["expected"] = c.expected;
        rec["computed"] = c.computed;
        rec["tolerance"] = c.tolerance;
        rec["pass"] = c.pass;
        rec["source"] = c.source;
        if (!c.note.empty()) rec["note"] = c.note;
        if (!c.details.is_null()) rec["details"] = c.details;
        checks.push_back(std::move(rec));
    }
    return j;
}

std::string toCsv(const VerificationReport& r) {
    std::ostringstream out;
    out << "name,expected,computed,tolerance,pass,source,note\n";
    for (const auto& c : r.checks) {
        out << csvQuote(c.name) << ',' << jsonCell(c.expected) << ',' << jsonCell(c.computed)
            << ',' << c.tolerance << ',' << (c.pass ? "true" : "false") << ','
            << csvQuote(c.source) << ',' << csvQuote(c.note) << '\n';
    }
    return out.str();
}

nlohmann::json stripVolatileFields(nlohmann::json j) {
    if (j.is_object()) {
        j.erase("runtime_ms");
        for (auto& [key, value] : j.items()) value = stripVolatileFields(value);
    } else if (j.is_array()) {
        for (auto& value : j) value = stripVolatileFields(value);
    }
    return j;
}

std::string formatSummary(const VerificationReport& r, int verbosity) {
    std::ostringstream out;
    for (const auto& c : r.checks) {
        if (!c.pass || verbosity >= 1) {
            out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
            if (!c.computed.is_null()) out << ": computed " << c.computed.dump();
            if (!c.expected.is_null()) out << ", expected " << c.expected.dump();
            if (c.tolerance > 0.0) out << " (tol " << c.tolerance << ")";
            if (!c.note.empty()) out << " -- " << c.note;
            out << '\n';
        }
    }
    int failures = r.failureCount();
    out << r.command << ": " << (failures == 0 ? "PASS" : "FAIL") << " ("
        << (r.checks.size() - failures) << "/" << r.checks.size() << " checks)\n";
    return out.str();
}

}  // namespace prequant
