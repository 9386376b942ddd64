// One line per acceptance criterion, in the order they are stated; the exit
// status is nonzero if any line fails.

#include <cstdio>
#include <string>
#include <string_view>

#include "ttk/equations.hpp"
#include "ttk/suite.hpp"
#include "ttk/syntax.hpp"

using namespace ttk;

namespace {

int failures = 0;

const SuiteRow* find_row(const SuiteReport& r, std::string_view name) {
    for (const auto& row : r.rows)
        if (row.name == name) return &row;
    return nullptr;
}

bool row_at_least(const SuiteReport& r, std::string_view name, unsigned n) {
    const SuiteRow* row = find_row(r, name);
    return row && row->failed == 0 && row->passed >= n;
}

void report(const char* label, bool ok, const SuiteReport& r, const std::string& detail) {
    std::printf("[%s] %s: %s (%.1f s)\n", ok ? "PASS" : "FAIL", label, detail.c_str(), r.seconds);
    if (!ok) {
        ++failures;
        for (const auto& f : r.failures) std::printf("    %s\n", f.c_str());
    }
}

SuiteReport run(Suite s, unsigned count) {
    SuiteOptions o;
    o.count = count;
    return run_suite(s, o);
}

std::string counts(const SuiteReport& r) {
    return std::to_string(r.passed()) + " passed, " + std::to_string(r.failed()) + " failed";
}

void equations() {
    SuiteReport r = run(Suite::Equations, 100);
    bool ok = r.ok() && r.rows.size() == kSchemaCount && r.seconds < 120;
    for (const auto& row : r.rows) ok = ok && row.passed >= 100;
    report("equation suite", ok, r, std::to_string(r.rows.size()) + " schemas, " + counts(r));
}

void termified() {
    SuiteReport r = run(Suite::Termified, 50);
    bool ok = r.ok() && r.rows.size() == kSchemaCount && r.seconds < 180;
    for (const auto& row : r.rows) ok = ok && row.passed >= 50;
    report("termified-model suite", ok, r, std::to_string(r.rows.size()) + " schemas, " + counts(r));
}

void injectivity() {
    SuiteReport r = run(Suite::Inject, 100);
    bool ok = r.ok();
    for (const char* name : {"ctx iso", "embed ty", "embed sub", "embed tm", "probe"}) ok = ok && row_at_least(r, name, 100);
    ok = ok && row_at_least(r, "operator cases", kOpCount);
    report("injectivity suite", ok, r, counts(r));
}

void canonicity() {
    SuiteReport r = run(Suite::Canon, 100);
    bool ok = r.ok() && row_at_least(r, "certified", 100) && row_at_least(r, "coverage", 4);
    const SuiteRow* cert = find_row(r, "certified");
    report("canonicity suite", ok, r, counts(r) + (cert ? "; " + cert->note : ""));
}

void parametricity() {
    SuiteReport r = run(Suite::Param, 100);
    bool ok = r.ok() && row_at_least(r, "coverage", 1) && row_at_least(r, "operator cases", kOpCount);
    for (const char* name : {"con", "ty", "sub", "tm"}) ok = ok && row_at_least(r, name, 100);
    report("parametricity suite", ok, r, counts(r));
}

void witnesses() {
    SuiteReport r = run(Suite::Witnesses, 100);
    report("witness examples", r.ok() && !r.rows.empty(), r, counts(r));
}

void hygiene() {
    SuiteReport r = run(Suite::Hygiene, 100);
    bool ok = r.ok() && row_at_least(r, "golden eta", 2);
    for (const char* name : {"nf idempotent", "nf well typed", "conv reflexive", "conv symmetric", "conv transitive",
                             "conv congruence"})
        ok = ok && row_at_least(r, name, 100);
    report("kernel hygiene", ok, r, counts(r));
}

}  // namespace

int main() {
    equations();
    termified();
    injectivity();
    canonicity();
    parametricity();
    witnesses();
    hygiene();
    std::printf("%s\n", failures == 0 ? "ALL PASS" : "SOME FAILED");
    return failures == 0 ? 0 : 1;
}
