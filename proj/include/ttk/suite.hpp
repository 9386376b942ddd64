#pragma once

// Property suites over generated instances, shared by `ttk selftest` and the
// acceptance run. Each suite yields a table of rows and a list of failures;
// equation rejections are shrunk before they are reported.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ttk {

enum class Suite { Equations, Termified, Inject, Canon, Param, Hygiene, Witnesses };

std::string_view suite_name(Suite s);
/// Accepts the names printed by suite_name.
bool parse_suite(std::string_view name, Suite& out);

struct SuiteOptions {
    std::uint64_t seed = 1;
    /// Instances per schema (equation suites) or per property (others).
    unsigned count = 100;
    unsigned max_nodes = 12;
};

struct SuiteRow {
    std::string name;
    unsigned passed = 0;
    unsigned failed = 0;
    /// Free-form extra column, e.g. how many pairs were equal.
    std::string note;
};

struct SuiteReport {
    Suite suite = Suite::Equations;
    std::vector<SuiteRow> rows;
    std::vector<std::string> failures;
    double seconds = 0;

    unsigned passed() const;
    unsigned failed() const;
    bool ok() const { return failed() == 0 && failures.empty(); }
};

SuiteReport run_suite(Suite s, const SuiteOptions& opts);

/// Fixed-width table, one row per line, followed by the failures.
std::string format_report(const SuiteReport& r);

}  // namespace ttk
