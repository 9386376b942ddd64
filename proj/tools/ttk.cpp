#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ttk/cli.hpp"
#include "ttk/suite.hpp"

namespace {

int run_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cout << "cannot read " << path << "\nRESULT: error IOError\n";
        return ttk::kParseError;
    }
    std::ostringstream src;
    src << in.rdbuf();
    return ttk::run_source(src.str(), std::cout);
}

int selftest(const ttk::SuiteOptions& opts, const std::string& which) {
    std::vector<ttk::Suite> suites;
    if (which == "all") {
        suites = {ttk::Suite::Equations, ttk::Suite::Termified, ttk::Suite::Inject, ttk::Suite::Canon,
                  ttk::Suite::Param};
    } else {
        ttk::Suite s;
        if (!ttk::parse_suite(which, s)) {
            std::cout << "unknown suite " << which << "\nRESULT: error UsageError\n";
            return ttk::kParseError;
        }
        suites = {s};
    }
    bool ok = true;
    for (ttk::Suite s : suites) {
        ttk::SuiteReport r = ttk::run_suite(s, opts);
        std::cout << ttk::format_report(r) << std::flush;
        ok = ok && r.ok();
    }
    std::cout << (ok ? "RESULT: accept\n" : "RESULT: reject\n");
    return ok ? ttk::kAccept : ttk::kReject;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Type theory kernel with termification, parametricity and canonicity checks"};
    app.require_subcommand(1);

    std::string file;
    auto* run = app.add_subcommand("run", "Execute the directive in FILE");
    run->add_option("FILE", file, "Directive file")->required();

    ttk::SuiteOptions opts;
    std::string which = "all";
    auto* self = app.add_subcommand("selftest", "Run the property suites on generated instances");
    self->add_option("--seed", opts.seed, "Generator seed");
    self->add_option("--count", opts.count, "Instances per schema or property");
    self->add_option("--max-nodes", opts.max_nodes, "Size bound for generated entities");
    self->add_option("--suite", which, "equations|termified|inject|canon|param|hygiene|witnesses|all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cout << "RESULT: error UsageError\n";
        return ttk::kParseError;
    }
    if (*run) return run_file(file);
    return selftest(opts, which);
}
