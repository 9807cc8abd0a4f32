// perdet: verification toolkit for period determinants of logarithmic
// connections on P^1, with tame symbols, relative Chow classes and
// Gauss/Jacobi sums over finite fields.

#include "perdet/runner.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using namespace perdet;

namespace {

int emit_reports(const std::vector<CheckReport>& reports, const std::string& report_path) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    bool all_pass = true;
    for (const auto& r : reports) {
        out.push_back(r.to_json());
        all_pass = all_pass && r.pass;
    }
    std::string text = out.dump(2) + "\n";
    if (report_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(report_path);
        f << text;
        std::cerr << reports.size() << " check(s), "
                  << (all_pass ? "all passed" : "FAILURES present") << ", report written to "
                  << report_path << "\n";
    }
    return all_pass ? 0 : 1;
}

std::vector<CheckConfig> select_kind(std::vector<CheckConfig> cfgs, CheckKind kind,
                                     const std::string& id_filter) {
    std::vector<CheckConfig> out;
    for (auto& c : cfgs) {
        if (c.kind != kind) continue;
        if (!id_filter.empty() && c.id != id_filter) continue;
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"perdet: period determinant and symbol verification toolkit"};
    app.require_subcommand(0, 1);

    std::string config_path;
    std::string report_path;
    std::string id_filter;
    bool run_all = false;
    double tol = 0.0;
    uint64_t seed = 0;
    bool seed_set = false, tol_set = false;
    unsigned jobs = 0;

    app.add_option("--config", config_path, "TOML check configuration file");
    app.add_flag("--all", run_all, "run the built-in catalog");
    app.add_option("--tol", tol, "tolerance override")->each([&](const std::string&) {
        tol_set = true;
    });
    app.add_option("--seed", seed, "seed override for randomized suites")
        ->each([&](const std::string&) { seed_set = true; });
    app.add_option("--jobs", jobs, "worker pool size (default: cores)");
    app.add_option("--report", report_path, "write the JSON report to a file");
    app.add_option("--id", id_filter, "filter catalog entries by id");

    auto* run_cmd = app.add_subcommand("run", "run checks from --config or --all");
    auto* catalog_cmd = app.add_subcommand("catalog", "list built-in examples");
    std::map<std::string, CLI::App*> kind_cmds;
    for (const char* name : {"periods", "monodromy", "gamma", "symbol", "reciprocity", "chow",
                             "jacobi", "fermat-count"}) {
        kind_cmds[name] = app.add_subcommand(
            name, std::string("run ") + name + " checks (catalog or --config, filter with --id)");
    }

    CLI11_PARSE(app, argc, argv);

    RunOptions opts;
    if (tol_set) opts.tol_override = tol;
    if (seed_set) opts.seed_override = seed;
    opts.jobs = jobs;

    if (catalog_cmd->parsed()) {
        for (const auto& c : builtin_catalog())
            std::cout << c.id << "  [" << to_string(c.kind)
                      << (c.mode.empty() ? "" : std::string("/") + c.mode) << "]\n";
        return 0;
    }

    std::vector<CheckConfig> cfgs;
    if (!config_path.empty()) {
        std::string err;
        cfgs = load_config_file(config_path, &err);
        if (!err.empty()) {
            std::cerr << "error: " << err << "\n";
            return 2;
        }
    } else if (run_all || run_cmd->parsed()) {
        cfgs = builtin_catalog();
    }

    for (const auto& [name, cmd] : kind_cmds) {
        if (!cmd->parsed()) continue;
        auto kind = check_kind_from_string(name);
        if (cfgs.empty()) cfgs = builtin_catalog();
        cfgs = select_kind(std::move(cfgs), *kind, id_filter);
        if (cfgs.empty()) {
            std::cerr << "no checks of kind '" << name << "' matched\n";
            return 2;
        }
        return emit_reports(run_checks(cfgs, opts), report_path);
    }

    if (cfgs.empty()) {
        std::cerr << app.help();
        return 2;
    }
    if (!id_filter.empty()) {
        std::vector<CheckConfig> filtered;
        for (auto& c : cfgs)
            if (c.id == id_filter) filtered.push_back(std::move(c));
        cfgs = std::move(filtered);
    }
    return emit_reports(run_checks(cfgs, opts), report_path);
}
