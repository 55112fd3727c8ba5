#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "umbracomb/umbracomb.hpp"

namespace umbracomb::cli {

/// Runs the tool on argv[1..]; returns the process exit status
/// (0 success, 1 failed checks, 2 usage error).
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact umbral and parking-function computations with identity checks", "umbracomb"};
    app.require_subcommand(1);

    ComputeParams params;
    std::optional<unsigned> k;
    std::string format = "text";
    std::string suite_name = "all";
    unsigned max_n = 5;
    unsigned jobs = 1;
    bool timing = false;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_n = [&](CLI::App* sub) { sub->add_option("--n", params.n, "Size parameter")->required(); };

    auto* pf_cmd = app.add_subcommand("pf", "Parking-function symmetric function PF_n (or PF_n^(k), PF_n^B)");
    add_n(pf_cmd);
    pf_cmd->add_option("--k", k, "k for k-parking functions");
    pf_cmd->add_option("--type", params.type, "a or b");
    add_format(pf_cmd);

    auto* volume_cmd = app.add_subcommand("volume", "Volume polynomial aggregated by exponent type");
    add_n(volume_cmd);
    volume_cmd->add_option("--type", params.type, "a or b");
    volume_cmd->add_option("--kind", params.kind, "definition or closed_form");
    add_format(volume_cmd);

    auto* hstar_cmd = app.add_subcommand("hstar", "Macdonald's h_n^* in the h basis");
    add_n(hstar_cmd);
    hstar_cmd->add_option("--kind", params.kind, "lagrange_formula or series_inversion");
    add_format(hstar_cmd);

    auto* count_cmd = app.add_subcommand("count", "Brute-force counts");
    add_n(count_cmd);
    count_cmd->add_option("--object", params.object,
                          "parking, parking-k, parking-b, orbits, partitions, nc, nc-k, nc-b, chains-nc, chains-nc-b")
        ->required();
    count_cmd->add_option("--k", k, "k for parking-k and nc-k");
    add_format(count_cmd);

    auto* flags_cmd = app.add_subcommand("flags", "Flag f- and h-vectors of NC_{n+1}");
    add_n(flags_cmd);
    add_format(flags_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Run identity-check suites");
    verify_cmd->add_option("--suite", suite_name, "counts, symfunc, umbral, volume, flags, typeb or all");
    verify_cmd->add_option("--max-n", max_n, "Largest n before per-check clamping");
    verify_cmd->add_option("--jobs", jobs, "Worker threads");
    verify_cmd->add_flag("--timing", timing, "Include elapsed milliseconds");
    add_format(verify_cmd);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    const OutputFormat fmt = format == "json" ? OutputFormat::json : OutputFormat::text;
    params.k = k;
    try {
        if (verify_cmd->parsed()) {
            auto suite = parse_suite(suite_name);
            if (!suite)
                throw usage_error("unknown suite '" + suite_name + "'");
            auto reports = run_suite(*suite, max_n, jobs, default_order());
            if (fmt == OutputFormat::json)
                out << render_json(reports, timing).dump(2) << '\n';
            else
                out << render_text(reports, timing);
            return all_passed(reports) ? 0 : 1;
        }
        std::string command = app.get_subcommands().front()->get_name();
        out << compute(command, params, fmt) << '\n';
        return 0;
    } catch (const usage_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace umbracomb::cli
