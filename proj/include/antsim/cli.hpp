#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "antsim/output.hpp"

namespace antsim {

namespace cli_detail {

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid = 1;
inline constexpr int exit_runtime = 2;
inline constexpr int exit_usage = 64;

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open config file '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string describe(const std::optional<double>& t) {
    return t ? format_double(*t) : std::string("never");
}

} // namespace cli_detail

/// Entry point behind the antsim binary. Subcommands:
///   run            --config FILE [--out DIR] [--steps N] [--dt X] [--force]
///   validate       --config FILE
///   print-defaults
/// Exit codes: 0 success, 1 validation failure, 2 runtime error, 64 usage.
inline int cli_main(int argc, const char* const* argv) {
    using namespace cli_detail;
    namespace fs = std::filesystem;

    CLI::App app{"antsim: finite-volume ant foraging simulator"};
    app.require_subcommand(1);

    std::string config_path, out_override;
    long steps_override = -1;
    double dt_override = -1.0;
    bool force = false;

    CLI::App* cmd_run = app.add_subcommand("run", "Run a scenario and write its outputs");
    cmd_run->add_option("--config", config_path, "Scenario config file")->required();
    cmd_run->add_option("--out", out_override, "Output directory (beats the config value)");
    cmd_run->add_option("--steps", steps_override, "Override the configured step count")
        ->check(CLI::NonNegativeNumber);
    cmd_run->add_option("--dt", dt_override, "Override the configured time step")
        ->check(CLI::PositiveNumber);
    cmd_run->add_flag("--force", force, "Allow writing into an existing non-empty directory");

    CLI::App* cmd_validate = app.add_subcommand("validate", "Check a scenario config");
    cmd_validate->add_option("--config", config_path, "Scenario config file")->required();

    app.add_subcommand("print-defaults", "Emit the commented reference scenario config");

    try {
        app.parse(argc, const_cast<char**>(argv));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help() << std::flush;
        return exit_usage;
    }

    if (app.got_subcommand("print-defaults")) {
        std::cout << reference_config_text();
        return exit_ok;
    }

    Scenario sc;
    try {
        sc = parse_config(read_file(config_path));
    } catch (const Error& e) {
        std::cerr << config_path << ": " << e.what() << '\n';
        return exit_invalid;
    }

    if (app.got_subcommand(cmd_run)) {
        if (steps_override >= 0) sc.run.steps = steps_override;
        if (dt_override > 0.0) sc.run.dt = dt_override;
        if (!out_override.empty()) sc.run.out_dir = out_override;
    }

    const auto violations = validate(sc);
    if (app.got_subcommand(cmd_validate)) {
        for (const Violation& v : violations)
            std::cerr << v.code << ": " << v.message << '\n';
        if (!violations.empty()) return exit_invalid;
        std::cout << config_path << ": ok\n";
        return exit_ok;
    }

    // For run, an unstable dt is a warning, not a refusal: the stepper
    // aborts loudly on its own, and deliberate over-stepping is a
    // legitimate experiment. Everything else stays fatal.
    bool fatal = false;
    for (const Violation& v : violations) {
        const bool warning_only = v.code == "run.dt_unstable";
        std::cerr << (warning_only ? "warning: " : "") << v.code << ": " << v.message << '\n';
        fatal = fatal || !warning_only;
    }
    if (fatal) return exit_invalid;

    const fs::path out_dir = sc.run.out_dir;
    std::error_code ec;
    if (fs::exists(out_dir, ec) && !fs::is_empty(out_dir, ec) && !force) {
        std::cerr << "output directory '" << out_dir.string()
                  << "' exists and is not empty; pass --force to write into it\n";
        return exit_runtime;
    }

    try {
        RunReport rep = run(sc);
        write_run_outputs(rep, sc, out_dir);
        std::cout << "termination: " << to_string(rep.status) << "  steps: " << rep.steps_done
                  << "  t: " << format_double(rep.final_t) << "  wall: "
                  << format_double(rep.wall_seconds) << " s\n";
        for (std::size_t s = 0; s < rep.events.sources.size(); ++s) {
            const SourceEvents& ev = rep.events.sources[s];
            std::cout << "food source " << s << ": formation " << describe(ev.formation_time)
                      << ", depletion " << describe(ev.depletion_time) << ", fade "
                      << describe(ev.fade_time) << '\n';
        }
        std::cout << "outputs in " << out_dir.string() << '\n';
        if (rep.status == RunStatus::Error) {
            std::cerr << rep.error << '\n';
            return exit_runtime;
        }
        return exit_ok;
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return exit_runtime;
    }
}

} // namespace antsim
