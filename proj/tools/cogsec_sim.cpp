// cogsec-sim: command-line front end for the cognitive-radio physical-layer
// security simulator. Emits CSV/JSON sweep data, diversity-order fits, and
// analytic-vs-simulation verification reports.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cogsec/analytic.hpp"
#include "cogsec/io.hpp"
#include "cogsec/montecarlo.hpp"
#include "cogsec/verify.hpp"

namespace {

using cogsec::Scheme;
using cogsec::SystemConfig;

constexpr std::uint64_t kDefaultInterceptTrials = 1'000'000;
constexpr std::uint64_t kDefaultSecrecyTrials = 200'000;

cogsec::mc::RunOptions run_options_from_env() {
    cogsec::mc::RunOptions options;
    if (const char* env = std::getenv("COGSEC_THREADS")) {
        options.threads = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    }
    return options;
}

std::vector<double> parse_mer_grid(const std::string& spec) {
    double start = 0.0, stop = 0.0, step = 0.0;
    char c1 = 0, c2 = 0;
    std::istringstream ss(spec);
    if (!(ss >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' ||
        !(ss >> std::ws).eof()) {
        throw cogsec::ConfigError("--mer-db must be start:stop:step, got '" + spec +
                                  "'");
    }
    if (step <= 0.0) throw cogsec::ConfigError("--mer-db step must be > 0");
    if (start > stop) throw cogsec::ConfigError("--mer-db start must be <= stop");
    std::vector<double> grid;
    for (double v = start; v <= stop + 1e-9; v += step) grid.push_back(v);
    return grid;
}

std::vector<Scheme> parse_schemes(const std::string& spec) {
    std::vector<Scheme> schemes;
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
        auto s = cogsec::scheme_from_name(token);
        if (!s) throw cogsec::ConfigError("unknown scheme '" + token + "'");
        schemes.push_back(*s);
    }
    if (schemes.empty()) throw cogsec::ConfigError("--schemes must be nonempty");
    return schemes;
}

struct CommonArgs {
    std::string config_path;
    std::string preset_name;
    std::string out_path;
    std::string format = "csv";
    std::string mer_db = "0:30:5";
    std::string schemes = "proposed,traditional,an";
    std::uint64_t trials = 0;  // 0 = per-command default
    std::uint64_t seed = 20131101;
    bool dry_run = false;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool needs_out) {
    cmd->add_option("--config", args.config_path, "scenario config file");
    cmd->add_option("--preset", args.preset_name,
                    "built-in scenario (fig2, fig3, fig4, fig5, fig6)");
    auto* out = cmd->add_option("--out", args.out_path, "output file path");
    if (needs_out) out->required();
    cmd->add_option("--format", args.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--trials", args.trials, "Monte Carlo trials per point");
    cmd->add_option("--seed", args.seed, "master seed");
    cmd->add_option("--mer-db", args.mer_db, "MER grid in dB as start:stop:step");
    cmd->add_option("--schemes", args.schemes,
                    "comma-separated subset of proposed,traditional,an");
    cmd->add_flag("--dry-run", args.dry_run, "print the resolved grid, write nothing");
}

SystemConfig resolve_config(const CommonArgs& args) {
    if (!args.preset_name.empty() && !args.config_path.empty()) {
        throw cogsec::ConfigError("--config and --preset are mutually exclusive");
    }
    if (!args.preset_name.empty()) {
        auto cfg = cogsec::io::preset_config(args.preset_name);
        if (!cfg) throw cogsec::ConfigError("unknown preset: " + args.preset_name);
        return *cfg;
    }
    if (!args.config_path.empty()) return cogsec::io::load_config(args.config_path);
    throw cogsec::ConfigError("one of --config or --preset is required");
}

cogsec::io::OutputFormat resolve_format(const CommonArgs& args) {
    return args.format == "json" ? cogsec::io::OutputFormat::Json
                                 : cogsec::io::OutputFormat::Csv;
}

int run_sweep_command(const CommonArgs& args, cogsec::mc::Metric metric) {
    const SystemConfig config = resolve_config(args);
    const auto grid = parse_mer_grid(args.mer_db);
    const auto schemes = parse_schemes(args.schemes);
    const std::uint64_t trials =
        args.trials ? args.trials
                    : (metric == cogsec::mc::Metric::InterceptProbability
                           ? kDefaultInterceptTrials
                           : kDefaultSecrecyTrials);

    if (args.dry_run) {
        std::cout << "schemes:";
        for (Scheme s : schemes) std::cout << ' ' << cogsec::scheme_name(s);
        std::cout << "\nmer_db:";
        for (double v : grid) std::cout << ' ' << cogsec::io::format_double(v);
        std::cout << "\ntrials: " << trials << "\nseed: " << args.seed << '\n';
        return 0;
    }

    const auto rows = cogsec::mc::run_sweep(config, schemes, grid, {metric}, trials,
                                            args.seed, run_options_from_env());
    cogsec::io::write_rows(args.out_path, resolve_format(args), rows);
    return 0;
}

int run_diversity_command(const CommonArgs& args) {
    const SystemConfig base = resolve_config(args);
    const auto grid = parse_mer_grid(args.mer_db);
    if (grid.size() < 3) throw cogsec::ConfigError("need >= 3 points");

    std::vector<std::pair<double, double>> points;
    for (double db : grid) {
        SystemConfig cfg = base;
        cfg.lambda_me = std::pow(10.0, db / 10.0);
        points.emplace_back(cfg.lambda_me, cogsec::analytic::intercept_proposed_closed(cfg));
    }
    const auto fit = cogsec::analytic::diversity_fit(points);

    nlohmann::json obj;
    obj["slope"] = fit.slope;
    obj["diversity_order"] = fit.diversity_order();
    obj["residual"] = fit.residual;
    obj["mer_grid_db"] = fit.mer_grid_db;
    obj["m_users"] = base.m_users;
    obj["n_eves"] = base.n_eves;

    if (args.dry_run) {
        std::cout << obj.dump(2) << '\n';
        return 0;
    }
    std::ofstream out(args.out_path, std::ios::binary);
    if (!out) throw cogsec::ConfigError("cannot open output file: " + args.out_path);
    out << obj.dump(2) << '\n';
    return 0;
}

int run_verify_command(const CommonArgs& args) {
    const SystemConfig config = resolve_config(args);
    const std::uint64_t trials = args.trials ? args.trials : kDefaultInterceptTrials;
    const auto report =
        cogsec::verify::run_verify(config, trials, args.seed, run_options_from_env());
    cogsec::verify::print_report(std::cout, report);

    if (!args.out_path.empty()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : report.checks) {
            arr.push_back({{"name", c.name},
                           {"analytic", c.analytic},
                           {"estimate", c.estimate},
                           {"std_error", c.std_error},
                           {"z", c.z},
                           {"pass", c.pass}});
        }
        std::ofstream out(args.out_path, std::ios::binary);
        if (!out) throw cogsec::ConfigError("cannot open output file: " + args.out_path);
        out << arr.dump(2) << '\n';
    }
    return report.all_pass() ? 0 : 2;
}

int run_preset_command(const CommonArgs& args) {
    if (args.preset_name.empty()) {
        throw cogsec::ConfigError("preset command requires --preset");
    }
    const std::string text = cogsec::io::preset_file_text(args.preset_name);
    if (args.out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(args.out_path, std::ios::binary);
    if (!out) throw cogsec::ConfigError("cannot open output file: " + args.out_path);
    out << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cognitive-radio physical-layer security simulator"};
    app.require_subcommand(1);

    CommonArgs sweep_secrecy_args, sweep_intercept_args, diversity_args, verify_args,
        preset_args;

    auto* sweep_secrecy =
        app.add_subcommand("sweep-secrecy", "ergodic secrecy rate over an MER grid");
    add_common(sweep_secrecy, sweep_secrecy_args, /*needs_out=*/false);
    auto* sweep_intercept =
        app.add_subcommand("sweep-intercept", "intercept probability over an MER grid");
    add_common(sweep_intercept, sweep_intercept_args, /*needs_out=*/false);
    auto* diversity = app.add_subcommand(
        "diversity", "closed-form diversity-order fit over an MER grid");
    add_common(diversity, diversity_args, /*needs_out=*/false);
    auto* verify = app.add_subcommand(
        "verify", "cross-validate closed forms against Monte Carlo");
    add_common(verify, verify_args, /*needs_out=*/false);
    auto* preset = app.add_subcommand("preset", "write a built-in scenario file");
    add_common(preset, preset_args, /*needs_out=*/false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sweep_secrecy->parsed()) {
            if (!sweep_secrecy_args.dry_run && sweep_secrecy_args.out_path.empty()) {
                throw cogsec::ConfigError("--out is required unless --dry-run");
            }
            return run_sweep_command(sweep_secrecy_args,
                                     cogsec::mc::Metric::ErgodicSecrecyRate);
        }
        if (sweep_intercept->parsed()) {
            if (!sweep_intercept_args.dry_run && sweep_intercept_args.out_path.empty()) {
                throw cogsec::ConfigError("--out is required unless --dry-run");
            }
            return run_sweep_command(sweep_intercept_args,
                                     cogsec::mc::Metric::InterceptProbability);
        }
        if (diversity->parsed()) {
            if (!diversity_args.dry_run && diversity_args.out_path.empty()) {
                throw cogsec::ConfigError("--out is required unless --dry-run");
            }
            return run_diversity_command(diversity_args);
        }
        if (verify->parsed()) return run_verify_command(verify_args);
        if (preset->parsed()) return run_preset_command(preset_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
