#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fou/asymptotics.hpp"
#include "fou/estimator.hpp"
#include "fou/io.hpp"
#include "fou/mc.hpp"
#include "fou/model.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct CommonOptions {
    std::string config_path;
    std::string out_dir;
    std::string path_csv;
    std::uint64_t seed = 0;
    bool seed_given = false;
    int threads = 0;
};

std::filesystem::path ensure_output_dir(const fou::RunConfig& cfg,
                                        const CommonOptions& opts) {
    const std::string dir = opts.out_dir.empty() ? cfg.output_dir : opts.out_dir;
    std::filesystem::path path(dir);
    std::error_code ec;
    std::filesystem::create_directories(path, ec);
    if (ec) {
        throw fou::config_error("cannot create output directory: " + dir);
    }
    return path;
}

fou::RunConfig load_config(const CommonOptions& opts) {
    fou::RunConfig cfg = fou::parse_config_file(opts.config_path);
    if (opts.seed_given) {
        cfg.seed = opts.seed;
        cfg.present.insert("seed");
    }
    return cfg;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) {
        throw fou::config_error("cannot open output file: " + path.string());
    }
    out << text;
}

int cmd_simulate(const CommonOptions& opts) {
    fou::RunConfig cfg = load_config(opts);
    fou::ModelParams params = fou::params_from_config(cfg);
    if (!cfg.has("T")) {
        throw fou::config_error("config key 'T' is required for simulate");
    }
    if (!(cfg.T > 0.0)) {
        throw fou::config_error("config key 'T' must be > 0");
    }
    const std::size_t n_steps =
        cfg.n_steps > 0 ? cfg.n_steps : fou::default_n_steps(cfg.T);
    const fou::SimulatedPair pair =
        fou::simulate(params, cfg.T, n_steps, fou::Seed{cfg.seed, 0});

    const std::filesystem::path dir = ensure_output_dir(cfg, opts);
    const std::filesystem::path file = dir / "path.csv";
    std::ofstream out(file);
    if (!out) {
        throw fou::config_error("cannot open output file: " + file.string());
    }
    fou::write_path_csv(out, pair);
    std::cout << file.string() << "\n";
    return kExitOk;
}

int cmd_estimate(const CommonOptions& opts) {
    fou::RunConfig cfg = load_config(opts);
    const fou::PeriodicBasis basis = fou::basis_from_config(cfg);
    const fou::SimulatedPair pair = fou::read_path_csv(opts.path_csv);
    const fou::EstimateResult result = fou::estimate(pair.X, basis);
    std::cout << fou::estimate_result_json(result) << "\n";
    return kExitOk;
}

int cmd_limits(const CommonOptions& opts) {
    fou::RunConfig cfg = load_config(opts);
    for (const char* key : {"hurst", "alpha", "mu"}) {
        if (!cfg.has(key)) {
            throw fou::config_error(std::string("config key '") + key +
                                    "' is required");
        }
    }
    // Limit laws extend to the classical boundary H = 1/2, unlike simulation.
    if (!(cfg.hurst >= 0.5 && cfg.hurst < 1.0)) {
        throw fou::config_error("hurst must lie in [0.5, 1) for limit laws");
    }
    if (cfg.alpha <= 0.0) {
        throw fou::config_error("non-ergodic case requires alpha > 0");
    }
    if (cfg.sigma < 0.0) {
        throw fou::config_error("sigma must be >= 0");
    }
    fou::ModelParams params;
    params.hurst = cfg.hurst;
    params.alpha = cfg.alpha;
    params.sigma = cfg.sigma;
    params.x0 = cfg.x0;
    params.drift.basis = fou::basis_from_config(cfg);
    params.drift.mu = cfg.mu;
    if (params.drift.mu.size() !=
        static_cast<std::size_t>(params.drift.basis.size())) {
        throw fou::config_error(
            "config key 'mu' has " + std::to_string(params.drift.mu.size()) +
            " entries but the basis has " +
            std::to_string(params.drift.basis.size()));
    }

    const fou::RatioLimit ratio = fou::ratio_limit_params(params);
    const fou::GaussianLimit gaussian =
        fou::limit_cov_matrix(params.drift.basis, params.sigma);
    const fou::MeanVar xi = fou::xi_infty_mean_var(params);

    nlohmann::json cov_rows = nlohmann::json::array();
    for (std::size_t i = 0; i < gaussian.cov.rows; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < gaussian.cov.cols; ++j) {
            row.push_back(gaussian.cov(i, j));
        }
        cov_rows.push_back(row);
    }
    nlohmann::json root;
    root["ratio"] = {{"alpha", ratio.alpha}, {"m", ratio.m}};
    root["gaussian"] = {{"scale", gaussian.scale}, {"cov", cov_rows}};
    root["xi_infty"] = {{"mean", xi.mean}, {"var", xi.var}};
    std::cout << root.dump(2) << "\n";
    return kExitOk;
}

int cmd_mc(const CommonOptions& opts) {
    fou::RunConfig cfg = load_config(opts);
    fou::ExperimentConfig experiment = fou::experiment_from_config(cfg);
    experiment.threads = opts.threads;

    const std::vector<fou::ReplicationRecord> records = fou::run_experiment(experiment);
    const std::filesystem::path dir = ensure_output_dir(cfg, opts);

    const std::filesystem::path csv_file = dir / "replications.csv";
    std::ofstream csv(csv_file);
    if (!csv) {
        throw fou::config_error("cannot open output file: " + csv_file.string());
    }
    fou::write_replication_csv(csv, records, experiment.params.drift.mu.size());

    const std::filesystem::path json_file = dir / "summary.json";
    write_text_file(json_file, fou::experiment_summary_json(experiment, records) + "\n");

    std::cout << csv_file.string() << "\n" << json_file.string() << "\n";
    return kExitOk;
}

std::string phi_label(const fou::PeriodicBasis& basis, int i) {
    if (basis.is_fourier()) {
        if (i == 0) {
            return "const";
        }
        if (i % 2 == 1) {
            return "sin_" + std::to_string((i + 1) / 2);
        }
        return "cos_" + std::to_string(i / 2);
    }
    return "phi_" + std::to_string(i + 1);
}

int cmd_variance_check(const CommonOptions& opts) {
    fou::RunConfig cfg = load_config(opts);
    const fou::PeriodicBasis basis = fou::basis_from_config(cfg);

    std::vector<double> hurst_values;
    if (cfg.has("hurst_values")) {
        hurst_values = cfg.hurst_values;
    } else if (cfg.has("hurst")) {
        hurst_values = {cfg.hurst};
    } else {
        throw fou::config_error(
            "one of config keys 'hurst_values' or 'hurst' is required for "
            "variance-check");
    }
    for (double h : hurst_values) {
        if (!(h > 0.5 && h < 1.0)) {
            throw fou::config_error("hurst values must lie in (0.5, 1)");
        }
    }
    std::vector<int> elements;
    for (int i = 0; i < basis.size(); ++i) {
        if (std::abs(basis.unit_integrals()[static_cast<std::size_t>(i)]) <= 1e-8) {
            elements.push_back(i);
        }
    }
    if (elements.empty()) {
        throw fou::config_error("basis has no zero-integral elements to check");
    }

    char buffer[64];
    std::string csv =
        "H,phi_id,by_series,by_integral,by_oracle_n128,convention_factor,max_rel_dev\n";
    for (double h : hurst_values) {
        for (int i : elements) {
            const fou::ZeroIntegralVariance v = fou::zero_integral_variance(basis, i, h);
            std::snprintf(buffer, sizeof(buffer), "%.17g", h);
            csv += buffer;
            csv += ',' + phi_label(basis, i);
            for (double value : {v.resolved_series(), v.resolved_integral(), v.by_oracle,
                                 v.convention_factor, v.max_rel_dev()}) {
                std::snprintf(buffer, sizeof(buffer), ",%.17g", value);
                csv += buffer;
            }
            csv += '\n';
        }
    }

    const std::filesystem::path dir = ensure_output_dir(cfg, opts);
    const std::filesystem::path file = dir / "variance_check.csv";
    write_text_file(file, csv);
    std::cout << csv;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "fou: simulation and least-squares inference for fractionally driven "
        "Ornstein-Uhlenbeck models with periodic mean (non-ergodic regime)"};
    app.require_subcommand(1);
    app.footer(std::string("\n") + fou::kConfigKeyHelp);

    CommonOptions opts;

    CLI::App* simulate =
        app.add_subcommand("simulate", "Sample one path and write path.csv");
    CLI::App* estimate = app.add_subcommand(
        "estimate", "Estimate (mu_1..p, alpha) from a path CSV, JSON to stdout");
    CLI::App* limits = app.add_subcommand(
        "limits", "Print the limit-law parameters for a configuration as JSON");
    CLI::App* mc = app.add_subcommand(
        "mc", "Replicated simulate->estimate experiment; writes CSV and summary JSON");
    CLI::App* variance_check = app.add_subcommand(
        "variance-check",
        "Zero-integral limit variances by series, integral, and oracle routes");

    for (CLI::App* sub : {simulate, estimate, limits, mc, variance_check}) {
        sub->add_option("--config", opts.config_path, "Run configuration file")
            ->required();
    }
    for (CLI::App* sub : {simulate, mc, variance_check}) {
        sub->add_option("--out", opts.out_dir,
                        "Output directory (overrides config output_dir)");
    }
    for (CLI::App* sub : {simulate, mc}) {
        sub->add_option("--seed", opts.seed, "Master seed (overrides config)")
            ->each([&opts](const std::string&) { opts.seed_given = true; });
    }
    mc->add_option("--threads", opts.threads, "Worker threads for mc (0 = auto)");
    estimate->add_option("--path", opts.path_csv, "Input path CSV (t,X[,B])")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);
        }
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (simulate->parsed()) {
            return cmd_simulate(opts);
        }
        if (estimate->parsed()) {
            return cmd_estimate(opts);
        }
        if (limits->parsed()) {
            return cmd_limits(opts);
        }
        if (mc->parsed()) {
            return cmd_mc(opts);
        }
        if (variance_check->parsed()) {
            return cmd_variance_check(opts);
        }
    } catch (const fou::config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const fou::singular_matrix_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitConfig;
}
