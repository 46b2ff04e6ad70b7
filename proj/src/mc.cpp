#include "fou/mc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>
#include <vector>

#include "json.hpp"

#include "fou/asymptotics.hpp"
#include "fou/estimator.hpp"
#include "fou/special.hpp"

namespace fou {

namespace {

constexpr double kZeroIntegralTol = 1e-8;

std::string format_double(double x) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", x);
    return std::string(buffer);
}

double signed_exp_scale(double log_factor, double diff) {
    if (diff == 0.0) {
        return 0.0;
    }
    const double magnitude = std::exp(log_factor + std::log(std::abs(diff)));
    return diff > 0.0 ? magnitude : -magnitude;
}

void validate_config(const ExperimentConfig& cfg) {
    validate_params(cfg.params);
    if (cfg.replications < 1) {
        throw std::invalid_argument("replications must be >= 1");
    }
    if (cfg.horizons.empty()) {
        throw std::invalid_argument("at least one horizon is required");
    }
    for (std::size_t h = 0; h < cfg.horizons.size(); ++h) {
        if (!(cfg.horizons[h] > 0.0)) {
            throw std::invalid_argument("horizons must be > 0");
        }
        if (h > 0 && !(cfg.horizons[h] > cfg.horizons[h - 1])) {
            throw std::invalid_argument("horizons must be strictly increasing");
        }
    }
}

struct MeanVarAccumulator {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::size_t count = 0;

    void add(double x) {
        sum += x;
        sum_sq += x * x;
        ++count;
    }
    double mean() const { return count > 0 ? sum / static_cast<double>(count) : 0.0; }
    double variance() const {
        if (count < 2) {
            return 0.0;
        }
        const double n = static_cast<double>(count);
        return (sum_sq - sum * sum / n) / (n - 1.0);
    }
};

}  // namespace

std::vector<ReplicationRecord> run_experiment(const ExperimentConfig& cfg) {
    validate_config(cfg);
    const std::size_t p = cfg.params.drift.mu.size();
    const std::size_t n_horizons = cfg.horizons.size();
    const std::size_t total = n_horizons * cfg.replications;
    const std::vector<double>& unit = cfg.params.drift.basis.unit_integrals();

    std::vector<ReplicationRecord> records(total);

    const auto run_one = [&](std::size_t task) {
        const std::size_t h = task / cfg.replications;
        const std::size_t j = task % cfg.replications;
        const double T = cfg.horizons[h];
        const std::size_t n_steps = cfg.n_steps > 0 ? cfg.n_steps : default_n_steps(T);

        ReplicationRecord rec;
        rec.rep = j;
        rec.T = T;
        rec.seed_stream = static_cast<std::uint64_t>(task);
        rec.theta_hat.assign(p + 1, 0.0);
        rec.scaled.assign(p, 0.0);

        const Seed seed{cfg.master_seed, rec.seed_stream};
        const SimulatedPair pair = simulate(cfg.params, T, n_steps, seed);
        try {
            const EstimateResult est = estimate(pair, cfg.params.drift.basis);
            rec.theta_hat = est.theta_hat;
            rec.D = est.D;
            rec.gamma = est.gamma;
            const double H = cfg.params.hurst;
            for (std::size_t i = 0; i < p; ++i) {
                const double diff = est.theta_hat[i] - cfg.params.drift.mu[i];
                const double rate = std::abs(unit[i]) > kZeroIntegralTol
                                        ? std::pow(T, 1.0 - H)
                                        : std::sqrt(T);
                rec.scaled[i] = rate * diff;
            }
            const double alpha_diff = est.theta_hat[p] - cfg.params.alpha;
            rec.scaled_alpha = signed_exp_scale(cfg.params.alpha * T, alpha_diff);
        } catch (const singular_matrix_error&) {
            rec.failed = true;
            const EstimatorInputs inputs = assemble_inputs(pair, cfg.params.drift.basis);
            rec.D = inputs.D();
            rec.gamma = 0.0;
        }
        records[task] = std::move(rec);
    };

    unsigned n_threads = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                         : std::thread::hardware_concurrency();
    if (n_threads == 0) {
        n_threads = 1;
    }
    n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(total));

    if (n_threads <= 1) {
        for (std::size_t task = 0; task < total; ++task) {
            run_one(task);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        workers.reserve(n_threads);
        for (unsigned w = 0; w < n_threads; ++w) {
            workers.emplace_back([&]() {
                for (std::size_t task = next.fetch_add(1); task < total;
                     task = next.fetch_add(1)) {
                    run_one(task);
                }
            });
        }
        for (auto& worker : workers) {
            worker.join();
        }
    }

    std::size_t n_failed = 0;
    for (const auto& rec : records) {
        if (rec.failed) {
            ++n_failed;
        }
    }
    if (100 * n_failed > total) {
        char buffer[160];
        std::snprintf(buffer, sizeof(buffer),
                      "experiment aborted: %zu of %zu replications hit a singular "
                      "normal matrix, above the 1%% budget",
                      n_failed, total);
        throw std::runtime_error(buffer);
    }
    return records;
}

KSReport ks_test(std::vector<double> sample, const std::function<double(double)>& cdf) {
    if (sample.empty()) {
        throw std::invalid_argument("KS test needs a nonempty sample");
    }
    std::sort(sample.begin(), sample.end());
    const std::size_t n = sample.size();
    const double inv_n = 1.0 / static_cast<double>(n);
    double d_stat = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = cdf(sample[i]);
        const double below = f - static_cast<double>(i) * inv_n;
        const double above = static_cast<double>(i + 1) * inv_n - f;
        d_stat = std::max({d_stat, below, above});
    }
    KSReport report;
    report.statistic = d_stat;
    report.n = n;
    report.p_value = kolmogorov_sf(std::sqrt(static_cast<double>(n)) * d_stat);
    return report;
}

Matrix cross_rate_correlation(const std::vector<ReplicationRecord>& records, double T) {
    std::vector<const ReplicationRecord*> selected;
    for (const auto& rec : records) {
        if (!rec.failed && rec.T == T) {
            selected.push_back(&rec);
        }
    }
    if (selected.size() < 100) {
        throw std::invalid_argument(
            "cross-rate correlation needs at least 100 successful records at the "
            "requested horizon");
    }
    const std::size_t p = selected.front()->scaled.size();
    const std::size_t dim = p + 1;
    const std::size_t n = selected.size();

    std::vector<std::vector<double>> comp(dim, std::vector<double>(n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i < p; ++i) {
            comp[i][r] = selected[r]->scaled[i];
        }
        comp[p][r] = selected[r]->scaled_alpha;
    }
    std::vector<double> mean(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t r = 0; r < n; ++r) {
            mean[i] += comp[i][r];
        }
        mean[i] /= static_cast<double>(n);
    }
    Matrix cov(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i; j < dim; ++j) {
            double acc = 0.0;
            for (std::size_t r = 0; r < n; ++r) {
                acc += (comp[i][r] - mean[i]) * (comp[j][r] - mean[j]);
            }
            cov(i, j) = acc;
            cov(j, i) = acc;
        }
    }
    Matrix corr(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            const double denom = std::sqrt(cov(i, i) * cov(j, j));
            corr(i, j) = denom > 0.0 ? cov(i, j) / denom : 0.0;
        }
    }
    return corr;
}

void write_replication_csv(std::ostream& out,
                           const std::vector<ReplicationRecord>& records,
                           std::size_t p) {
    out << "rep,T,seed_stream";
    for (std::size_t i = 1; i <= p; ++i) {
        out << ",mu_hat_" << i;
    }
    out << ",alpha_hat";
    for (std::size_t i = 1; i <= p; ++i) {
        out << ",scaled_" << i;
    }
    out << ",scaled_alpha,D,gamma,failed\n";
    for (const auto& rec : records) {
        out << rec.rep << ',' << format_double(rec.T) << ',' << rec.seed_stream;
        for (std::size_t i = 0; i <= p; ++i) {
            const double v = i < rec.theta_hat.size() ? rec.theta_hat[i] : 0.0;
            out << ',' << format_double(v);
        }
        for (std::size_t i = 0; i < p; ++i) {
            const double v = i < rec.scaled.size() ? rec.scaled[i] : 0.0;
            out << ',' << format_double(v);
        }
        out << ',' << format_double(rec.scaled_alpha) << ',' << format_double(rec.D)
            << ',' << format_double(rec.gamma) << ',' << (rec.failed ? 1 : 0) << '\n';
    }
}

std::string experiment_summary_json(const ExperimentConfig& cfg,
                                    const std::vector<ReplicationRecord>& records) {
    using nlohmann::json;
    const std::size_t p = cfg.params.drift.mu.size();
    const std::vector<double>& unit = cfg.params.drift.basis.unit_integrals();
    const double sigma = cfg.params.sigma;

    json config;
    config["hurst"] = cfg.params.hurst;
    config["alpha"] = cfg.params.alpha;
    config["sigma"] = sigma;
    config["x0"] = cfg.params.x0;
    config["mu"] = cfg.params.drift.mu;
    config["horizons"] = cfg.horizons;
    config["n_steps"] = cfg.n_steps;
    config["replications"] = cfg.replications;
    config["seed"] = cfg.master_seed;
    config["threads"] = cfg.threads;

    // Limit scales for the KS diagnostics: sigma^2 (int phi_i)^2 for the
    // T^{1-H} components, the resolved series variance for sqrt(T)
    // components, and the Gaussian-ratio law for the alpha component.
    std::vector<double> limit_sd(p, 0.0);
    if (sigma > 0.0) {
        for (std::size_t i = 0; i < p; ++i) {
            if (std::abs(unit[i]) > kZeroIntegralTol) {
                limit_sd[i] = sigma * std::abs(unit[i]);
            } else {
                const double raw = zero_integral_variance_series(
                    cfg.params.drift.basis, static_cast<int>(i), cfg.params.hurst);
                const double resolved =
                    variance_convention_factor(cfg.params.hurst) * raw;
                limit_sd[i] = sigma * std::sqrt(resolved);
            }
        }
    }

    json horizons = json::array();
    for (double T : cfg.horizons) {
        std::vector<const ReplicationRecord*> ok;
        std::size_t n_failed = 0;
        for (const auto& rec : records) {
            if (rec.T != T) {
                continue;
            }
            if (rec.failed) {
                ++n_failed;
            } else {
                ok.push_back(&rec);
            }
        }
        json entry;
        entry["T"] = T;
        entry["n_success"] = ok.size();
        entry["n_failed"] = n_failed;

        json means = json::array();
        json variances = json::array();
        std::vector<MeanVarAccumulator> acc(p + 1);
        for (const auto* rec : ok) {
            for (std::size_t i = 0; i < p; ++i) {
                acc[i].add(rec->scaled[i]);
            }
            acc[p].add(rec->scaled_alpha);
        }
        for (std::size_t i = 0; i <= p; ++i) {
            means.push_back(acc[i].mean());
            variances.push_back(acc[i].variance());
        }
        entry["scaled_means"] = means;
        entry["scaled_variances"] = variances;

        if (sigma > 0.0 && !ok.empty()) {
            json ks = json::array();
            for (std::size_t i = 0; i < p; ++i) {
                std::vector<double> sample;
                sample.reserve(ok.size());
                for (const auto* rec : ok) {
                    sample.push_back(rec->scaled[i]);
                }
                const double sd = limit_sd[i];
                const KSReport rep = ks_test(
                    sample, [sd](double x) { return normal_cdf(x / sd); });
                ks.push_back({{"component", "mu_" + std::to_string(i + 1)},
                              {"statistic", rep.statistic},
                              {"p_value", rep.p_value}});
            }
            std::vector<double> alpha_sample;
            alpha_sample.reserve(ok.size());
            for (const auto* rec : ok) {
                alpha_sample.push_back(rec->scaled_alpha / sigma);
            }
            const RatioLimit law = ratio_limit_params(cfg.params);
            const KSReport rep = ks_test(
                alpha_sample, [&law](double x) { return ratio_cdf(law, x); });
            ks.push_back({{"component", "alpha"},
                          {"statistic", rep.statistic},
                          {"p_value", rep.p_value}});
            entry["ks"] = ks;
        } else {
            entry["ks"] = nullptr;
        }

        if (ok.size() >= 100) {
            const Matrix corr = cross_rate_correlation(records, T);
            json rows = json::array();
            for (std::size_t i = 0; i < corr.rows; ++i) {
                json row = json::array();
                for (std::size_t j = 0; j < corr.cols; ++j) {
                    row.push_back(corr(i, j));
                }
                rows.push_back(row);
            }
            entry["correlation"] = rows;
        } else {
            entry["correlation"] = nullptr;
        }
        horizons.push_back(entry);
    }

    json root;
    root["config"] = config;
    root["horizons"] = horizons;
    return root.dump(2);
}

}  // namespace fou
