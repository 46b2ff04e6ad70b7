#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "fou/matrix.hpp"
#include "fou/model.hpp"
#include "fou/types.hpp"

namespace fou {

struct ExperimentConfig {
    ModelParams params;
    std::vector<double> horizons;   // strictly increasing
    std::size_t n_steps = 0;        // 0 = default rule per horizon
    std::size_t replications = 1;
    std::uint64_t master_seed = 0;
    int threads = 0;                // 0 = hardware concurrency
};

// One simulate -> estimate run. Scaled errors follow the component rates:
// T^{1-H} for coefficients with nonzero unit integral, sqrt(T) for
// zero-integral coefficients, e^{alpha T} for the mean-reversion error.
struct ReplicationRecord {
    std::size_t rep = 0;
    double T = 0.0;
    std::uint64_t seed_stream = 0;
    std::vector<double> theta_hat;
    std::vector<double> scaled;  // p entries
    double scaled_alpha = 0.0;
    double D = 0.0;
    double gamma = 0.0;
    bool failed = false;
};

std::vector<ReplicationRecord> run_experiment(const ExperimentConfig& cfg);

struct KSReport {
    double statistic = 0.0;
    std::size_t n = 0;
    double p_value = 0.0;
};

KSReport ks_test(std::vector<double> sample,
                 const std::function<double(double)>& cdf);

// Sample correlation matrix of the p+1 scaled error components among the
// successful records at horizon T. Needs at least 100 of them.
Matrix cross_rate_correlation(const std::vector<ReplicationRecord>& records, double T);

void write_replication_csv(std::ostream& out,
                           const std::vector<ReplicationRecord>& records,
                           std::size_t p);

// Per-horizon means/variances of the scaled errors, KS reports against the
// limit laws, correlation matrices, and a config echo, as a JSON string.
std::string experiment_summary_json(const ExperimentConfig& cfg,
                                    const std::vector<ReplicationRecord>& records);

}  // namespace fou
