#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fou/estimator.hpp"
#include "fou/mc.hpp"
#include "fou/model.hpp"
#include "fou/periodic_basis.hpp"
#include "fou/types.hpp"

namespace fou {

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flat key = value run configuration. Unknown keys are rejected.
struct RunConfig {
    double hurst = 0.0;
    double alpha = 0.0;
    double sigma = 1.0;
    double x0 = 0.0;
    std::string basis = "fourier";
    int fourier_order = 0;
    std::string basis_file;
    std::vector<double> mu;
    double T = 0.0;
    std::vector<double> horizons;
    std::size_t n_steps = 0;
    std::size_t replications = 1;
    std::uint64_t seed = 0;
    std::string output_dir = ".";
    std::vector<double> hurst_values;  // variance-check only

    std::set<std::string> present;
    bool has(const std::string& key) const { return present.count(key) != 0; }
};

extern const char* const kConfigKeyHelp;

RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text, const std::string& origin);

PeriodicBasis basis_from_config(const RunConfig& cfg);
ModelParams params_from_config(const RunConfig& cfg);
ExperimentConfig experiment_from_config(const RunConfig& cfg);

// Custom basis file: one row per grid node, first column the node position
// on [0,1], remaining columns the basis function values.
PeriodicBasis load_custom_basis_csv(const std::string& path);

void write_path_csv(std::ostream& out, const SimulatedPair& pair);

// Reads a t,X(,B) CSV back into a pair; the grid must be uniform within
// 1e-9 relative.
SimulatedPair read_path_csv(const std::string& path);

std::string estimate_result_json(const EstimateResult& result);

}  // namespace fou
