#include "fou/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace fou {

namespace {

const std::set<std::string> kKnownKeys = {
    "hurst",  "alpha",        "sigma", "x0",           "basis",
    "fourier_order", "basis_file",   "mu",    "T",            "horizons",
    "n_steps", "replications", "seed",  "output_dir",   "hurst_values"};

std::string trim(const std::string& s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) {
        ++begin;
    }
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
        --end;
    }
    return s.substr(begin, end - begin);
}

double parse_double(const std::string& value, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(value, &pos);
        if (pos != value.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return x;
    } catch (const std::exception&) {
        throw config_error("config key '" + key + "' has a malformed number: " + value);
    }
}

std::uint64_t parse_unsigned(const std::string& value, const std::string& key) {
    try {
        if (!value.empty() && value[0] == '-') {
            throw std::invalid_argument("negative");
        }
        std::size_t pos = 0;
        const unsigned long long x = std::stoull(value, &pos);
        if (pos != value.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return static_cast<std::uint64_t>(x);
    } catch (const std::exception&) {
        throw config_error("config key '" + key +
                           "' needs a non-negative integer, got: " + value);
    }
}

std::vector<double> parse_double_list(const std::string& value, const std::string& key) {
    std::vector<double> out;
    std::stringstream stream(value);
    std::string token;
    while (std::getline(stream, token, ',')) {
        const std::string item = trim(token);
        if (item.empty()) {
            throw config_error("config key '" + key + "' has an empty list entry");
        }
        out.push_back(parse_double(item, key));
    }
    if (out.empty()) {
        throw config_error("config key '" + key + "' needs at least one value");
    }
    return out;
}

std::string format_double(double x) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", x);
    return std::string(buffer);
}

}  // namespace

const char* const kConfigKeyHelp =
    "Config keys (flat 'key = value' lines, '#' starts a comment):\n"
    "  hurst          Hurst index H, must lie in (0.5, 1)\n"
    "  alpha          mean-reversion coefficient, must be > 0\n"
    "  sigma          noise scale, >= 0 (default 1)\n"
    "  x0             initial value X_0 (default 0)\n"
    "  basis          'fourier' or 'custom' (default 'fourier')\n"
    "  fourier_order  highest Fourier frequency; basis size p = 1 + 2*order\n"
    "  basis_file     CSV of tabulated basis functions (required when basis = custom)\n"
    "  mu             comma-separated drift coefficients mu_1..mu_p\n"
    "  T              single horizon (simulate; mc treats it as one horizon)\n"
    "  horizons       comma-separated strictly increasing horizons (mc)\n"
    "  n_steps        grid steps per path (default max(4096, ceil(256 T)))\n"
    "  replications   Monte Carlo replications per horizon (default 1)\n"
    "  seed           master seed, unsigned 64-bit (default 0)\n"
    "  output_dir     directory for output files (default '.')\n"
    "  hurst_values   comma-separated H values (variance-check)\n";

RunConfig parse_config_text(const std::string& text, const std::string& origin) {
    RunConfig cfg;
    std::stringstream stream(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        const std::string content = trim(line);
        if (content.empty()) {
            continue;
        }
        const std::size_t eq = content.find('=');
        if (eq == std::string::npos) {
            throw config_error(origin + ":" + std::to_string(line_no) +
                               ": expected 'key = value', got: " + content);
        }
        const std::string key = trim(content.substr(0, eq));
        const std::string value = trim(content.substr(eq + 1));
        if (key.empty()) {
            throw config_error(origin + ":" + std::to_string(line_no) +
                               ": missing key before '='");
        }
        if (kKnownKeys.count(key) == 0) {
            throw config_error(origin + ":" + std::to_string(line_no) +
                               ": unknown config key '" + key + "'");
        }
        if (cfg.present.count(key) != 0) {
            throw config_error(origin + ":" + std::to_string(line_no) +
                               ": duplicate config key '" + key + "'");
        }
        if (value.empty()) {
            throw config_error(origin + ":" + std::to_string(line_no) +
                               ": empty value for config key '" + key + "'");
        }
        if (key == "hurst") {
            cfg.hurst = parse_double(value, key);
        } else if (key == "alpha") {
            cfg.alpha = parse_double(value, key);
        } else if (key == "sigma") {
            cfg.sigma = parse_double(value, key);
        } else if (key == "x0") {
            cfg.x0 = parse_double(value, key);
        } else if (key == "basis") {
            cfg.basis = value;
        } else if (key == "fourier_order") {
            cfg.fourier_order = static_cast<int>(parse_unsigned(value, key));
        } else if (key == "basis_file") {
            cfg.basis_file = value;
        } else if (key == "mu") {
            cfg.mu = parse_double_list(value, key);
        } else if (key == "T") {
            cfg.T = parse_double(value, key);
        } else if (key == "horizons") {
            cfg.horizons = parse_double_list(value, key);
        } else if (key == "n_steps") {
            cfg.n_steps = static_cast<std::size_t>(parse_unsigned(value, key));
        } else if (key == "replications") {
            cfg.replications = static_cast<std::size_t>(parse_unsigned(value, key));
        } else if (key == "seed") {
            cfg.seed = parse_unsigned(value, key);
        } else if (key == "output_dir") {
            cfg.output_dir = value;
        } else if (key == "hurst_values") {
            cfg.hurst_values = parse_double_list(value, key);
        }
        cfg.present.insert(key);
    }
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw config_error("cannot open config file: " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str(), path);
}

PeriodicBasis basis_from_config(const RunConfig& cfg) {
    if (cfg.basis == "fourier") {
        if (cfg.has("basis_file")) {
            throw config_error("config key 'basis_file' requires basis = custom");
        }
        if (!cfg.has("fourier_order")) {
            throw config_error("config key 'fourier_order' is required for basis = fourier");
        }
        return PeriodicBasis::fourier(cfg.fourier_order);
    }
    if (cfg.basis == "custom") {
        if (!cfg.has("basis_file")) {
            throw config_error("config key 'basis_file' is required for basis = custom");
        }
        return load_custom_basis_csv(cfg.basis_file);
    }
    throw config_error("config key 'basis' must be 'fourier' or 'custom', got: " +
                       cfg.basis);
}

ModelParams params_from_config(const RunConfig& cfg) {
    if (!cfg.has("hurst")) {
        throw config_error("config key 'hurst' is required");
    }
    if (!cfg.has("alpha")) {
        throw config_error("config key 'alpha' is required");
    }
    if (!cfg.has("mu")) {
        throw config_error("config key 'mu' is required");
    }
    if (!(cfg.hurst > 0.5 && cfg.hurst < 1.0)) {
        throw config_error("hurst must lie in (0.5, 1)");
    }
    if (cfg.alpha <= 0.0) {
        throw config_error("non-ergodic case requires alpha > 0");
    }
    if (cfg.sigma < 0.0) {
        throw config_error("sigma must be >= 0");
    }
    ModelParams params;
    params.hurst = cfg.hurst;
    params.alpha = cfg.alpha;
    params.sigma = cfg.sigma;
    params.x0 = cfg.x0;
    params.drift.basis = basis_from_config(cfg);
    params.drift.mu = cfg.mu;
    if (params.drift.mu.size() != static_cast<std::size_t>(params.drift.basis.size())) {
        throw config_error(
            "config key 'mu' has " + std::to_string(params.drift.mu.size()) +
            " entries but the basis has " + std::to_string(params.drift.basis.size()));
    }
    return params;
}

ExperimentConfig experiment_from_config(const RunConfig& cfg) {
    ExperimentConfig exp;
    exp.params = params_from_config(cfg);
    if (cfg.has("horizons") && cfg.has("T")) {
        throw config_error("config keys 'T' and 'horizons' are mutually exclusive");
    }
    if (cfg.has("horizons")) {
        exp.horizons = cfg.horizons;
    } else if (cfg.has("T")) {
        exp.horizons = {cfg.T};
    } else {
        throw config_error("one of config keys 'T' or 'horizons' is required");
    }
    for (std::size_t h = 0; h < exp.horizons.size(); ++h) {
        if (!(exp.horizons[h] > 0.0)) {
            throw config_error("horizons must be > 0");
        }
        if (h > 0 && !(exp.horizons[h] > exp.horizons[h - 1])) {
            throw config_error("horizons must be strictly increasing");
        }
    }
    if (cfg.replications < 1) {
        throw config_error("replications must be >= 1");
    }
    exp.n_steps = cfg.n_steps;
    exp.replications = cfg.replications;
    exp.master_seed = cfg.seed;
    return exp;
}

PeriodicBasis load_custom_basis_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw config_error("cannot open basis file: " + path);
    }
    std::vector<double> nodes;
    std::vector<std::vector<double>> columns;
    std::string line;
    std::size_t line_no = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string content = trim(line);
        if (content.empty()) {
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream stream(content);
        std::string token;
        while (std::getline(stream, token, ',')) {
            fields.push_back(trim(token));
        }
        if (fields.size() < 2) {
            throw config_error(path + ":" + std::to_string(line_no) +
                               ": basis rows need a node and at least one value");
        }
        if (!saw_header && nodes.empty()) {
            // A non-numeric first field marks an optional header row.
            try {
                std::size_t pos = 0;
                (void)std::stod(fields[0], &pos);
                if (pos != fields[0].size()) {
                    throw std::invalid_argument("trailing");
                }
            } catch (const std::exception&) {
                saw_header = true;
                continue;
            }
        }
        if (columns.empty()) {
            columns.resize(fields.size() - 1);
        } else if (fields.size() - 1 != columns.size()) {
            throw config_error(path + ":" + std::to_string(line_no) +
                               ": inconsistent column count");
        }
        nodes.push_back(parse_double(fields[0], "basis node"));
        for (std::size_t c = 0; c + 1 < fields.size(); ++c) {
            columns[c].push_back(parse_double(fields[c + 1], "basis value"));
        }
    }
    if (nodes.size() < 3) {
        throw config_error(path + ": basis table needs at least 3 rows");
    }
    const std::size_t m = nodes.size();
    if (std::abs(nodes.front()) > 1e-12 || std::abs(nodes.back() - 1.0) > 1e-12) {
        throw config_error(path + ": basis nodes must span [0, 1] inclusive");
    }
    const double dt = 1.0 / static_cast<double>(m - 1);
    for (std::size_t k = 0; k < m; ++k) {
        const double expected = static_cast<double>(k) * dt;
        if (std::abs(nodes[k] - expected) > 1e-9) {
            throw config_error(path + ": basis nodes must form a uniform grid on [0, 1]");
        }
    }
    return PeriodicBasis::custom(columns);
}

void write_path_csv(std::ostream& out, const SimulatedPair& pair) {
    out << "t,X,B\n";
    for (std::size_t k = 0; k < pair.X.n_nodes(); ++k) {
        out << format_double(pair.X.time(k)) << ',' << format_double(pair.X.values[k])
            << ',' << format_double(pair.B.values[k]) << '\n';
    }
}

SimulatedPair read_path_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw config_error("cannot open path file: " + path);
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw config_error(path + ": empty path file");
    }
    const std::string header = trim(line);
    bool has_b = false;
    if (header == "t,X,B") {
        has_b = true;
    } else if (header != "t,X") {
        throw config_error(path + ": expected header 't,X' or 't,X,B', got: " + header);
    }
    std::vector<double> t;
    std::vector<double> x;
    std::vector<double> b;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string content = trim(line);
        if (content.empty()) {
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream stream(content);
        std::string token;
        while (std::getline(stream, token, ',')) {
            fields.push_back(trim(token));
        }
        const std::size_t expected = has_b ? 3 : 2;
        if (fields.size() != expected) {
            throw config_error(path + ":" + std::to_string(line_no) +
                               ": expected " + std::to_string(expected) + " columns");
        }
        t.push_back(parse_double(fields[0], "t"));
        x.push_back(parse_double(fields[1], "X"));
        if (has_b) {
            b.push_back(parse_double(fields[2], "B"));
        }
    }
    if (t.size() < 3) {
        throw config_error(path + ": path needs at least 3 rows");
    }
    const double dt = t[1] - t[0];
    if (!(dt > 0.0)) {
        throw config_error(path + ": time column must be strictly increasing");
    }
    for (std::size_t k = 0; k + 1 < t.size(); ++k) {
        const double step = t[k + 1] - t[k];
        if (std::abs(step - dt) > 1e-9 * std::abs(dt)) {
            throw config_error(path + ": grid must be uniform within 1e-9 relative");
        }
    }
    SimulatedPair pair;
    pair.X.t0 = t.front();
    pair.X.dt = dt;
    pair.X.values = std::move(x);
    if (has_b) {
        pair.B.t0 = t.front();
        pair.B.dt = dt;
        pair.B.values = std::move(b);
    }
    return pair;
}

std::string estimate_result_json(const EstimateResult& result) {
    nlohmann::json root;
    root["theta_hat"] = result.theta_hat;
    root["D"] = result.D;
    root["gamma"] = result.gamma;
    root["Lambda"] = result.Lambda;
    root["n"] = result.n;
    return root.dump(2);
}

}  // namespace fou
