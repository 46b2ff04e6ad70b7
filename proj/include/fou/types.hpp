#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fou {

// Replication-addressable seed: (master, stream) maps to an independent
// generator state as a pure function, so parallel runs are reproducible.
struct Seed {
    std::uint64_t master = 0;
    std::uint64_t stream = 0;
};

// Process values observed on a uniform time grid t0, t0+dt, ...
struct SamplePath {
    double t0 = 0.0;
    double dt = 0.0;
    std::vector<double> values;

    std::size_t n_nodes() const { return values.size(); }
    bool empty() const { return values.empty(); }
    double time(std::size_t k) const { return t0 + dt * static_cast<double>(k); }
    double duration() const {
        return values.size() < 2 ? 0.0 : dt * static_cast<double>(values.size() - 1);
    }
};

// Hurst index domain checks. Sampling allows H in (0,1); the inference
// layer is restricted to the long-memory regime H in (0.5,1).
void check_hurst(double hurst);
void check_hurst_inference(double hurst);

}  // namespace fou
