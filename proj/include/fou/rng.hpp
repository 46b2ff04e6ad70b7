#pragma once

#include <cstdint>

#include "fou/types.hpp"

namespace fou {

// Counter-based generator built on the SplitMix64 finalizer. Every variate
// is a pure function of (seed, index), which keeps replicated experiments
// bit-reproducible under any thread scheduling.
class CounterRng {
public:
    explicit CounterRng(Seed seed);

    std::uint64_t word_at(std::uint64_t k) const;
    double uniform_at(std::uint64_t k) const;  // strictly inside (0,1)
    double normal_at(std::uint64_t k) const;   // inverse-CDF transform

    double next_uniform() { return uniform_at(counter_++); }
    double next_normal() { return normal_at(counter_++); }

private:
    std::uint64_t base_;
    std::uint64_t counter_ = 0;
};

}  // namespace fou
