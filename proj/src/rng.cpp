#include "fou/rng.hpp"

#include "fou/special.hpp"

namespace fou {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

}  // namespace

CounterRng::CounterRng(Seed seed)
    : base_(mix64(seed.master ^ mix64(seed.stream + kGolden))) {}

std::uint64_t CounterRng::word_at(std::uint64_t k) const {
    return mix64(base_ + (k + 1) * kGolden);
}

double CounterRng::uniform_at(std::uint64_t k) const {
    return static_cast<double>(word_at(k) >> 11) * 0x1.0p-53 + 0x1.0p-54;
}

double CounterRng::normal_at(std::uint64_t k) const {
    return inverse_normal_cdf(uniform_at(k));
}

}  // namespace fou
