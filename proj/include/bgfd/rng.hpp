#pragma once

#include <cstdint>
#include <random>

#include "bgfd/tensor.hpp"

namespace bgfd {

// Deterministic generator. mt19937_64 is fully specified by the standard and
// all transforms below are explicit formulas, so a given seed yields the same
// stream on every platform (std::*_distribution would not guarantee that).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform() {
        return double(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    // Inclusive integer range, unbiased via rejection.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    // Standard normal via Box-Muller (two uniforms per draw, no cached state).
    double normal();

    double normal(double mu, double sigma) { return mu + sigma * normal(); }

private:
    std::mt19937_64 gen_;
};

// splitmix64-based seed derivation; mixes the base seed with a word sequence
// so independent streams can be derived from (seed, tag...) tuples.
std::uint64_t mix_seed(std::uint64_t base, std::initializer_list<std::uint64_t> words);

Tensor4 random_uniform(Shape4 shape, double lo, double hi, Rng& rng);
Tensor4 random_normal(Shape4 shape, double mu, double sigma, Rng& rng);

} // namespace bgfd
