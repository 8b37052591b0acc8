#include "bgfd/rng.hpp"

#include <cmath>
#include <numbers>

namespace bgfd {

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw ParameterError("uniform_int: empty range");
    const std::uint64_t span = std::uint64_t(hi - lo) + 1;
    if (span == 0) return std::int64_t(gen_()); // full 64-bit range
    const std::uint64_t limit = std::uint64_t(-1) - (std::uint64_t(-1) % span);
    std::uint64_t x;
    do {
        x = gen_();
    } while (x >= limit);
    return lo + std::int64_t(x % span);
}

double Rng::normal() {
    // u1 in (0, 1] so the log never sees zero.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t mix_seed(std::uint64_t base, std::initializer_list<std::uint64_t> words) {
    auto splitmix = [](std::uint64_t& state) {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    std::uint64_t state = base;
    std::uint64_t out = splitmix(state);
    for (std::uint64_t w : words) {
        state ^= w + 0x9e3779b97f4a7c15ULL + (state << 6) + (state >> 2);
        out = splitmix(state);
    }
    return out;
}

Tensor4 random_uniform(Shape4 shape, double lo, double hi, Rng& rng) {
    std::vector<double> data(shape.numel());
    for (double& v : data) v = rng.uniform(lo, hi);
    return Tensor4::from_data(shape, std::move(data));
}

Tensor4 random_normal(Shape4 shape, double mu, double sigma, Rng& rng) {
    std::vector<double> data(shape.numel());
    for (double& v : data) v = rng.normal(mu, sigma);
    return Tensor4::from_data(shape, std::move(data));
}

} // namespace bgfd
