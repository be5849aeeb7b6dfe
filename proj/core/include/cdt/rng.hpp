#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace cdt {

// Deterministic random source. All variate generation is implemented here
// (rather than through std::*_distribution, whose output is implementation
// defined) so that a fixed seed replays bit-identically.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform double in [0, 1), 53 mantissa bits.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Unbiased integer in [0, bound) via rejection sampling.
    std::uint64_t below(std::uint64_t bound);

    // Standard normal via Box-Muller (pairs cached).
    double gaussian();

    // Derives an independent stream seed from a master seed (splitmix64).
    static std::uint64_t derive(std::uint64_t master, std::uint64_t stream);

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// In-place Fisher-Yates shuffle. std::shuffle is implementation defined;
// this one replays identically everywhere.
template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.below(i));
        using std::swap;
        swap(v[i - 1], v[j]);
    }
}

} // namespace cdt
