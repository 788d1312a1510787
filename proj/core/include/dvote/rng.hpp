#pragma once

#include <cstdint>
#include <random>

namespace dvote {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seedable mt19937_64 stream with hand-rolled bounded sampling, so results are
// bit-reproducible across standard libraries. Trial streams are derived from
// (master seed, trial index).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    static Rng for_trial(std::uint64_t master_seed, std::uint64_t trial_index) {
        return Rng(splitmix64(splitmix64(master_seed) ^ splitmix64(trial_index + 1)));
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, bound), bound >= 1. Masked rejection keeps it unbiased.
    std::uint32_t below(std::uint32_t bound) {
        if (bound <= 1) return 0;
        std::uint32_t mask = ~std::uint32_t{0} >> __builtin_clz((bound - 1) | 1);
        for (;;) {
            std::uint32_t v = static_cast<std::uint32_t>(gen_()) & mask;
            if (v < bound) return v;
        }
    }

    // Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    bool coin() { return (gen_() >> 63) != 0; }

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

}  // namespace dvote
