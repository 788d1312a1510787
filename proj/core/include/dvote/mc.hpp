#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dvote/coloring.hpp"
#include "dvote/graph.hpp"
#include "dvote/protocol.hpp"

namespace dvote {

inline constexpr std::uint64_t kDefaultCutoff = 100'000'000;

struct EstimateStats {
    std::uint64_t trials = 0;
    double mean = 0.0;            // over uncensored trials; NaN if all censored
    double std_dev = 0.0;
    double ci95_halfwidth = 0.0;  // 1.96 * std / sqrt(uncensored)
    std::uint64_t censored = 0;
    bool is_lower_bound = false;  // true iff censored > 0
};

// Monte Carlo estimate of the expected consensus time. Trial i uses the RNG
// stream derived from (seed, i); trials run in parallel partitioned by index
// and are aggregated in index order with compensated summation, so the result
// is bit-identical for any thread count. threads == 0 picks a default from
// DVOTE_THREADS or hardware concurrency.
EstimateStats estimate_consensus_time(const Graph& g, const ColoringSpec& spec, Protocol p,
                                      std::uint64_t trials, std::uint64_t seed,
                                      std::uint64_t cutoff = kDefaultCutoff, int threads = 0);

struct Normalizer {
    enum class Kind { none, n_squared, n_log_n, n2_log_n, n_fourth, oblivious_rnr, pow2 };
    Kind kind = Kind::none;
    double pow2_scale = 1.0;  // pow2: value = 2^(n * pow2_scale)

    // The divisor applied to a mean at size n with r initial reds.
    double value(int n, int r) const;
    std::string name() const;

    static Normalizer none() { return {Kind::none, 1.0}; }
    static Normalizer n_squared() { return {Kind::n_squared, 1.0}; }
    static Normalizer n_log_n() { return {Kind::n_log_n, 1.0}; }
    static Normalizer n2_log_n() { return {Kind::n2_log_n, 1.0}; }
    static Normalizer n_fourth() { return {Kind::n_fourth, 1.0}; }
    static Normalizer oblivious_rnr() { return {Kind::oblivious_rnr, 1.0}; }
    static Normalizer pow2(double scale) { return {Kind::pow2, scale}; }
};

struct SweepRow {
    Family family;
    Protocol protocol;
    int n = 0;               // vertex count
    EstimateStats stats;
    double normalized = 0.0; // stats.mean / normalizer
    std::string error;       // non-empty if this row failed
};

// One row per size; sizes are the family's natural size parameter and must be
// ascending. Row failures are recorded, not propagated.
std::vector<SweepRow> sweep(Family f, const ColoringSpec& spec, Protocol p,
                            const std::vector<int>& sizes, std::uint64_t trials,
                            std::uint64_t seed, std::uint64_t cutoff, const Normalizer& norm,
                            int threads = 0);

}  // namespace dvote
