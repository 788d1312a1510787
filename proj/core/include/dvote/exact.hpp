#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dvote/bd_chain.hpp"
#include "dvote/configuration.hpp"
#include "dvote/protocol.hpp"

namespace dvote {

// Expected absorption times over the configuration space reachable from a
// start configuration. Transition rows come from step_distribution, so the
// solver and the simulator share one step semantics.
struct BruteForceResult {
    std::vector<std::uint64_t> state_keys;  // opinion bitmasks, index = state id
    std::vector<double> expected_steps;     // 0 for absorbing states
    std::size_t start_index = 0;

    std::size_t state_count() const { return state_keys.size(); }
    double start_value() const { return expected_steps[start_index]; }
    bool contains(std::uint64_t key) const;
    // Expected steps from an arbitrary reachable configuration key; throws if
    // the key was not reached.
    double at(std::uint64_t key) const;
};

inline constexpr int kBruteForceMaxVertices = 16;

// Enumerates the reachable states by BFS and solves (I - Q) h = 1. Dense LU
// below 4000 states, preconditioned iterative solve above. Requires a
// connected graph with at most kBruteForceMaxVertices vertices.
BruteForceResult brute_force_table(const Graph& g, const Configuration& start, Protocol p);
double brute_force_expected_time(const Graph& g, const Configuration& start, Protocol p);

// Exact expected consensus time on K_n from the balanced start, via the
// lumped chain on Y = max(R, B) - n/2. Requires even n >= 4.
double complete_lumped_expected_time(int n, Protocol p);
BigRat complete_lumped_expected_time_exact(int n, Protocol p);  // push/pull only

// Lumped star chain on states (red count, centre colour). Absorbing states
// are (n, red) and (0, blue). Returns the expected consensus time from
// (red_count, center). Requires 2 <= n, 0 <= red_count <= n and a coherent
// pair (center red => red_count >= 1; center blue => red_count <= n-1).
double star_lumped_expected_time(int n, Protocol p, int red_count, Opinion center);

// Expected times for every lumped star state: index r in 0..n gives the state
// with r red vertices; first vector = centre red (valid r >= 1),
// second = centre blue (valid r <= n-1).
struct StarLumpedTable {
    std::vector<double> center_red;
    std::vector<double> center_blue;
};
StarLumpedTable star_lumped_table(int n, Protocol p);

// One-step distribution of the lumped star chain, as (red_count, center,
// probability) triples; used by tests to pin the pseudo-state transitions.
struct StarMove {
    int red_count;
    Opinion center;
    double probability;
};
std::vector<StarMove> star_lumped_moves(int n, Protocol p, int red_count, Opinion center);

}  // namespace dvote
