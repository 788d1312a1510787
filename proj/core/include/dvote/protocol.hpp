#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dvote/configuration.hpp"
#include "dvote/rng.hpp"

namespace dvote {

// Update rules for discordant voting. Each step flips exactly one opinion:
//   push      : a uniform discordant vertex v picks a uniform discordant
//               neighbour u; u adopts v's opinion.
//   pull      : as push, but v adopts u's opinion.
//   oblivious : a uniform discordant edge transfers the opinion of a uniformly
//               chosen endpoint to the other one.
enum class Protocol { push, pull, oblivious };

const char* protocol_name(Protocol p);
Protocol protocol_from_name(const std::string& name);

struct StepOutcome {
    int active_vertex;    // chosen discordant vertex (an endpoint for oblivious)
    int change_vertex;    // the vertex whose opinion was inverted
    int active_edge;      // chosen edge index for oblivious, -1 otherwise
};

// Exact probability that each vertex's opinion is inverted at the next step.
// Throws std::domain_error at consensus. The entries sum to 1.
std::vector<double> step_distribution(const Configuration& c, Protocol p);

// Samples one step exactly from step_distribution and applies it to c.
StepOutcome step(Configuration& c, Protocol p, Rng& rng);

struct TrialResult {
    std::uint64_t steps = 0;
    bool censored = false;    // hit the cutoff before consensus
    Opinion winner = kRed;    // meaningful only when !censored
    std::uint64_t seed = 0;   // seed of the RNG stream that produced the trial
};

// Runs until consensus or until cutoff steps have been taken. The
// configuration is taken by value: trials never share state. If trace is
// non-null, writes one line per step: "t active change |K|".
TrialResult run_to_consensus(Configuration c, Protocol p, Rng rng, std::uint64_t cutoff,
                             std::ostream* trace = nullptr);

}  // namespace dvote
