#include "dvote/protocol.hpp"

#include <ostream>
#include <stdexcept>

namespace dvote {

const char* protocol_name(Protocol p) {
    switch (p) {
        case Protocol::push: return "push";
        case Protocol::pull: return "pull";
        case Protocol::oblivious: return "oblivious";
    }
    return "?";
}

Protocol protocol_from_name(const std::string& name) {
    if (name == "push") return Protocol::push;
    if (name == "pull") return Protocol::pull;
    if (name == "oblivious") return Protocol::oblivious;
    throw std::invalid_argument("unknown protocol: " + name);
}

std::vector<double> step_distribution(const Configuration& c, Protocol p) {
    if (c.at_consensus()) throw std::domain_error("step_distribution: consensus configuration");
    const Graph& g = c.graph();
    std::vector<double> prob(g.vertex_count(), 0.0);

    switch (p) {
        case Protocol::push: {
            // Active vertex v uniform on D; the flipped vertex is a uniform
            // discordant neighbour of v.
            double inv_d = 1.0 / c.discordant_vertex_count();
            for (int v : c.discordant_vertices()) {
                double w = inv_d / c.discordant_degree(v);
                Opinion ov = c.opinion(v);
                for (int u : g.neighbors(v))
                    if (c.opinion(u) != ov) prob[u] += w;
            }
            break;
        }
        case Protocol::pull: {
            // The active vertex flips itself: all its discordant neighbours
            // hold the opposite opinion.
            double inv_d = 1.0 / c.discordant_vertex_count();
            for (int v : c.discordant_vertices()) prob[v] += inv_d;
            break;
        }
        case Protocol::oblivious: {
            double w = 0.5 / c.discordant_edge_count();
            for (int e : c.discordant_edges()) {
                auto [u, v] = g.edge(e);
                prob[u] += w;
                prob[v] += w;
            }
            break;
        }
    }
    return prob;
}

StepOutcome step(Configuration& c, Protocol p, Rng& rng) {
    if (c.at_consensus()) throw std::domain_error("step: consensus configuration");
    const Graph& g = c.graph();
    StepOutcome out{-1, -1, -1};

    if (p == Protocol::oblivious) {
        int e = c.discordant_edge_at(
            static_cast<int>(rng.below(static_cast<std::uint32_t>(c.discordant_edge_count()))));
        auto [u, v] = g.edge(e);
        if (rng.coin()) std::swap(u, v);
        out.active_edge = e;
        out.active_vertex = u;  // the pushing endpoint
        out.change_vertex = v;
    } else {
        int v = c.discordant_vertex_at(
            static_cast<int>(rng.below(static_cast<std::uint32_t>(c.discordant_vertex_count()))));
        int pick = static_cast<int>(rng.below(static_cast<std::uint32_t>(c.discordant_degree(v))));
        int u = -1;
        Opinion ov = c.opinion(v);
        for (int w : g.neighbors(v)) {
            if (c.opinion(w) != ov && pick-- == 0) {
                u = w;
                break;
            }
        }
        out.active_vertex = v;
        out.change_vertex = (p == Protocol::push) ? u : v;
    }
    c.flip(out.change_vertex);
    return out;
}

TrialResult run_to_consensus(Configuration c, Protocol p, Rng rng, std::uint64_t cutoff,
                             std::ostream* trace) {
    if (cutoff == 0) throw std::invalid_argument("run_to_consensus: cutoff must be positive");
    TrialResult result;
    result.seed = rng.seed();
    while (!c.at_consensus()) {
        if (result.steps >= cutoff) {
            result.censored = true;
            return result;
        }
        StepOutcome o = step(c, p, rng);
        if (trace)
            (*trace) << result.steps << ' ' << o.active_vertex << ' ' << o.change_vertex << ' '
                     << c.discordant_edge_count() << '\n';
        ++result.steps;
    }
    result.winner = c.opinion(0);
    return result;
}

}  // namespace dvote
