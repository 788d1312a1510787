#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dvote/configuration.hpp"
#include "dvote/graph.hpp"

namespace dvote {

enum class ColoringKind {
    half_arc,          // cycle only: vertices 0..n/2-1 red, rest blue (even n)
    alternating,       // cycle only: opinion(i) = i mod 2 (even n)
    star_bipartite,    // double star only: S1 (center 0 + its leaves) blue, S2 red
    clique_bipartite,  // barbell only: first clique red, second blue
    random_balanced,   // n/2 red vertices chosen by seed (even n)
    all_but_one,       // vertex n-1 blue, all others red
    first_r_red,       // vertices 0..r-1 red, rest blue
    explicit_bits,     // opinions given verbatim
};

const char* coloring_name(ColoringKind k);
ColoringKind coloring_from_name(const std::string& name);

struct ColoringSpec {
    ColoringKind kind = ColoringKind::random_balanced;
    int red_count = -1;           // first_r_red; -1 means n/2
    std::uint64_t seed = 0;       // random_balanced
    std::vector<Opinion> bits;    // explicit_bits

    static ColoringSpec half_arc() { return {ColoringKind::half_arc, -1, 0, {}}; }
    static ColoringSpec alternating() { return {ColoringKind::alternating, -1, 0, {}}; }
    static ColoringSpec star_bipartite() { return {ColoringKind::star_bipartite, -1, 0, {}}; }
    static ColoringSpec clique_bipartite() { return {ColoringKind::clique_bipartite, -1, 0, {}}; }
    static ColoringSpec random_balanced(std::uint64_t seed) {
        return {ColoringKind::random_balanced, -1, seed, {}};
    }
    static ColoringSpec all_but_one() { return {ColoringKind::all_but_one, -1, 0, {}}; }
    static ColoringSpec first_r_red(int r) { return {ColoringKind::first_r_red, r, 0, {}}; }
    static ColoringSpec explicit_bits_of(std::vector<Opinion> bits) {
        return {ColoringKind::explicit_bits, -1, 0, std::move(bits)};
    }
};

// Builds the configuration described by spec, validating compatibility with
// the graph's family (arc/alternating need a cycle, bipartite kinds need the
// matching family, balanced kinds need even n).
Configuration init_configuration(const Graph& g, const ColoringSpec& spec);

}  // namespace dvote
