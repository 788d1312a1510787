#include "dvote/coloring.hpp"

#include <stdexcept>

#include "dvote/rng.hpp"

namespace dvote {

const char* coloring_name(ColoringKind k) {
    switch (k) {
        case ColoringKind::half_arc: return "half_arc";
        case ColoringKind::alternating: return "alternating";
        case ColoringKind::star_bipartite: return "star_bipartite";
        case ColoringKind::clique_bipartite: return "clique_bipartite";
        case ColoringKind::random_balanced: return "random_balanced";
        case ColoringKind::all_but_one: return "all_but_one";
        case ColoringKind::first_r_red: return "first_r_red";
        case ColoringKind::explicit_bits: return "explicit";
    }
    return "?";
}

ColoringKind coloring_from_name(const std::string& name) {
    if (name == "half_arc") return ColoringKind::half_arc;
    if (name == "alternating") return ColoringKind::alternating;
    if (name == "star_bipartite") return ColoringKind::star_bipartite;
    if (name == "clique_bipartite") return ColoringKind::clique_bipartite;
    if (name == "random_balanced") return ColoringKind::random_balanced;
    if (name == "all_but_one") return ColoringKind::all_but_one;
    if (name == "first_r_red") return ColoringKind::first_r_red;
    if (name == "explicit") return ColoringKind::explicit_bits;
    throw std::invalid_argument("unknown coloring: " + name);
}

namespace {

void require_family(const Graph& g, Family f, const char* what) {
    if (!g.family() || *g.family() != f)
        throw std::invalid_argument(std::string(what) + " coloring requires a " +
                                    family_name(f) + " graph");
}

void require_even(int n, const char* what) {
    if (n % 2 != 0)
        throw std::invalid_argument(std::string(what) + " coloring requires even n");
}

}  // namespace

Configuration init_configuration(const Graph& g, const ColoringSpec& spec) {
    int n = g.vertex_count();
    std::vector<Opinion> bits(n, kRed);
    switch (spec.kind) {
        case ColoringKind::half_arc: {
            require_family(g, Family::cycle, "half_arc");
            require_even(n, "half_arc");
            for (int v = n / 2; v < n; ++v) bits[v] = kBlue;
            break;
        }
        case ColoringKind::alternating: {
            require_family(g, Family::cycle, "alternating");
            require_even(n, "alternating");
            for (int v = 0; v < n; ++v) bits[v] = static_cast<Opinion>(v % 2);
            break;
        }
        case ColoringKind::star_bipartite: {
            require_family(g, Family::double_star, "star_bipartite");
            int l = g.family_param();
            bits[0] = kBlue;
            for (int i = 0; i < l; ++i) bits[2 + i] = kBlue;
            // centre 1 and its leaves stay red
            break;
        }
        case ColoringKind::clique_bipartite: {
            require_family(g, Family::barbell, "clique_bipartite");
            int c = g.family_param();
            for (int v = c; v < 2 * c; ++v) bits[v] = kBlue;
            break;
        }
        case ColoringKind::random_balanced: {
            require_even(n, "random_balanced");
            // Partial Fisher-Yates: pick n/2 blue vertices.
            std::vector<int> ids(n);
            for (int i = 0; i < n; ++i) ids[i] = i;
            Rng rng(splitmix64(spec.seed ^ 0x636f6c6f72ULL));
            for (int i = 0; i < n / 2; ++i) {
                int j = i + static_cast<int>(rng.below(static_cast<std::uint32_t>(n - i)));
                std::swap(ids[i], ids[j]);
                bits[ids[i]] = kBlue;
            }
            break;
        }
        case ColoringKind::all_but_one: {
            if (n < 2) throw std::invalid_argument("all_but_one needs n >= 2");
            bits[n - 1] = kBlue;
            break;
        }
        case ColoringKind::first_r_red: {
            int r = spec.red_count < 0 ? n / 2 : spec.red_count;
            if (spec.red_count < 0) require_even(n, "balanced first_r_red");
            if (r < 0 || r > n) throw std::invalid_argument("first_r_red: r out of range");
            for (int v = r; v < n; ++v) bits[v] = kBlue;
            break;
        }
        case ColoringKind::explicit_bits: {
            if (static_cast<int>(spec.bits.size()) != n)
                throw std::invalid_argument("explicit coloring has wrong length");
            bits = spec.bits;
            break;
        }
    }
    return Configuration(g, std::move(bits));
}

}  // namespace dvote
