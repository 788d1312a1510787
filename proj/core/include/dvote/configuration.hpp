#pragma once

#include <cstdint>
#include <vector>

#include "dvote/graph.hpp"

namespace dvote {

// Opinion values: red = 0, blue = 1.
using Opinion = std::uint8_t;
inline constexpr Opinion kRed = 0;
inline constexpr Opinion kBlue = 1;

// A two-opinion configuration on a fixed graph. The discordant edge set K,
// the discordant vertex set D and per-vertex discordant-neighbour counts are
// maintained incrementally: a flip costs O(deg(v)).
//
// The graph must outlive the configuration. Configurations are cheap to copy
// and are copied once per Monte Carlo trial; they are single-writer.
class Configuration {
public:
    Configuration(const Graph& g, std::vector<Opinion> opinions);

    const Graph& graph() const { return *graph_; }
    Opinion opinion(int v) const { return opinions_[v]; }
    const std::vector<Opinion>& opinions() const { return opinions_; }

    // Invert the opinion of v, updating K and D.
    void flip(int v);

    int discordant_edge_count() const { return static_cast<int>(k_items_.size()); }
    int discordant_vertex_count() const { return static_cast<int>(d_items_.size()); }
    int discordant_edge_at(int i) const { return k_items_[i]; }
    int discordant_vertex_at(int i) const { return d_items_[i]; }
    const std::vector<int>& discordant_edges() const { return k_items_; }
    const std::vector<int>& discordant_vertices() const { return d_items_; }
    int discordant_degree(int v) const { return dd_[v]; }
    bool at_consensus() const { return k_items_.empty(); }

    int count(Opinion o) const { return o == kRed ? red_count_ : vertex_count() - red_count_; }
    int vertex_count() const { return static_cast<int>(opinions_.size()); }

    // Opinions packed into a bitmask; requires n <= 64.
    std::uint64_t opinion_key() const;

    bool same_opinions(const Configuration& other) const { return opinions_ == other.opinions_; }

private:
    const Graph* graph_;
    std::vector<Opinion> opinions_;
    int red_count_ = 0;

    // Indexed sets supporting O(1) insert/erase/uniform access.
    std::vector<int> k_items_, k_pos_;
    std::vector<int> d_items_, d_pos_;
    std::vector<int> dd_;

    void insert_edge(int e);
    void erase_edge(int e);
    void insert_vertex(int v);
    void erase_vertex(int v);
};

}  // namespace dvote
