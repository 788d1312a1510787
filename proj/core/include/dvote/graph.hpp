#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dvote {

enum class Family { complete, cycle, star, double_star, barbell };

const char* family_name(Family f);
Family family_from_name(const std::string& name);

// Undirected simple graph with fixed vertex set 0..n-1. Edges are stored once
// as ordered pairs (u < v); adjacency lists are sorted and carry the edge index
// in a parallel array so incident edges can be located in O(deg).
//
// Generated-family labelling:
//   cycle(n)        : vertex i adjacent to (i+1) mod n
//   star(n)         : center 0, leaves 1..n-1
//   double_star(l)  : centers 0 and 1 (joined), leaves of 0 are 2..l+1,
//                     leaves of 1 are l+2..2l+1    (2l+2 vertices total)
//   barbell(c)      : cliques {0..c-1} and {c..2c-1}, bridge edge (0, c)
class Graph {
public:
    Graph() = default;

    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph star(int n);
    static Graph double_star(int leaves_per_side);
    static Graph barbell(int clique_size);

    // size_param is the family's natural size: vertex count for complete,
    // cycle and star; leaves per side for double_star; clique size for barbell.
    static Graph generate(Family f, int size_param);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    // Edge index of the edge (v, neighbors(v)[i]).
    int edge_index_at(int v, int i) const { return adj_edge_[v][i]; }
    const std::pair<int, int>& edge(int e) const { return edges_[e]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool connected() const;

    std::optional<Family> family() const { return family_; }
    int family_param() const { return family_param_; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> adj_edge_;
    std::optional<Family> family_;
    int family_param_ = 0;
};

}  // namespace dvote
