#include "dvote/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace dvote {

const char* family_name(Family f) {
    switch (f) {
        case Family::complete: return "complete";
        case Family::cycle: return "cycle";
        case Family::star: return "star";
        case Family::double_star: return "double_star";
        case Family::barbell: return "barbell";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "complete") return Family::complete;
    if (name == "cycle") return Family::cycle;
    if (name == "star") return Family::star;
    if (name == "double_star") return Family::double_star;
    if (name == "barbell") return Family::barbell;
    throw std::invalid_argument("unknown family: " + name);
}

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    Graph g;
    g.n_ = n;
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    g.edges_ = std::move(edges);
    g.adj_.assign(n, {});
    g.adj_edge_.assign(n, {});
    for (int e = 0; e < static_cast<int>(g.edges_.size()); ++e) {
        auto [u, v] = g.edges_[e];
        g.adj_[u].push_back(v);
        g.adj_edge_[u].push_back(e);
        g.adj_[v].push_back(u);
        g.adj_edge_[v].push_back(e);
    }
    // Sort each adjacency list together with its edge-index companion.
    for (int v = 0; v < n; ++v) {
        std::vector<int> order(g.adj_[v].size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return g.adj_[v][a] < g.adj_[v][b]; });
        std::vector<int> na(order.size()), ne(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            na[i] = g.adj_[v][order[i]];
            ne[i] = g.adj_edge_[v][order[i]];
        }
        g.adj_[v] = std::move(na);
        g.adj_edge_[v] = std::move(ne);
    }
    return g;
}

Graph Graph::complete(int n) {
    if (n < 2) throw std::invalid_argument("complete graph needs n >= 2");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    Graph g = from_edges(n, std::move(edges));
    g.family_ = Family::complete;
    g.family_param_ = n;
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n);
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    Graph g = from_edges(n, std::move(edges));
    g.family_ = Family::cycle;
    g.family_param_ = n;
    return g;
}

Graph Graph::star(int n) {
    if (n < 2) throw std::invalid_argument("star needs n >= 2");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    Graph g = from_edges(n, std::move(edges));
    g.family_ = Family::star;
    g.family_param_ = n;
    return g;
}

Graph Graph::double_star(int leaves_per_side) {
    if (leaves_per_side < 1) throw std::invalid_argument("double star needs >= 1 leaf per side");
    int l = leaves_per_side;
    int n = 2 * l + 2;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    edges.emplace_back(0, 1);
    for (int i = 0; i < l; ++i) edges.emplace_back(0, 2 + i);
    for (int i = 0; i < l; ++i) edges.emplace_back(1, 2 + l + i);
    Graph g = from_edges(n, std::move(edges));
    g.family_ = Family::double_star;
    g.family_param_ = l;
    return g;
}

Graph Graph::barbell(int clique_size) {
    if (clique_size < 2) throw std::invalid_argument("barbell needs clique size >= 2");
    int c = clique_size;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < c; ++u)
        for (int v = u + 1; v < c; ++v) edges.emplace_back(u, v);
    for (int u = c; u < 2 * c; ++u)
        for (int v = u + 1; v < 2 * c; ++v) edges.emplace_back(u, v);
    edges.emplace_back(0, c);
    Graph g = from_edges(2 * c, std::move(edges));
    g.family_ = Family::barbell;
    g.family_param_ = c;
    return g;
}

Graph Graph::generate(Family f, int size_param) {
    switch (f) {
        case Family::complete: return complete(size_param);
        case Family::cycle: return cycle(size_param);
        case Family::star: return star(size_param);
        case Family::double_star: return double_star(size_param);
        case Family::barbell: return barbell(size_param);
    }
    throw std::invalid_argument("unknown family");
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::connected() const {
    if (n_ == 0) return false;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj_[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++visited;
                stack.push_back(u);
            }
        }
    }
    return visited == n_;
}

}  // namespace dvote
