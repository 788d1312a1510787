#include "dvote/configuration.hpp"

#include <stdexcept>

namespace dvote {

Configuration::Configuration(const Graph& g, std::vector<Opinion> opinions)
    : graph_(&g), opinions_(std::move(opinions)) {
    if (static_cast<int>(opinions_.size()) != g.vertex_count())
        throw std::invalid_argument("opinion vector size does not match graph");
    for (Opinion o : opinions_)
        if (o > 1) throw std::invalid_argument("opinions must be 0 or 1");

    int n = g.vertex_count();
    int m = g.edge_count();
    k_pos_.assign(m, -1);
    d_pos_.assign(n, -1);
    dd_.assign(n, 0);
    red_count_ = 0;
    for (int v = 0; v < n; ++v)
        if (opinions_[v] == kRed) ++red_count_;
    for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edge(e);
        if (opinions_[u] != opinions_[v]) {
            insert_edge(e);
            if (dd_[u]++ == 0) insert_vertex(u);
            if (dd_[v]++ == 0) insert_vertex(v);
        }
    }
}

void Configuration::flip(int v) {
    if (v < 0 || v >= vertex_count()) throw std::invalid_argument("flip: bad vertex id");
    Opinion old = opinions_[v];
    opinions_[v] = static_cast<Opinion>(1 - old);
    red_count_ += (old == kRed) ? -1 : 1;

    const auto& nbrs = graph_->neighbors(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        int u = nbrs[i];
        int e = graph_->edge_index_at(v, static_cast<int>(i));
        if (opinions_[u] == old) {
            // edge was concordant, now discordant
            insert_edge(e);
            if (dd_[u]++ == 0) insert_vertex(u);
            ++dd_[v];
        } else {
            erase_edge(e);
            if (--dd_[u] == 0) erase_vertex(u);
            --dd_[v];
        }
    }
    if (dd_[v] > 0 && d_pos_[v] < 0) insert_vertex(v);
    if (dd_[v] == 0 && d_pos_[v] >= 0) erase_vertex(v);
}

std::uint64_t Configuration::opinion_key() const {
    if (vertex_count() > 64) throw std::domain_error("opinion_key: n > 64");
    std::uint64_t key = 0;
    for (int v = 0; v < vertex_count(); ++v)
        if (opinions_[v] == kBlue) key |= (std::uint64_t{1} << v);
    return key;
}

void Configuration::insert_edge(int e) {
    k_pos_[e] = static_cast<int>(k_items_.size());
    k_items_.push_back(e);
}

void Configuration::erase_edge(int e) {
    int p = k_pos_[e];
    int last = k_items_.back();
    k_items_[p] = last;
    k_pos_[last] = p;
    k_items_.pop_back();
    k_pos_[e] = -1;
}

void Configuration::insert_vertex(int v) {
    d_pos_[v] = static_cast<int>(d_items_.size());
    d_items_.push_back(v);
}

void Configuration::erase_vertex(int v) {
    int p = d_pos_[v];
    int last = d_items_.back();
    d_items_[p] = last;
    d_pos_[last] = p;
    d_items_.pop_back();
    d_pos_[v] = -1;
}

}  // namespace dvote
