#include "dvote/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dvote {

void write_graph(std::ostream& out, const Graph& g, const std::vector<Opinion>* opinions) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    if (opinions) {
        if (static_cast<int>(opinions->size()) != g.vertex_count())
            throw std::invalid_argument("write_graph: opinion vector size mismatch");
        for (Opinion o : *opinions) out << (o == kBlue ? '1' : '0');
        out << '\n';
    }
}

LoadedGraph read_graph(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("graph file: missing 'n m' header");
    if (n < 1 || m < 0) throw std::invalid_argument("graph file: bad header values");
    std::vector<std::pair<int, int>> edges(m);
    for (int e = 0; e < m; ++e) {
        if (!(in >> edges[e].first >> edges[e].second))
            throw std::invalid_argument("graph file: truncated edge list");
    }
    LoadedGraph out{Graph::from_edges(n, std::move(edges)), std::nullopt};

    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::string bits;
        for (char ch : line)
            if (!isspace(static_cast<unsigned char>(ch))) bits.push_back(ch);
        if (static_cast<int>(bits.size()) != n)
            throw std::invalid_argument("graph file: opinion bitstring has wrong length");
        std::vector<Opinion> ops(n);
        for (int v = 0; v < n; ++v) {
            if (bits[v] != '0' && bits[v] != '1')
                throw std::invalid_argument("graph file: opinion bitstring must be 0/1");
            ops[v] = static_cast<Opinion>(bits[v] - '0');
        }
        out.opinions = std::move(ops);
        break;
    }
    return out;
}

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "family,protocol,n,trials,mean,std,ci95,censored,normalized\n";
    for (const SweepRow& r : rows) {
        out << family_name(r.family) << ',' << protocol_name(r.protocol) << ',' << r.n << ','
            << r.stats.trials << ',' << format_number(r.stats.mean) << ','
            << format_number(r.stats.std_dev) << ',' << format_number(r.stats.ci95_halfwidth)
            << ',' << r.stats.censored << ',' << format_number(r.normalized) << '\n';
    }
}

void write_sweep_json(std::ostream& out, const std::vector<SweepRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const SweepRow& r : rows) {
        nlohmann::ordered_json row;
        row["family"] = family_name(r.family);
        row["protocol"] = protocol_name(r.protocol);
        row["n"] = r.n;
        row["trials"] = r.stats.trials;
        row["mean"] = format_number(r.stats.mean);
        row["std"] = format_number(r.stats.std_dev);
        row["ci95"] = format_number(r.stats.ci95_halfwidth);
        row["censored"] = r.stats.censored;
        row["normalized"] = format_number(r.normalized);
        if (!r.error.empty()) row["error"] = r.error;
        arr.push_back(std::move(row));
    }
    out << arr.dump(2) << '\n';
}

}  // namespace dvote
