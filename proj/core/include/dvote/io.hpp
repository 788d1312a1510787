#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dvote/configuration.hpp"
#include "dvote/graph.hpp"
#include "dvote/mc.hpp"

namespace dvote {

// Line-based text format:
//   line 1:        "n m"
//   lines 2..m+1:  "u v", one edge per line
//   optional line: opinions as a bitstring of length n (0 = red, 1 = blue)
void write_graph(std::ostream& out, const Graph& g,
                 const std::vector<Opinion>* opinions = nullptr);

struct LoadedGraph {
    Graph graph;
    std::optional<std::vector<Opinion>> opinions;
};
LoadedGraph read_graph(std::istream& in);

// Fixed-format numeric rendering shared by all CSV/JSON emitters, so that
// identical runs produce byte-identical artifacts.
std::string format_number(double x);

// CSV: header "family,protocol,n,trials,mean,std,ci95,censored,normalized".
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
// JSON mirror with the same fields.
void write_sweep_json(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace dvote
