#pragma once

#include <stdexcept>
#include <string>

#include "confspace/gauge.hpp"
#include "confspace/graph.hpp"

namespace confspace {

// Malformed or rejected input.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// {"vertices": V, "edges": [[u, v], ...], "name": "..."}
// Top-level input must be simple and connected unless `internal` is set.
Graph parse_graph(const std::string& text, bool internal = false);
Graph read_graph_file(const std::string& path, bool internal = false);
std::string write_graph(const Graph& g);

// [{"spectators": [...], "from": u, "to": v, "value": "p/q"}, ...]; unlisted cells are 0.
GaugePotential parse_potential(const std::string& text, const Graph& g, int n);
GaugePotential read_potential_file(const std::string& path, const Graph& g, int n);
// Nonzero cells in canonical orientation and cell order.
std::string write_potential(const GaugePotential& p);

std::string read_text_file(const std::string& path);

}  // namespace confspace
