#pragma once

#include <cstdint>
#include <vector>

#include "confspace/graph.hpp"

namespace confspace::testing {

// All connected simple graphs on exactly `vertices` vertices, one per isomorphism class.
std::vector<Graph> connected_graphs(int vertices);

// Connected simple graphs: random spanning tree plus each remaining pair with probability p.
std::vector<Graph> random_connected_graphs(int count, int min_vertices, int max_vertices, double p,
                                           std::uint64_t seed);

Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

}  // namespace confspace::testing
