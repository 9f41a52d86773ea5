#pragma once

#include <random>
#include <utility>
#include <vector>

#include "confspace/configspace.hpp"
#include "confspace/gauge.hpp"
#include "confspace/spanning.hpp"

namespace confspace::testing {

// Applies the moves in turn; throws if a move leaves the graph or hits an occupied vertex.
std::vector<Config> walk(const Graph& g, Config start, const std::vector<std::pair<Vertex, Vertex>>& moves);

// Closed path: the particles on `cycle` (vertices in cyclic order) each advance to the next
// occupied position; `spectators` stay put.
std::vector<Config> cycle_exchange(const Graph& g, const std::vector<Vertex>& cycle, const Config& on_cycle,
                                   const Config& spectators);

// Closed path exchanging the particles at r and w through the center w:
// {r,w} -> {r,a} -> {w,a} -> {a,b} -> {w,b} -> {r,b} -> {r,w}, spectators fixed.
std::vector<Config> y_exchange(const Config& spectators, Vertex w, Vertex r, Vertex a, Vertex b);

// Lasso subdivided for n = 3 or 4 particles: tail 0..n-2 then a cycle of n+1 vertices.
Graph recursion_lasso(int n);
// Square 0-1-2-3 with pendant 4 at 0 and pendant 5 at 2.
Graph square_with_pendants();
// Triangle 0-1-2 with the path 0-3-4.
Graph triangle_with_tail();
// Square 0-1-2-3 with arms 0-4-5 and 2-6-7.
Graph square_with_arms();
// Cut pair {0, 1}: a direct edge and two branches, each carrying a triangle.
Graph cut_pair_example();

struct Drawing {
    Graph graph;
    Embedding embedding;
    std::vector<Edge> deleted;
    std::vector<Vertex> vertex_by_label;  // label 1.. -> vertex
    Vertex root;
};
// The 13-vertex subdivided graph with its planar drawing, vertex ids scrambled by `perm`.
Drawing labelled_tree_drawing(const std::vector<Vertex>& perm);

// Random topological potential: a random cohomology class, a random gauge transform and
// random integer shifts.
GaugePotential random_topological(const CellComplex& c, std::mt19937_64& rng);
Rational random_phase(std::mt19937_64& rng, int max_denominator = 12);

}  // namespace confspace::testing
