#pragma once

#include <string>
#include <vector>

#include "confspace/graph.hpp"
#include "confspace/homology.hpp"

namespace confspace {

enum class ComponentKind { topological_cycle, planar_3_connected, nonplanar_3_connected };

std::string to_string(ComponentKind k);

struct MarkedComponent {
    Graph graph;                       // local ids 0..k-1, may carry parallel edges
    std::vector<Vertex> vertices;      // local id -> vertex id of the input graph
    ComponentKind kind;
    std::vector<Edge> virtual_edges;   // in input ids
};

// A cut vertex (one vertex, nu = degree) or a cut pair (two vertices, nu = 0).
struct CutRecord {
    std::vector<Vertex> vertices;
    int mu = 0;
    int nu = 0;

    bool is_vertex() const { return vertices.size() == 1; }
    bool operator==(const CutRecord&) const = default;
};

std::vector<CutRecord> cut_vertices(const Graph& g);

// Every vertex pair whose deletion disconnects g. mu counts the components left after the
// deletion plus the edges joining the pair directly. Throws if g is not 2-connected.
std::vector<CutRecord> two_separations(const Graph& g);

int connectivity_level(const Graph& g);

bool is_planar(const Graph& g);

enum class CutOrder { smallest_first, largest_first };

struct Decomposition {
    std::vector<MarkedComponent> components;
    std::vector<CutRecord> cuts;  // vertex cuts first, then pairs in the order applied
    int discarded_bridges = 0;
};

Decomposition decompose(const Graph& g, CutOrder order = CutOrder::smallest_first);

Integer n2_of_cut(int mu);
Integer n1_of_cut(int mu, int nu, int n);

struct Prediction {
    int beta1 = 0;
    Integer n1 = 0;
    Integer n2 = 0;
    int n3 = 0;
    int n3_prime = 0;
    int n3_doubleprime = 0;
    int n_particles = 0;
    AbelianGroup group;
};

Prediction predict_h1(const Graph& g, int n);
Prediction predict_h1(const Decomposition& d, const Graph& g, int n);

}  // namespace confspace
