#pragma once

#include <optional>
#include <string>
#include <vector>

#include "confspace/configspace.hpp"
#include "confspace/homology.hpp"

namespace confspace {

// Cyclic (clockwise) neighbor order per vertex. Empty means ascending neighbor id.
using Embedding = std::vector<std::vector<Vertex>>;

Embedding default_embedding(const Graph& g);

struct RootedOrderedTree {
    Graph graph;
    Embedding embedding;
    Vertex root = 0;
    std::vector<Vertex> parent;                   // -1 at the root
    std::vector<std::vector<Vertex>> children;    // clockwise after the parent
    std::vector<int> label;                       // vertex -> 1..V
    std::vector<Vertex> vertex_of_label;          // label -> vertex, entry 0 unused
    std::vector<Edge> deleted;                    // non-tree edges in graph order

    Config root_configuration(int n) const;
};

// Depth-first tree following the cyclic orders. When `deleted` is given the tree is the graph
// minus those edges instead. Throws if the root does not end up with degree 1 in the tree.
RootedOrderedTree rooted_ordered_tree(const Graph& g, Vertex root, const Embedding& embedding = {},
                                      const std::optional<std::vector<Edge>>& deleted = std::nullopt);

// Smallest vertex whose depth-first tree has root degree 1.
Vertex default_root(const Graph& g, const Embedding& embedding = {});

// Next move of the discrete flow, or nullopt at the root configuration.
std::optional<Move> flow_step(const RootedOrderedTree& t, const Config& config);
// Configurations visited from `config` to the root configuration, both included.
std::vector<Config> flow_path(const RootedOrderedTree& t, const Config& config);

enum class CycleKind { ab, y };

struct GeneratorCycle {
    CycleKind kind;
    std::vector<Config> path;      // closed, based at the root configuration
    CellChain chain;
    std::string provenance;
    Edge deleted_edge;             // AB only
    Vertex center = -1;            // Y only
    std::vector<Vertex> arms;      // Y only: root direction first
    Config spectators;
};

std::vector<GeneratorCycle> spanning_set(const RootedOrderedTree& t, int n);
std::vector<GeneratorCycle> spanning_set(const Graph& g, int n, const Embedding& embedding = {});

struct SpanReport {
    bool spans = false;
    int rank_achieved = 0;
    int rank_total = 0;
    int torsion_total = 0;
    int redundancy = 0;
    AbelianGroup group;
};

SpanReport verify_spanning(const std::vector<GeneratorCycle>& cycles, const CellComplex& c);
SpanReport verify_spanning(const std::vector<GeneratorCycle>& cycles, const HomologyPresentation& h);

}  // namespace confspace
