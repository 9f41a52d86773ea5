#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

namespace confspace {

using Vertex = int;

// Unordered vertex pair, normalized so that u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool touches(Vertex x) const { return u == x || v == x; }
    Vertex other(Vertex x) const { return x == u ? v : u; }

    auto operator<=>(const Edge&) const = default;
};

struct DirectedEdge {
    Vertex from = 0;
    Vertex to = 0;

    auto operator<=>(const DirectedEdge&) const = default;
};

// Finite multigraph without self-loops on vertices 0..vertex_count-1.
// Edge order is preserved; it drives deterministic subdivision.
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, std::vector<Edge> edges, std::string name = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::string& name() const { return name_; }

    // Neighbors with multiplicity, ascending.
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    int multiplicity(Vertex u, Vertex v) const;
    bool has_edge(Vertex u, Vertex v) const { return multiplicity(u, v) > 0; }

    bool is_simple() const;
    bool is_connected() const;

    Graph with_name(std::string name) const { return Graph(n_, edges_, std::move(name)); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::string name_;
};

// E - V + 1. Throws "graph not connected".
int betti1(const Graph& g);

// Vertices of degree != 2.
std::set<Vertex> essential_vertices(const Graph& g);

bool is_sufficiently_subdivided(const Graph& g, int n);

struct Subdivision {
    Graph graph;
    // provenance[i] = index in the original edge list of the edge that new edge i subdivides.
    std::vector<int> provenance;
};

Subdivision sufficiently_subdivide(const Graph& g, int n);

// Replaces edge `edge_index` by a path through `count` new vertices appended at the end.
// The new edges take the place of the old one in the edge list.
Subdivision subdivide_edge(const Graph& g, int edge_index, int count = 1);

// Connected components of g with the listed vertices removed (component id per vertex, -1 for removed).
std::vector<int> components_without(const Graph& g, const std::vector<Vertex>& removed, int* count = nullptr);

namespace graphs {

Graph path(int vertices);
Graph cycle(int vertices);
Graph complete(int vertices);
Graph complete_bipartite(int a, int b);
// Hub 0 and `arms` paths of `segments` edges each.
Graph star(int arms, int segments = 1);
// Hub 0 with rim 1..rim.
Graph wheel(int rim);
Graph octahedron();
Graph prism();
// 0-1, 1-2, 2-3, 1-3: a triangle with a pendant edge at vertex 1.
Graph lasso();
// Center 1, leaves 0, 2, 3.
Graph y_graph();
Graph theta(int branch_length);
Graph petersen();

}  // namespace graphs

}  // namespace confspace
