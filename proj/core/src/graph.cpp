#include "confspace/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace confspace {

Graph::Graph(int vertex_count, std::vector<Edge> edges, std::string name)
    : n_(vertex_count), edges_(std::move(edges)), adj_(vertex_count), name_(std::move(name)) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    for (const Edge& e : edges_) {
        if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v >= n_)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ")");
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

int Graph::multiplicity(Vertex u, Vertex v) const {
    const auto& a = adj_[u];
    auto [lo, hi] = std::equal_range(a.begin(), a.end(), v);
    return static_cast<int>(hi - lo);
}

bool Graph::is_simple() const {
    for (const auto& a : adj_)
        if (std::adjacent_find(a.begin(), a.end()) != a.end()) return false;
    return true;
}

bool Graph::is_connected() const {
    if (n_ == 0) return true;
    int count = 0;
    components_without(*this, {}, &count);
    return count == 1;
}

std::vector<int> components_without(const Graph& g, const std::vector<Vertex>& removed, int* count) {
    std::vector<int> comp(g.vertex_count(), -2);
    for (Vertex r : removed) comp[r] = -1;
    int c = 0;
    std::deque<Vertex> queue;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (comp[s] != -2) continue;
        comp[s] = c;
        queue.push_back(s);
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop_front();
            for (Vertex y : g.neighbors(x))
                if (comp[y] == -2) {
                    comp[y] = c;
                    queue.push_back(y);
                }
        }
        ++c;
    }
    if (count) *count = c;
    return comp;
}

int betti1(const Graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("graph not connected");
    return g.edge_count() - g.vertex_count() + 1;
}

std::set<Vertex> essential_vertices(const Graph& g) {
    std::set<Vertex> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 2) out.insert(v);
    return out;
}

namespace {

// Length of the shortest cycle through edge index ei, or -1.
int shortest_cycle_through(const Graph& g, int ei) {
    const Edge e = g.edges()[ei];
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<Vertex> queue{e.u};
    dist[e.u] = 0;
    bool skipped = false;
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        for (Vertex y : g.neighbors(x)) {
            // skip exactly one copy of the edge itself
            if (x == e.u && y == e.v && !skipped) {
                skipped = true;
                continue;
            }
            if (dist[y] >= 0) continue;
            dist[y] = dist[x] + 1;
            if (y == e.v) return dist[y] + 1;
            queue.push_back(y);
        }
    }
    return -1;
}

bool chains_long_enough(const Graph& g, int n) {
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (g.degree(s) == 2) continue;
        for (Vertex first : g.neighbors(s)) {
            Vertex prev = s, cur = first;
            int len = 1;
            while (g.degree(cur) == 2 && cur != s) {
                const auto& nb = g.neighbors(cur);
                Vertex next = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = next;
                ++len;
            }
            if (cur != s && len < n - 1) return false;
        }
    }
    return true;
}

}  // namespace

bool is_sufficiently_subdivided(const Graph& g, int n) {
    if (!chains_long_enough(g, n)) return false;
    for (int i = 0; i < g.edge_count(); ++i) {
        int len = shortest_cycle_through(g, i);
        if (len >= 0 && len < n + 1) return false;
    }
    return true;
}

Subdivision subdivide_edge(const Graph& g, int edge_index, int count) {
    std::vector<Edge> edges;
    std::vector<int> prov;
    int next = g.vertex_count();
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge e = g.edges()[i];
        if (i != edge_index || count == 0) {
            edges.push_back(e);
            prov.push_back(i);
            continue;
        }
        Vertex prev = e.u;
        for (int k = 0; k < count; ++k) {
            edges.emplace_back(prev, next);
            prov.push_back(i);
            prev = next++;
        }
        edges.emplace_back(prev, e.v);
        prov.push_back(i);
    }
    return {Graph(next, std::move(edges), g.name()), std::move(prov)};
}

Subdivision sufficiently_subdivide(const Graph& g, int n) {
    std::vector<int> identity(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) identity[i] = i;
    if (is_sufficiently_subdivided(g, n)) return {g, identity};

    const int inserts = std::max(0, n - 2);
    std::vector<Edge> edges;
    std::vector<int> prov;
    int next = g.vertex_count();
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge e = g.edges()[i];
        Vertex prev = e.u;
        for (int k = 0; k < inserts; ++k) {
            edges.emplace_back(prev, next);
            prov.push_back(i);
            prev = next++;
        }
        edges.emplace_back(prev, e.v);
        prov.push_back(i);
    }
    Subdivision out{Graph(next, std::move(edges), g.name()), std::move(prov)};

    // patch any cycle that is still short
    for (;;) {
        int bad = -1;
        for (int i = 0; i < out.graph.edge_count() && bad < 0; ++i) {
            int len = shortest_cycle_through(out.graph, i);
            if (len >= 0 && len < n + 1) bad = i;
        }
        if (bad < 0) break;
        Subdivision step = subdivide_edge(out.graph, bad);
        for (int& p : step.provenance) p = out.provenance[p];
        out = std::move(step);
    }
    return out;
}

namespace graphs {

Graph path(int vertices) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < vertices; ++i) e.emplace_back(i, i + 1);
    return Graph(vertices, e, "P" + std::to_string(vertices));
}

Graph cycle(int vertices) {
    std::vector<Edge> e;
    for (int i = 0; i < vertices; ++i) e.emplace_back(i, (i + 1) % vertices);
    return Graph(vertices, e, "C" + std::to_string(vertices));
}

Graph complete(int vertices) {
    std::vector<Edge> e;
    for (int i = 0; i < vertices; ++i)
        for (int j = i + 1; j < vertices; ++j) e.emplace_back(i, j);
    return Graph(vertices, e, "K" + std::to_string(vertices));
}

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph(a + b, e, "K" + std::to_string(a) + "," + std::to_string(b));
}

Graph star(int arms, int segments) {
    std::vector<Edge> e;
    int next = 1;
    for (int a = 0; a < arms; ++a) {
        Vertex prev = 0;
        for (int s = 0; s < segments; ++s) {
            e.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph(next, e, "S" + std::to_string(arms));
}

Graph wheel(int rim) {
    std::vector<Edge> e;
    for (int i = 1; i <= rim; ++i) e.emplace_back(0, i);
    for (int i = 1; i <= rim; ++i) e.emplace_back(i, i % rim + 1);
    return Graph(rim + 1, e, "W" + std::to_string(rim));
}

Graph octahedron() {
    std::vector<Edge> e;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (j != i + 3) e.emplace_back(i, j);
    return Graph(6, e, "octahedron");
}

Graph prism() {
    return Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}}, "prism");
}

Graph lasso() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}}, "lasso"); }

Graph y_graph() { return Graph(4, {{0, 1}, {1, 2}, {1, 3}}, "Y"); }

Graph theta(int branch_length) {
    std::vector<Edge> e;
    int next = 2;
    for (int b = 0; b < 3; ++b) {
        Vertex prev = 0;
        for (int s = 0; s + 1 < branch_length; ++s) {
            e.emplace_back(prev, next);
            prev = next++;
        }
        e.emplace_back(prev, 1);
    }
    return Graph(next, e, "theta");
}

Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, e, "petersen");
}

}  // namespace graphs

}  // namespace confspace
