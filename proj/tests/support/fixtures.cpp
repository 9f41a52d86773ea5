#include "fixtures.hpp"

#include <algorithm>
#include <stdexcept>

namespace confspace::testing {

std::vector<Config> walk(const Graph& g, Config start, const std::vector<std::pair<Vertex, Vertex>>& moves) {
    std::vector<Config> path{start};
    for (const auto& [from, to] : moves) {
        Config& c = start;
        if (!std::binary_search(c.begin(), c.end(), from)) throw std::logic_error("walk: source not occupied");
        if (std::binary_search(c.begin(), c.end(), to)) throw std::logic_error("walk: target occupied");
        if (!g.has_edge(from, to)) throw std::logic_error("walk: not an edge");
        c = insert_vertex(erase_vertex(c, from), to);
        path.push_back(c);
    }
    return path;
}

std::vector<Config> cycle_exchange(const Graph& g, const std::vector<Vertex>& cycle, const Config& on_cycle,
                                   const Config& spectators) {
    const int L = static_cast<int>(cycle.size());
    std::vector<int> pos;
    for (Vertex v : on_cycle) {
        auto it = std::find(cycle.begin(), cycle.end(), v);
        if (it == cycle.end()) throw std::logic_error("cycle_exchange: particle off the cycle");
        pos.push_back(static_cast<int>(it - cycle.begin()));
    }
    std::sort(pos.begin(), pos.end());
    const int k = static_cast<int>(pos.size());
    auto gap = [&](int i) { return ((pos[(i + 1) % k] - pos[i]) % L + L) % L + (k == 1 ? L : 0); };
    int lead = -1;
    for (int i = 0; i < k; ++i)
        if (gap(i) > 1) lead = i;
    if (lead < 0) throw std::logic_error("cycle_exchange: no free vertex on the cycle");

    std::vector<std::pair<Vertex, Vertex>> moves;
    auto advance = [&](int from_pos, int steps) {
        for (int s = 0; s < steps; ++s) moves.push_back({cycle[(from_pos + s) % L], cycle[(from_pos + s + 1) % L]});
    };
    advance(pos[lead], gap(lead) - 1);
    for (int t = 1; t < k; ++t) {
        const int i = ((lead - t) % k + k) % k;
        advance(pos[i], gap(i));
    }
    advance(pos[lead] + gap(lead) - 1, 1);

    Config start = spectators;
    for (Vertex v : on_cycle) start = insert_vertex(start, v);
    auto path = walk(g, start, moves);
    if (path.back() != path.front()) throw std::logic_error("cycle_exchange: path not closed");
    return path;
}

std::vector<Config> y_exchange(const Config& s, Vertex w, Vertex r, Vertex a, Vertex b) {
    auto with = [&](Vertex x, Vertex y) { return insert_vertex(insert_vertex(s, x), y); };
    return {with(r, w), with(r, a), with(w, a), with(a, b), with(w, b), with(r, b), with(r, w)};
}

Graph recursion_lasso(int n) {
    if (n != 3 && n != 4) throw std::invalid_argument("recursion_lasso: n must be 3 or 4");
    std::vector<Edge> edges;
    const int tail = n - 1;  // vertices 0..tail, tail is the attachment point
    for (int v = 0; v < tail; ++v) edges.emplace_back(v, v + 1);
    const int cycle = n + 1;
    for (int i = 0; i < cycle; ++i) {
        const int a = i == 0 ? tail : tail + i, b = i + 1 == cycle ? tail : tail + i + 1;
        edges.emplace_back(a, b);
    }
    return Graph(tail + cycle, edges, "lasso" + std::to_string(n));
}

Graph square_with_pendants() {
    return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {2, 5}}, "square+pendants");
}

Graph triangle_with_tail() { return Graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}}, "triangle+tail"); }

Graph square_with_arms() {
    return Graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {2, 6}, {6, 7}}, "square+arms");
}

Graph cut_pair_example() {
    return Graph(8, {{0, 3}, {3, 2}, {2, 7}, {3, 7}, {7, 1}, {0, 4}, {4, 5}, {5, 6}, {4, 6}, {6, 1}, {0, 1}},
                 "cut-pair");
}

Drawing labelled_tree_drawing(const std::vector<Vertex>& perm) {
    // label - 1 ids; ascending neighbor order is the clockwise order of the drawing
    const std::vector<Edge> tree{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5},  {5, 6},
                                 {6, 7}, {2, 8}, {8, 9}, {9, 10}, {10, 11}, {9, 12}};
    const std::vector<Edge> dashed{{0, 12}, {7, 11}};
    const int V = 13;
    if (static_cast<int>(perm.size()) != V) throw std::invalid_argument("perm size");
    std::vector<Edge> edges;
    for (const Edge& e : tree) edges.emplace_back(perm[e.u], perm[e.v]);
    for (const Edge& e : dashed) edges.emplace_back(perm[e.u], perm[e.v]);
    Drawing d;
    d.graph = Graph(V, edges, "labelled-tree");
    const Graph plain(V, [&] {
        std::vector<Edge> all = tree;
        all.insert(all.end(), dashed.begin(), dashed.end());
        return all;
    }());
    d.embedding.assign(V, {});
    for (Vertex v = 0; v < V; ++v) {
        for (Vertex w : plain.neighbors(v)) d.embedding[perm[v]].push_back(perm[w]);
    }
    for (const Edge& e : dashed) d.deleted.emplace_back(perm[e.u], perm[e.v]);
    d.vertex_by_label.push_back(-1);
    for (Vertex v = 0; v < V; ++v) d.vertex_by_label.push_back(perm[v]);
    d.root = perm[0];
    return d;
}

Rational random_phase(std::mt19937_64& rng, int max_denominator) {
    std::uniform_int_distribution<int> den(1, max_denominator), num(-3 * max_denominator, 3 * max_denominator);
    return Rational(num(rng), den(rng));
}

GaugePotential random_topological(const CellComplex& c, std::mt19937_64& rng) {
    const HomologyPresentation h(c, true);
    const AbelianGroup group = h.group();
    std::vector<Rational> free, torsion;
    for (int i = 0; i < group.rank; ++i) free.push_back(random_phase(rng));
    std::uniform_int_distribution<int> small(0, 5), shift(-2, 2);
    for (const Integer& d : group.torsion) torsion.push_back(Rational(Integer(small(rng)), d));
    const auto x = h.cocycle(free, torsion);

    std::vector<Rational> gauge(c.cells0().size());
    for (auto& v : gauge) v = random_phase(rng, 7);
    GaugePotential p = potential_from_values(c, x);
    for (const Cell1& cell : c.cells1()) {
        const int head = *c.index_of(Cell0{insert_vertex(cell.spectators, cell.edge.v)});
        const int tail = *c.index_of(Cell0{insert_vertex(cell.spectators, cell.edge.u)});
        p.set(cell, p.value(cell) + gauge[head] - gauge[tail] + shift(rng));
    }
    return p;
}

}  // namespace confspace::testing
