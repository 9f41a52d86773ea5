#include "confspace/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "confspace/star.hpp"

namespace confspace {

std::string to_string(ComponentKind k) {
    switch (k) {
        case ComponentKind::topological_cycle: return "topological-cycle";
        case ComponentKind::planar_3_connected: return "planar-3-connected";
        case ComponentKind::nonplanar_3_connected: return "nonplanar-3-connected";
    }
    return "?";
}

namespace {

int count_without(const Graph& g, const std::vector<Vertex>& removed) {
    int c = 0;
    components_without(g, removed, &c);
    return c;
}

bool has_cut_vertex(const Graph& g) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (count_without(g, {v}) > 1) return true;
    return false;
}

bool has_cut_pair(const Graph& g) {
    for (Vertex x = 0; x < g.vertex_count(); ++x)
        for (Vertex y = x + 1; y < g.vertex_count(); ++y)
            if (count_without(g, {x, y}) > 1) return true;
    return false;
}

// Piece of the input graph during splitting, in input vertex ids.
struct Piece {
    std::vector<Vertex> vertices;  // sorted
    std::vector<Edge> edges;       // may repeat
    std::vector<Edge> virtual_edges;
};

Graph local_graph(const Piece& p, std::map<Vertex, Vertex>& local) {
    local.clear();
    for (std::size_t i = 0; i < p.vertices.size(); ++i) local[p.vertices[i]] = static_cast<Vertex>(i);
    std::vector<Edge> e;
    for (const Edge& x : p.edges) e.emplace_back(local[x.u], local[x.v]);
    return Graph(static_cast<int>(p.vertices.size()), e);
}

// Splits a piece at the listed vertices; each component keeps the cut vertices.
std::vector<Piece> split(const Piece& p, const std::vector<Vertex>& cut) {
    std::map<Vertex, Vertex> local;
    const Graph g = local_graph(p, local);
    std::vector<Vertex> removed;
    for (Vertex v : cut) removed.push_back(local[v]);
    int count = 0;
    const std::vector<int> comp = components_without(g, removed, &count);
    std::vector<Piece> out(count);
    for (std::size_t i = 0; i < p.vertices.size(); ++i)
        if (comp[i] >= 0) out[comp[i]].vertices.push_back(p.vertices[i]);
    auto owner = [&](const Edge& e) {
        int a = comp[local[e.u]], b = comp[local[e.v]];
        return a >= 0 ? a : b;
    };
    for (const Edge& e : p.edges) {
        int o = owner(e);
        if (o >= 0) out[o].edges.push_back(e);
    }
    for (const Edge& e : p.virtual_edges) {
        int o = owner(e);
        if (o >= 0) out[o].virtual_edges.push_back(e);
    }
    for (Piece& q : out) {
        for (Vertex v : cut) q.vertices.push_back(v);
        std::sort(q.vertices.begin(), q.vertices.end());
    }
    return out;
}

// Suppresses degree-2 vertices; returns false if the result has loops or parallel edges.
bool suppressed_simple(const Graph& g, Graph& out) {
    std::vector<Vertex> keep;
    std::vector<int> id(g.vertex_count(), -1);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 2) {
            id[v] = static_cast<int>(keep.size());
            keep.push_back(v);
        }
    // incidence lists so that parallel edges are walked separately
    std::vector<std::vector<int>> inc(g.vertex_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        inc[g.edges()[i].u].push_back(i);
        inc[g.edges()[i].v].push_back(i);
    }
    std::vector<bool> used(g.edge_count(), false);
    std::vector<Edge> edges;
    for (Vertex s : keep)
        for (int start : inc[s]) {
            if (used[start]) continue;
            used[start] = true;
            Vertex cur = g.edges()[start].other(s);
            int via = start;
            while (id[cur] < 0) {
                int next = inc[cur][0] == via ? inc[cur][1] : inc[cur][0];
                used[next] = true;
                via = next;
                cur = g.edges()[next].other(cur);
            }
            if (cur == s) return false;
            edges.emplace_back(id[s], id[cur]);
        }
    out = Graph(static_cast<int>(keep.size()), edges);
    return out.is_simple();
}

MarkedComponent make_component(const Piece& p, ComponentKind kind) {
    std::map<Vertex, Vertex> local;
    MarkedComponent m{local_graph(p, local), p.vertices, kind, p.virtual_edges};
    return m;
}

}  // namespace

std::vector<CutRecord> cut_vertices(const Graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("graph not connected");
    std::vector<CutRecord> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        int mu = count_without(g, {v});
        if (mu > 1) out.push_back({{v}, mu, g.degree(v)});
    }
    return out;
}

std::vector<CutRecord> two_separations(const Graph& g) {
    if (!g.is_connected() || g.vertex_count() < 3 || has_cut_vertex(g))
        throw std::invalid_argument("graph not 2-connected");
    std::vector<CutRecord> out;
    for (Vertex x = 0; x < g.vertex_count(); ++x)
        for (Vertex y = x + 1; y < g.vertex_count(); ++y) {
            int c = count_without(g, {x, y});
            if (c > 1) out.push_back({{x, y}, c + g.multiplicity(x, y), 0});
        }
    return out;
}

int connectivity_level(const Graph& g) {
    if (has_cut_vertex(g)) return 1;
    if (has_cut_pair(g)) return 2;
    return 3;
}

bool is_planar(const Graph& g) {
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                             boost::property<boost::vertex_index_t, int>>;
    BoostGraph b(g.vertex_count());
    for (const Edge& e : g.edges()) boost::add_edge(e.u, e.v, b);
    return boost::boyer_myrvold_planarity_test(b);
}

Decomposition decompose(const Graph& g, CutOrder order) {
    if (!g.is_connected()) throw std::invalid_argument("graph not connected");
    if (!g.is_simple()) throw std::invalid_argument("simple graph required");
    const int expected_beta = betti1(g);

    Decomposition d;
    d.cuts = cut_vertices(g);
    if (order == CutOrder::largest_first) std::reverse(d.cuts.begin(), d.cuts.end());

    std::vector<Vertex> all(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) all[v] = v;
    std::deque<Piece> pending{Piece{all, g.edges(), {}}};
    std::vector<Piece> blocks;
    while (!pending.empty()) {
        Piece p = std::move(pending.front());
        pending.pop_front();
        std::map<Vertex, Vertex> local;
        const Graph lg = local_graph(p, local);
        bool done = true;
        for (const CutRecord& c : d.cuts) {
            auto it = local.find(c.vertices[0]);
            if (it == local.end() || count_without(lg, {it->second}) < 2) continue;
            for (Piece& q : split(p, c.vertices)) pending.push_back(std::move(q));
            done = false;
            break;
        }
        if (!done) continue;
        if (p.edges.size() == 1)
            ++d.discarded_bridges;
        else if (!p.edges.empty())
            blocks.push_back(std::move(p));
    }

    std::deque<Piece> queue(blocks.begin(), blocks.end());
    int pair_cuts = 0;
    while (!queue.empty()) {
        Piece p = std::move(queue.front());
        queue.pop_front();
        std::map<Vertex, Vertex> local;
        const Graph lg = local_graph(p, local);

        bool all_two = true;
        for (Vertex v = 0; v < lg.vertex_count(); ++v) all_two = all_two && lg.degree(v) == 2;
        if (all_two) {
            d.components.push_back(make_component(p, ComponentKind::topological_cycle));
            continue;
        }
        Graph s;
        if (suppressed_simple(lg, s) && s.vertex_count() >= 4 && !has_cut_vertex(s) && !has_cut_pair(s)) {
            d.components.push_back(make_component(
                p, is_planar(s) ? ComponentKind::planar_3_connected : ComponentKind::nonplanar_3_connected));
            continue;
        }

        std::vector<Vertex> essential;
        for (Vertex v : p.vertices)
            if (lg.degree(local[v]) != 2) essential.push_back(v);
        std::vector<std::pair<Vertex, Vertex>> candidates;
        for (std::size_t i = 0; i < essential.size(); ++i)
            for (std::size_t j = i + 1; j < essential.size(); ++j) candidates.push_back({essential[i], essential[j]});
        if (order == CutOrder::largest_first) std::reverse(candidates.begin(), candidates.end());

        bool found = false;
        for (auto [x, y] : candidates) {
            const int comps = count_without(lg, {local[x], local[y]});
            if (comps < 2) continue;
            const Edge xy(x, y);
            Piece rest = p;
            rest.edges.clear();
            rest.virtual_edges.clear();
            std::vector<Edge> direct;
            for (const Edge& e : p.edges) (e == xy ? direct : rest.edges).push_back(e);
            for (const Edge& e : p.virtual_edges)
                if (e != xy) rest.virtual_edges.push_back(e);
            for (Piece& q : split(rest, {x, y})) {
                q.edges.push_back(xy);
                q.virtual_edges.push_back(xy);
                queue.push_back(std::move(q));
            }
            for (std::size_t k = 0; k < direct.size(); ++k)
                queue.push_back(Piece{{x, y}, {xy, xy}, {xy}});
            d.cuts.push_back({{x, y}, comps + static_cast<int>(direct.size()), 0});
            ++pair_cuts;
            found = true;
            break;
        }
        if (!found) throw std::logic_error("decompose: no 2-separation in a non-3-connected piece");
    }

    std::sort(d.components.begin(), d.components.end(), [](const MarkedComponent& a, const MarkedComponent& b) {
        if (a.vertices != b.vertices) return a.vertices < b.vertices;
        if (a.graph.edges() != b.graph.edges()) return a.graph.edges() < b.graph.edges();
        return a.virtual_edges < b.virtual_edges;
    });

    int total = 0;
    for (const auto& c : d.components) total += c.graph.edge_count() - c.graph.vertex_count() + 1;
    if (total != expected_beta + pair_cuts) throw std::logic_error("decompose: cycle bookkeeping violated");
    return d;
}

Integer n2_of_cut(int mu) {
    if (mu < 2) throw std::invalid_argument("n2_of_cut requires mu >= 2");
    return Integer(mu - 2) * (mu - 1) / 2;
}

Integer n1_of_cut(int mu, int nu, int n) {
    if (mu < 2 || nu < mu || n < 2) throw std::invalid_argument("n1_of_cut requires 2 <= mu <= nu, n >= 2");
    Integer v = binomial(n + mu - 2, mu - 1) * (nu - 2) - binomial(n + mu - 2, mu - 2) - (nu - mu - 1);
    if (n == 2) {
        Integer two = Integer(mu - 1) * (mu - 2) / 2 + Integer(mu - 1) * (nu - mu);
        if (two != v) throw std::logic_error("n1_of_cut: two-particle form disagrees");
    }
    return v;
}

Prediction predict_h1(const Decomposition& d, const Graph& g, int n) {
    Prediction p;
    p.beta1 = betti1(g);
    p.n_particles = n;
    if (n == 1) {
        p.group.rank = p.beta1;
        return p;
    }
    for (const CutRecord& c : d.cuts) {
        if (c.is_vertex())
            p.n1 += n1_of_cut(c.mu, c.nu, n);
        else
            p.n2 += n2_of_cut(c.mu);
    }
    for (const auto& c : d.components) {
        if (c.kind == ComponentKind::planar_3_connected) ++p.n3;
        if (c.kind == ComponentKind::nonplanar_3_connected) ++p.n3_prime;
        if (c.kind == ComponentKind::topological_cycle) ++p.n3_doubleprime;
    }
    const Integer rank = p.beta1 + p.n1 + p.n2 + p.n3;
    p.group.rank = rank.convert_to<int>();
    p.group.torsion.assign(p.n3_prime, Integer(2));
    return p;
}

Prediction predict_h1(const Graph& g, int n) {
    if (n < 1) throw std::invalid_argument("particle count must be positive");
    return predict_h1(decompose(g), g, n);
}

}  // namespace confspace
