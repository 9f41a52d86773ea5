#include "confspace/spanning.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace confspace {

Embedding default_embedding(const Graph& g) {
    Embedding e(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        e[v] = g.neighbors(v);
        e[v].erase(std::unique(e[v].begin(), e[v].end()), e[v].end());
    }
    return e;
}

namespace {

Embedding checked_embedding(const Graph& g, const Embedding& embedding) {
    if (embedding.empty()) return default_embedding(g);
    if (static_cast<int>(embedding.size()) != g.vertex_count()) throw std::invalid_argument("embedding size mismatch");
    const Embedding ref = default_embedding(g);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::vector<Vertex> sorted = embedding[v];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != ref[v]) throw std::invalid_argument("embedding does not list the neighbors of " + std::to_string(v));
    }
    return embedding;
}

// Neighbors of v in clockwise order starting just after `from` (or at the first one).
std::vector<Vertex> rotation_after(const Embedding& e, Vertex v, Vertex from) {
    const auto& order = e[v];
    std::size_t start = 0;
    if (from >= 0) {
        auto it = std::find(order.begin(), order.end(), from);
        if (it != order.end()) start = static_cast<std::size_t>(it - order.begin()) + 1;
    }
    std::vector<Vertex> out;
    for (std::size_t k = 0; k < order.size(); ++k) out.push_back(order[(start + k) % order.size()]);
    if (from >= 0) out.erase(std::remove(out.begin(), out.end(), from), out.end());
    return out;
}

}  // namespace

Config RootedOrderedTree::root_configuration(int n) const {
    Config c(vertex_of_label.begin() + 1, vertex_of_label.begin() + 1 + n);
    std::sort(c.begin(), c.end());
    return c;
}

RootedOrderedTree rooted_ordered_tree(const Graph& g, Vertex root, const Embedding& embedding,
                                      const std::optional<std::vector<Edge>>& deleted) {
    if (!g.is_connected()) throw std::invalid_argument("graph not connected");
    if (!g.is_simple()) throw std::invalid_argument("simple graph required");
    if (root < 0 || root >= g.vertex_count()) throw std::invalid_argument("root out of range");
    RootedOrderedTree t;
    t.graph = g;
    t.embedding = checked_embedding(g, embedding);
    t.root = root;
    const int V = g.vertex_count();
    t.parent.assign(V, -1);
    t.children.assign(V, {});
    t.label.assign(V, 0);
    t.vertex_of_label.assign(V + 1, -1);

    std::set<Edge> removed;
    if (deleted) {
        for (const Edge& e : *deleted) {
            if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("deleted edge not in graph");
            removed.insert(e);
        }
        if (static_cast<int>(removed.size()) != betti1(g)) throw std::invalid_argument("deleted edges do not leave a tree");
    }

    int next = 1;
    std::function<void(Vertex, Vertex)> visit = [&](Vertex v, Vertex from) {
        t.label[v] = next;
        t.vertex_of_label[next++] = v;
        for (Vertex w : rotation_after(t.embedding, v, from)) {
            if (deleted && removed.count(Edge(v, w))) continue;
            if (t.label[w] != 0) continue;
            t.parent[w] = v;
            t.children[v].push_back(w);
            visit(w, v);
        }
    };
    visit(root, -1);
    if (next != V + 1) throw std::invalid_argument("deleted edges do not leave a spanning tree");
    if (V > 1 && t.children[root].size() != 1) throw std::invalid_argument("root not degree 1 in tree");
    for (const Edge& e : g.edges())
        if (t.parent[e.u] != e.v && t.parent[e.v] != e.u) t.deleted.push_back(e);
    return t;
}

Vertex default_root(const Graph& g, const Embedding& embedding) {
    for (Vertex r = 0; r < g.vertex_count(); ++r) {
        try {
            rooted_ordered_tree(g, r, embedding);
            return r;
        } catch (const std::invalid_argument&) {
        }
    }
    throw std::invalid_argument("no admissible root");
}

std::optional<Move> flow_step(const RootedOrderedTree& t, const Config& config) {
    std::vector<Vertex> by_label = config;
    std::sort(by_label.begin(), by_label.end(), [&](Vertex a, Vertex b) { return t.label[a] < t.label[b]; });
    for (Vertex v : by_label) {
        const Vertex up = t.parent[v];
        if (up < 0 || std::binary_search(config.begin(), config.end(), up)) continue;
        return Move{erase_vertex(config, v), v, up};
    }
    if (config != t.root_configuration(static_cast<int>(config.size())))
        throw std::logic_error("flow stuck away from the root configuration");
    return std::nullopt;
}

std::vector<Config> flow_path(const RootedOrderedTree& t, const Config& config) {
    std::vector<Config> path{config};
    while (auto m = flow_step(t, path.back())) path.push_back(insert_vertex(m->spectators, m->to));
    return path;
}

namespace {

std::string describe(const RootedOrderedTree& t, const Config& c) {
    std::ostringstream s;
    s << "{";
    for (std::size_t i = 0; i < c.size(); ++i) s << (i ? "," : "") << c[i];
    s << "}";
    (void)t;
    return s.str();
}

// Placements of k particles on the vertices outside `forbidden`, one per connected component
// of the k-particle configuration space of the remaining graph, smallest by tree labels.
std::vector<Config> placements(const RootedOrderedTree& t, int k, const std::vector<Vertex>& forbidden) {
    const Graph& g = t.graph;
    std::vector<Vertex> free;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (std::find(forbidden.begin(), forbidden.end(), v) == forbidden.end()) free.push_back(v);
    if (static_cast<int>(free.size()) < k) return {};
    std::vector<Config> all;
    for (const Config& idx : subsets(static_cast<int>(free.size()), k)) {
        Config c;
        for (int i : idx) c.push_back(free[i]);
        all.push_back(c);
    }
    std::map<Config, int> index;
    for (std::size_t i = 0; i < all.size(); ++i) index[all[i]] = static_cast<int>(i);
    std::vector<int> root(all.size());
    std::iota(root.begin(), root.end(), 0);
    std::function<int(int)> find = [&](int x) { return root[x] == x ? x : root[x] = find(root[x]); };
    for (std::size_t i = 0; i < all.size(); ++i)
        for (Vertex v : all[i])
            for (Vertex w : g.neighbors(v)) {
                auto it = index.find(insert_vertex(erase_vertex(all[i], v), w));
                if (it == index.end()) continue;
                root[find(static_cast<int>(i))] = find(it->second);
            }
    auto key = [&](const Config& c) {
        std::vector<int> l;
        for (Vertex v : c) l.push_back(t.label[v]);
        std::sort(l.begin(), l.end());
        return l;
    };
    std::map<int, Config> best;
    for (std::size_t i = 0; i < all.size(); ++i) {
        const int r = find(static_cast<int>(i));
        auto it = best.find(r);
        if (it == best.end() || key(all[i]) < key(it->second)) best[r] = all[i];
    }
    std::vector<Config> out;
    for (const auto& [r, c] : best) out.push_back(c);
    std::sort(out.begin(), out.end(), [&](const Config& a, const Config& b) { return key(a) < key(b); });
    return out;
}

// Root configuration -> via -> ... -> via -> root configuration.
std::vector<Config> based_loop(const RootedOrderedTree& t, const std::vector<Config>& via) {
    std::vector<Config> out = flow_path(t, via.front());
    std::reverse(out.begin(), out.end());
    out.insert(out.end(), via.begin() + 1, via.end());
    const auto back = flow_path(t, via.back());
    out.insert(out.end(), back.begin() + 1, back.end());
    return out;
}

}  // namespace

std::vector<GeneratorCycle> spanning_set(const RootedOrderedTree& t, int n) {
    const Graph& g = t.graph;
    if (!is_sufficiently_subdivided(g, n)) throw std::invalid_argument("graph not sufficiently subdivided");
    if (n > g.vertex_count()) throw std::invalid_argument("too many particles");
    std::vector<GeneratorCycle> out;

    for (const Edge& e : t.deleted) {
        // the n-1 smallest labels off the edge
        Config spectators;
        for (int l = 1; l <= g.vertex_count() && static_cast<int>(spectators.size()) < n - 1; ++l) {
            const Vertex v = t.vertex_of_label[l];
            if (!e.touches(v)) spectators.push_back(v);
        }
        if (static_cast<int>(spectators.size()) < n - 1) continue;
        std::sort(spectators.begin(), spectators.end());
        const Vertex from = t.label[e.u] < t.label[e.v] ? e.u : e.v;
        const Vertex to = e.other(from);
        auto loop = based_loop(t, {insert_vertex(spectators, from), insert_vertex(spectators, to)});
        CellChain z = chain_of_path(loop);
        out.push_back({CycleKind::ab, std::move(loop), std::move(z),
                       "AB edge " + std::to_string(from) + "->" + std::to_string(to) + " spectators " +
                           describe(t, spectators),
                       e, -1, {}, spectators});
    }

    if (n >= 2)
        for (int l = 1; l <= g.vertex_count(); ++l) {
            const Vertex w = t.vertex_of_label[l];
            if (g.degree(w) < 3) continue;
            const Vertex r = w == t.root ? t.children[w][0] : t.parent[w];
            const std::vector<Vertex> others = rotation_after(t.embedding, w, r);
            for (std::size_t i = 0; i < others.size(); ++i)
                for (std::size_t j = i + 1; j < others.size(); ++j) {
                    const Vertex a = others[i], b = others[j];
                    for (const Config& s : placements(t, n - 2, {w, r, a, b})) {
                        auto with = [&](Vertex x, Vertex y) { return insert_vertex(insert_vertex(s, x), y); };
                        const std::vector<Config> hexagon{with(r, w), with(r, a), with(w, a), with(a, b),
                                                          with(w, b), with(r, b), with(r, w)};
                        auto loop = based_loop(t, hexagon);
                        CellChain z = chain_of_path(loop);
                        out.push_back({CycleKind::y, std::move(loop), std::move(z),
                                       "Y center " + std::to_string(w) + " arms " + std::to_string(r) + "," +
                                           std::to_string(a) + "," + std::to_string(b) + " spectators " +
                                           describe(t, s),
                                       {}, w, {r, a, b}, s});
                    }
                }
        }
    return out;
}

std::vector<GeneratorCycle> spanning_set(const Graph& g, int n, const Embedding& embedding) {
    return spanning_set(rooted_ordered_tree(g, default_root(g, embedding), embedding), n);
}

SpanReport verify_spanning(const std::vector<GeneratorCycle>& cycles, const HomologyPresentation& h) {
    SpanReport rep;
    rep.group = h.group();
    rep.rank_total = rep.group.rank;
    rep.torsion_total = static_cast<int>(rep.group.torsion.size());
    const int dim = rep.rank_total + rep.torsion_total;
    const int m = static_cast<int>(cycles.size());

    SparseIntegerMatrix all(m + rep.torsion_total, dim), free(m, rep.rank_total);
    for (int i = 0; i < m; ++i) {
        const auto x = h.coordinates(cycles[i].chain);
        for (int j = 0; j < dim; ++j) all.add(i, j, x[j]);
        for (int j = 0; j < rep.rank_total; ++j) free.add(i, j, x[j]);
    }
    for (int i = 0; i < rep.torsion_total; ++i) all.add(m + i, rep.rank_total + i, rep.group.torsion[i]);

    rep.rank_achieved = smith_normal_form(free).rank();
    const SmithForm s = smith_normal_form(all);
    rep.spans = s.rank() == dim && std::all_of(s.factors.begin(), s.factors.end(), [](const Integer& d) { return d == 1; });
    rep.redundancy = m - (rep.spans ? dim : rep.rank_achieved);
    return rep;
}

SpanReport verify_spanning(const std::vector<GeneratorCycle>& cycles, const CellComplex& c) {
    for (const auto& z : cycles)
        if (!c.is_cycle(z.chain)) throw std::invalid_argument("chain is not a cycle");
    return verify_spanning(cycles, HomologyPresentation(c, true));
}

}  // namespace confspace
