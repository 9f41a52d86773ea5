#include "corpus.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

namespace confspace::testing {

namespace {

using Mask = std::uint32_t;

int pair_bit(int i, int j) {
    if (i > j) std::swap(i, j);
    return j * (j - 1) / 2 + i;
}

Mask canonical(int n, Mask m) {
    std::vector<int> deg(n, 0);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (m >> pair_bit(i, j) & 1) ++deg[i], ++deg[j];
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] < deg[b]; });
    // permute only within runs of equal degree
    std::vector<std::pair<int, int>> runs;
    for (int s = 0; s < n;) {
        int e = s;
        while (e < n && deg[order[e]] == deg[order[s]]) ++e;
        runs.push_back({s, e});
        s = e;
    }
    Mask best = ~Mask(0);
    std::vector<int> perm = order;
    std::function<void(std::size_t)> rec = [&](std::size_t r) {
        if (r == runs.size()) {
            std::vector<int> pos(n);
            for (int k = 0; k < n; ++k) pos[perm[k]] = k;
            Mask out = 0;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i)
                    if (m >> pair_bit(i, j) & 1) out |= Mask(1) << pair_bit(pos[i], pos[j]);
            best = std::min(best, out);
            return;
        }
        auto [s, e] = runs[r];
        std::sort(perm.begin() + s, perm.begin() + e);
        do rec(r + 1);
        while (std::next_permutation(perm.begin() + s, perm.begin() + e));
    };
    rec(0);
    return best;
}

Graph from_mask(int n, Mask m) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m >> pair_bit(i, j) & 1) e.emplace_back(i, j);
    return Graph(n, e);
}

}  // namespace

std::vector<Graph> connected_graphs(int vertices) {
    std::set<Mask> level{0};
    for (int n = 2; n <= vertices; ++n) {
        std::set<Mask> next;
        for (Mask m : level)
            for (Mask nb = 1; nb < (Mask(1) << (n - 1)); ++nb) {
                Mask x = m;
                for (int i = 0; i < n - 1; ++i)
                    if (nb >> i & 1) x |= Mask(1) << pair_bit(i, n - 1);
                next.insert(canonical(n, x));
            }
        level = std::move(next);
    }
    std::vector<Graph> out;
    for (Mask m : level) out.push_back(from_mask(vertices, m));
    return out;
}

std::vector<Graph> random_connected_graphs(int count, int min_vertices, int max_vertices, double p,
                                           std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    for (int k = 0; k < count; ++k) {
        const int n = std::uniform_int_distribution<int>(min_vertices, max_vertices)(rng);
        std::set<Edge> edges;
        for (int v = 1; v < n; ++v) edges.emplace(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
        std::bernoulli_distribution extra(p);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (extra(rng)) edges.emplace(i, j);
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        out.push_back(relabel(Graph(n, {edges.begin(), edges.end()}), perm));
    }
    return out;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    std::vector<Edge> e;
    for (const Edge& x : g.edges()) e.emplace_back(perm[x.u], perm[x.v]);
    return Graph(g.vertex_count(), e, g.name());
}

}  // namespace confspace::testing
