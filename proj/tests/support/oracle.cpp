#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace confspace::testing {

namespace {

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

void k_subsets(const std::vector<int>& pool, int k, std::size_t from, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
        cur.push_back(pool[i]);
        k_subsets(pool, k, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> subsets_of(const std::vector<int>& pool, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    if (k >= 0) k_subsets(pool, k, 0, cur, out);
    return out;
}

std::vector<int> with(std::vector<int> s, std::initializer_list<int> extra) {
    s.insert(s.end(), extra);
    std::sort(s.begin(), s.end());
    return s;
}

int rank_of(std::vector<std::vector<Integer>> m) {
    // fraction-free elimination
    const int rows = static_cast<int>(m.size()), cols = rows ? static_cast<int>(m[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (int i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            const Integer a = m[r][c], b = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] = m[i][j] * a - m[r][j] * b;
            Integer g = 0;
            for (int j = c; j < cols; ++j) g = boost::multiprecision::gcd(g, m[i][j]);
            if (g > 1)
                for (int j = c; j < cols; ++j) m[i][j] /= g;
        }
        ++r;
    }
    return r;
}

}  // namespace

std::vector<Integer> naive_smith_factors(std::vector<std::vector<Integer>> m) {
    const int rows = static_cast<int>(m.size()), cols = rows ? static_cast<int>(m[0].size()) : 0;
    std::vector<Integer> d;
    for (int t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            int pr = -1, pc = -1;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < cols; ++j)
                    if (m[i][j] != 0 && (pr < 0 || abs_value(m[i][j]) < abs_value(m[pr][pc]))) pr = i, pc = j;
            if (pr < 0) {
                std::sort(d.begin(), d.end());
                return d;
            }
            std::swap(m[t], m[pr]);
            for (auto& row : m) std::swap(row[t], row[pc]);
            bool clean = true;
            for (int i = t + 1; i < rows; ++i) {
                const Integer q = m[i][t] / m[t][t];
                if (q != 0)
                    for (int j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                clean &= m[i][t] == 0;
            }
            for (int j = t + 1; j < cols; ++j) {
                const Integer q = m[t][j] / m[t][t];
                if (q != 0)
                    for (int i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                clean &= m[t][j] == 0;
            }
            if (!clean) continue;
            int bad = -1;
            for (int i = t + 1; i < rows && bad < 0; ++i)
                for (int j = t + 1; j < cols; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            for (int j = t; j < cols; ++j) m[t][j] += m[bad][j];
        }
        d.push_back(abs_value(m[t][t]));
    }
    // factors are produced in divisibility order by the fix-up loop
    return d;
}

AbelianGroup naive_h1(const Graph& g, int n, NaiveCounts* counts) {
    const int V = g.vertex_count();
    std::vector<int> all(V);
    for (int v = 0; v < V; ++v) all[v] = v;
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : g.edges()) edges.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) throw std::invalid_argument("simple graphs only");

    std::map<std::vector<int>, int> c0;
    for (const auto& s : subsets_of(all, n)) c0.emplace(s, static_cast<int>(c0.size()));

    auto off = [&](std::initializer_list<int> used) {
        std::vector<int> rest;
        for (int v : all)
            if (std::find(used.begin(), used.end(), v) == used.end()) rest.push_back(v);
        return rest;
    };
    std::map<std::pair<std::vector<int>, int>, int> c1;  // (spectators, edge index)
    for (std::size_t e = 0; e < edges.size(); ++e)
        for (const auto& s : subsets_of(off({edges[e].first, edges[e].second}), n - 1))
            c1.emplace(std::make_pair(s, static_cast<int>(e)), static_cast<int>(c1.size()));

    std::vector<std::vector<Integer>> d1(c0.size(), std::vector<Integer>(c1.size(), 0));
    for (const auto& [key, col] : c1) {
        const auto& [s, e] = key;
        d1[c0.at(with(s, {edges[e].second}))][col] += 1;
        d1[c0.at(with(s, {edges[e].first}))][col] -= 1;
    }

    std::vector<std::vector<Integer>> d2(c1.size());
    long n2 = 0;
    for (std::size_t e = 0; e < edges.size(); ++e)
        for (std::size_t f = e + 1; f < edges.size(); ++f) {
            const auto [a, b] = edges[e];
            const auto [c, d] = edges[f];
            if (a == c || a == d || b == c || b == d) continue;
            for (const auto& s : subsets_of(off({a, b, c, d}), n - 2)) {
                std::vector<Integer> col(c1.size(), 0);
                col[c1.at({with(s, {a}), static_cast<int>(f)})] += 1;
                col[c1.at({with(s, {b}), static_cast<int>(f)})] -= 1;
                col[c1.at({with(s, {c}), static_cast<int>(e)})] -= 1;
                col[c1.at({with(s, {d}), static_cast<int>(e)})] += 1;
                for (std::size_t r = 0; r < c1.size(); ++r) d2[r].push_back(col[r]);
                ++n2;
            }
        }
    if (counts) *counts = {static_cast<long>(c0.size()), static_cast<long>(c1.size()), n2};

    const int rank1 = c1.empty() ? 0 : rank_of(d1);
    std::vector<Integer> factors = n2 ? naive_smith_factors(d2) : std::vector<Integer>{};
    AbelianGroup out;
    out.rank = static_cast<int>(c1.size()) - rank1 - static_cast<int>(factors.size());
    for (const Integer& f : factors)
        if (f > 1) out.torsion.push_back(f);
    return out;
}

}  // namespace confspace::testing
