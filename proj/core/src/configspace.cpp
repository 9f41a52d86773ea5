#include "confspace/configspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace confspace {

Config insert_vertex(Config c, Vertex v) {
    c.insert(std::lower_bound(c.begin(), c.end(), v), v);
    return c;
}

Config erase_vertex(Config c, Vertex v) {
    auto it = std::lower_bound(c.begin(), c.end(), v);
    if (it == c.end() || *it != v) throw std::invalid_argument("vertex not in configuration");
    c.erase(it);
    return c;
}

void add_move(CellChain& chain, const Move& m, const Integer& coefficient) {
    Integer& slot = chain[m.cell()];
    slot += m.sign() * coefficient;
    if (slot == 0) chain.erase(m.cell());
}

void add_chain(CellChain& chain, const CellChain& other, const Integer& coefficient) {
    for (const auto& [cell, k] : other) {
        Integer& slot = chain[cell];
        slot += k * coefficient;
        if (slot == 0) chain.erase(cell);
    }
}

CellChain negate(const CellChain& chain) {
    CellChain out;
    for (const auto& [cell, k] : chain) out[cell] = -k;
    return out;
}

std::vector<Move> moves_of_path(const std::vector<Config>& path) {
    std::vector<Move> moves;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const Config& a = path[i];
        const Config& b = path[i + 1];
        if (a.size() != b.size()) throw std::invalid_argument("configurations differ in size");
        Config left, right, common;
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(left));
        std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(right));
        if (left.size() != 1 || right.size() != 1)
            throw std::invalid_argument("consecutive configurations are not one move apart");
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        moves.push_back({common, left[0], right[0]});
    }
    return moves;
}

CellChain chain_of_path(const std::vector<Config>& path) {
    CellChain chain;
    for (const Move& m : moves_of_path(path)) add_move(chain, m);
    return chain;
}

std::vector<Config> subsets(int n, int k) {
    std::vector<Config> out;
    if (k < 0 || k > n) return out;
    Config cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

namespace {

bool disjoint(const Config& s, const Edge& e) {
    return !std::binary_search(s.begin(), s.end(), e.u) && !std::binary_search(s.begin(), s.end(), e.v);
}

}  // namespace

CellComplex::CellComplex(const Graph& g, int n) : graph_(g), n_(n) {
    if (n < 1) throw std::invalid_argument("particle count must be positive");
    if (n > g.vertex_count()) throw std::invalid_argument("too many particles");
    if (!g.is_simple()) throw std::invalid_argument("simple graph required");

    std::vector<Edge> edges = g.edges();
    std::sort(edges.begin(), edges.end());

    for (Config& s : subsets(g.vertex_count(), n)) {
        i0_.emplace(Cell0{s}, static_cast<int>(c0_.size()));
        c0_.push_back({std::move(s)});
    }
    for (Config& s : subsets(g.vertex_count(), n - 1))
        for (const Edge& e : edges)
            if (disjoint(s, e)) {
                i1_.emplace(Cell1{s, e}, static_cast<int>(c1_.size()));
                c1_.push_back({s, e});
            }
    if (n >= 2)
        for (Config& s : subsets(g.vertex_count(), n - 2))
            for (std::size_t i = 0; i < edges.size(); ++i) {
                if (!disjoint(s, edges[i])) continue;
                for (std::size_t j = i + 1; j < edges.size(); ++j)
                    if (disjoint(s, edges[j]) && !edges[j].touches(edges[i].u) && !edges[j].touches(edges[i].v))
                        c2_.push_back({s, edges[i], edges[j]});
            }

    d1_ = SparseIntegerMatrix(static_cast<int>(c0_.size()), static_cast<int>(c1_.size()));
    for (std::size_t k = 0; k < c1_.size(); ++k) {
        const Cell1& c = c1_[k];
        d1_.add(i0_.at({insert_vertex(c.spectators, c.edge.v)}), static_cast<int>(k), 1);
        d1_.add(i0_.at({insert_vertex(c.spectators, c.edge.u)}), static_cast<int>(k), -1);
    }
    d2_ = SparseIntegerMatrix(static_cast<int>(c1_.size()), static_cast<int>(c2_.size()));
    for (std::size_t k = 0; k < c2_.size(); ++k)
        for (const auto& [cell, coeff] : boundary(c2_[k])) d2_.add(i1_.at(cell), static_cast<int>(k), coeff);
}

CellChain CellComplex::boundary(const Cell2& c) const {
    const Vertex a = c.first.u, b = c.first.v, cc = c.second.u, d = c.second.v;
    CellChain out;
    add_move(out, {insert_vertex(c.spectators, a), cc, d});
    add_move(out, {insert_vertex(c.spectators, d), a, b});
    add_move(out, {insert_vertex(c.spectators, b), d, cc});
    add_move(out, {insert_vertex(c.spectators, cc), b, a});
    return out;
}

std::optional<int> CellComplex::index_of(const Cell0& c) const {
    auto it = i0_.find(c);
    if (it == i0_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> CellComplex::index_of(const Cell1& c) const {
    auto it = i1_.find(c);
    if (it == i1_.end()) return std::nullopt;
    return it->second;
}

std::vector<Integer> CellComplex::to_vector(const CellChain& chain) const {
    std::vector<Integer> v(c1_.size());
    for (const auto& [cell, k] : chain) {
        auto idx = index_of(cell);
        if (!idx) throw std::invalid_argument("unknown cell");
        v[*idx] += k;
    }
    return v;
}

CellChain CellComplex::to_chain(const std::vector<Integer>& v) const {
    CellChain out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) out[c1_[i]] = v[i];
    return out;
}

bool CellComplex::is_cycle(const CellChain& chain) const {
    for (const Integer& x : d1_.multiply(to_vector(chain)))
        if (x != 0) return false;
    return true;
}

CellCounts cell_counts(const CellComplex& c) {
    return {c.cells0().size(), c.cells1().size(), c.cells2().size()};
}

}  // namespace confspace
