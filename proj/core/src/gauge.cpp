#include "confspace/gauge.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace confspace {

GaugePotential::GaugePotential(Graph g, int n) : graph_(std::move(g)), n_(n) {
    if (n < 1) throw std::invalid_argument("particle count must be positive");
}

bool GaugePotential::is_cell(const Cell1& c) const {
    if (static_cast<int>(c.spectators.size()) != n_ - 1) return false;
    if (c.edge.u < 0 || c.edge.v >= graph_.vertex_count() || !graph_.has_edge(c.edge.u, c.edge.v)) return false;
    for (std::size_t i = 0; i < c.spectators.size(); ++i) {
        const Vertex s = c.spectators[i];
        if (s < 0 || s >= graph_.vertex_count() || c.edge.touches(s)) return false;
        if (i > 0 && c.spectators[i - 1] >= s) return false;
    }
    return true;
}

Rational GaugePotential::value(const Cell1& c) const {
    if (!is_cell(c)) throw std::invalid_argument("unknown cell");
    auto it = values_.find(c);
    return it == values_.end() ? Rational(0) : it->second;
}

Rational GaugePotential::value(const Move& m) const {
    return m.sign() > 0 ? value(m.cell()) : Rational(-value(m.cell()));
}

void GaugePotential::set(const Cell1& c, const Rational& v) {
    if (!is_cell(c)) throw std::invalid_argument("unknown cell");
    if (v == 0)
        values_.erase(c);
    else
        values_[c] = v;
}

void GaugePotential::set(const Move& m, const Rational& v) { set(m.cell(), m.sign() > 0 ? v : Rational(-v)); }

namespace {

void require_same_space(const GaugePotential& a, const GaugePotential& b) {
    if (a.particles() != b.particles() || !(a.graph() == b.graph()))
        throw std::invalid_argument("potentials live on different complexes");
}

}  // namespace

GaugePotential operator+(const GaugePotential& a, const GaugePotential& b) {
    require_same_space(a, b);
    GaugePotential out = a;
    for (const auto& [c, v] : b.values()) out.set(c, out.value(c) + v);
    return out;
}

GaugePotential operator-(const GaugePotential& a, const GaugePotential& b) {
    require_same_space(a, b);
    GaugePotential out = a;
    for (const auto& [c, v] : b.values()) out.set(c, out.value(c) - v);
    return out;
}

GaugePotential potential_from_values(const CellComplex& c, const std::vector<Rational>& values) {
    GaugePotential p(c.graph(), c.particles());
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] != 0) p.set(c.cells1()[i], values[i]);
    return p;
}

Rational flux(const GaugePotential& p, const CellChain& z) {
    Rational total = 0;
    for (const auto& [cell, k] : z) total += Rational(k) * p.value(cell);
    return total;
}

Rational flux(const GaugePotential& p, const std::vector<Config>& path) {
    Rational total = 0;
    for (const Move& m : moves_of_path(path)) total += p.value(m);
    return total;
}

bool same_flux(const Rational& a, const Rational& b) { return is_integer(a - b); }

bool is_topological(const GaugePotential& p, const CellComplex& c) {
    for (const Cell2& cell : c.cells2())
        if (!is_integer(flux(p, c.boundary(cell)))) return false;
    return true;
}

bool is_topological(const GaugePotential& p) { return is_topological(p, CellComplex(p.graph(), p.particles())); }

namespace {

void require_two(const GaugePotential& p) {
    if (p.particles() != 2) throw std::invalid_argument("two-particle potential required");
}

std::vector<Vertex> spectators_of(const Graph& g, const Edge& e) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!e.touches(v)) out.push_back(v);
    return out;
}

}  // namespace

AbStatisticsSplit ab_statistics_split(const GaugePotential& p) {
    require_two(p);
    const Graph& g = p.graph();
    if (g.vertex_count() < 3) throw std::invalid_argument("no spectators");
    GaugePotential ab(g, 2);
    for (const Edge& e : g.edges()) {
        const auto others = spectators_of(g, e);
        Rational sum = 0;
        for (Vertex s : others) sum += p.value(Cell1{{s}, e});
        const Rational avg = sum / Rational(static_cast<long>(others.size()));
        for (Vertex s : others) ab.set(Cell1{{s}, e}, avg);
    }
    return {ab, p - ab};
}

bool is_pure_ab(const GaugePotential& p) {
    require_two(p);
    for (const Edge& e : p.graph().edges()) {
        std::set<Rational> seen;
        for (Vertex s : spectators_of(p.graph(), e)) seen.insert(p.value(Cell1{{s}, e}));
        if (seen.size() > 1) return false;
    }
    return true;
}

bool is_pure_statistics(const GaugePotential& p) {
    require_two(p);
    for (const Edge& e : p.graph().edges()) {
        Rational sum = 0;
        for (Vertex s : spectators_of(p.graph(), e)) sum += p.value(Cell1{{s}, e});
        if (sum != 0) return false;
    }
    return true;
}

namespace {

// Assigns the unknown cells so that every 2-cell flux is an integer. Returns false if impossible.
bool complete(GaugePotential& out, const CellComplex& c, const std::set<Cell1>& unknown) {
    std::map<Cell1, int> column;
    for (const Cell1& u : unknown) column.emplace(u, static_cast<int>(column.size()));
    std::vector<std::vector<std::pair<int, Integer>>> rows;
    std::vector<Rational> rhs;
    for (const Cell2& cell : c.cells2()) {
        const CellChain b = c.boundary(cell);
        std::vector<std::pair<int, Integer>> row;
        Rational known = 0;
        for (const auto& [c1, k] : b) {
            auto it = column.find(c1);
            if (it != column.end())
                row.push_back({it->second, k});
            else
                known += Rational(k) * out.value(c1);
        }
        if (row.empty()) {
            if (!is_integer(known)) return false;
            continue;
        }
        rows.push_back(std::move(row));
        rhs.push_back(-known);
    }
    SparseIntegerMatrix a(static_cast<int>(rows.size()), static_cast<int>(column.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [col, k] : rows[r]) a.add(static_cast<int>(r), col, k);
    auto sol = solve_mod_one(a, rhs);
    if (!sol) return false;
    for (const auto& [cell, col] : column) out.set(cell, (*sol)[col]);
    return true;
}

}  // namespace

GaugePotential lift_subdivision(const GaugePotential& pbar, Edge pq, Vertex a, LiftReport* report) {
    require_two(pbar);
    const Graph& gbar = pbar.graph();
    const auto& edges = gbar.edges();
    auto found = std::find(edges.begin(), edges.end(), pq);
    if (found == edges.end()) throw std::invalid_argument("edge not in graph");
    if (a != gbar.vertex_count()) throw std::invalid_argument("new vertex must take the next free id");
    if (!is_topological(pbar)) throw std::invalid_argument("potential is not topological");

    const Vertex p = pq.u, q = pq.v;
    const Graph g = subdivide_edge(gbar, static_cast<int>(found - edges.begin())).graph;
    const CellComplex c(g, 2);
    const Rational half(1, 2);
    auto bar = [&](Vertex s, Vertex from, Vertex to) { return pbar.value(Move{{s}, from, to}); };

    GaugePotential out(g, 2);
    std::set<Cell1> uncovered, spectator_at_a;
    for (const Cell1& cell : c.cells1()) {
        const Vertex i = cell.spectators[0];
        const Vertex x = cell.edge.u, y = cell.edge.v;
        Rational v;
        if (i != a && !cell.edge.touches(a)) {
            v = bar(i, x, y);
        } else if (i != a) {
            // half of the subdivided edge; canonical orientation runs towards a on p-a, from q on q-a
            const Vertex end = cell.edge.other(a);
            if (i == p || i == q) {
                uncovered.insert(cell);
                continue;
            }
            v = end == p ? half * bar(i, p, q) : -half * bar(i, p, q);
        } else {
            spectator_at_a.insert(cell);
            if (!cell.edge.touches(p) && !cell.edge.touches(q)) {
                v = half * (bar(p, x, y) + bar(q, x, y));
            } else {
                const Vertex pole = cell.edge.touches(q) ? q : p;
                const Vertex mirror = pole == q ? p : q;
                const Vertex j = cell.edge.other(pole);
                // value of the move pole -> j
                Rational forward = bar(mirror, pole, j) + half * bar(j, pole, mirror);
                v = pole < j ? forward : Rational(-forward);
            }
        }
        out.set(cell, v);
    }

    LiftReport local;
    GaugePotential attempt = out;
    if (complete(attempt, c, uncovered)) {
        local.solved_cells = static_cast<int>(uncovered.size());
    } else {
        local.formulas_consistent = false;
        std::set<Cell1> unknown = uncovered;
        unknown.insert(spectator_at_a.begin(), spectator_at_a.end());
        attempt = out;
        if (!complete(attempt, c, unknown)) throw std::runtime_error("lift inconsistency");
        local.solved_cells = static_cast<int>(unknown.size());
    }
    if (!is_topological(attempt, c)) throw std::logic_error("lift produced a non-topological potential");
    if (report) *report = local;
    return attempt;
}

std::vector<Config> subdivide_path(const std::vector<Config>& path, Edge pq, Vertex a) {
    if (path.empty()) return {};
    std::vector<Config> out{path[0]};
    const auto moves = moves_of_path(path);
    for (std::size_t i = 0; i < moves.size(); ++i) {
        if (Edge(moves[i].from, moves[i].to) == pq) out.push_back(insert_vertex(moves[i].spectators, a));
        out.push_back(path[i + 1]);
    }
    return out;
}

std::vector<Config> contract_path(const std::vector<Config>& path, Edge pq, Vertex a) {
    auto has_a = [&](const Config& c) { return std::binary_search(c.begin(), c.end(), a); };
    if (path.empty()) return {};
    if (has_a(path.front()) || has_a(path.back())) throw std::invalid_argument("path endpoint occupies the new vertex");
    std::vector<Config> out{path.front()};
    for (std::size_t i = 1; i < path.size(); ++i) {
        if (!has_a(path[i])) {
            if (out.back() != path[i]) out.push_back(path[i]);
            continue;
        }
        // a particle steps onto a from p or q and must step off at the next move
        if (i + 1 >= path.size()) throw std::invalid_argument("path not contractible at the new vertex");
        const Config before = path[i - 1], after = path[i + 1];
        const Config rest = erase_vertex(path[i], a);
        auto enters = [&](const Config& c, Vertex end) { return c == insert_vertex(rest, end); };
        if (!(enters(before, pq.u) || enters(before, pq.v)) || !(enters(after, pq.u) || enters(after, pq.v)))
            throw std::invalid_argument("path not contractible at the new vertex");
    }
    return out;
}

Rational edge_phase(const EdgePhases& omega, Vertex from, Vertex to) {
    auto f = omega.find({from, to});
    auto b = omega.find({to, from});
    if (f != omega.end() && b != omega.end() && f->second != -b->second)
        throw std::invalid_argument("edge phases are not antisymmetric");
    if (f != omega.end()) return f->second;
    if (b != omega.end()) return -b->second;
    return 0;
}

GaugePotential build_n_particle(const GaugePotential& stat2, const EdgePhases& omega1, int n) {
    require_two(stat2);
    const Graph& g = stat2.graph();
    if (!is_sufficiently_subdivided(g, n)) throw std::invalid_argument("graph not sufficiently subdivided");
    if (!is_pure_statistics(stat2)) throw std::invalid_argument("two-particle potential is not pure statistics");
    if (!is_topological(stat2)) throw std::invalid_argument("two-particle potential is not topological");
    for (const auto& [e, v] : omega1) {
        if (!g.has_edge(e.from, e.to)) throw std::invalid_argument("edge phase on a non-edge");
        edge_phase(omega1, e.from, e.to);
    }
    const CellComplex c(g, n);
    GaugePotential out(g, n);
    for (const Cell1& cell : c.cells1()) {
        Rational v = edge_phase(omega1, cell.edge.u, cell.edge.v);
        for (Vertex r : cell.spectators) v += stat2.value(Cell1{{r}, cell.edge});
        out.set(cell, v);
    }
    if (!is_topological(out, c)) throw std::logic_error("n-particle potential is not topological");
    return out;
}

GaugePotential solve_from_fluxes(const CellComplex& c, const std::vector<std::pair<CellChain, Rational>>& targets) {
    const HomologyPresentation h(c, true);
    std::vector<CellChain> cycles;
    std::vector<Rational> values;
    for (const auto& [z, v] : targets) {
        if (!c.is_cycle(z)) throw std::invalid_argument("chain is not a cycle");
        cycles.push_back(z);
        values.push_back(v);
    }
    auto sol = h.realize(cycles, values);
    if (!sol) throw std::runtime_error("unrealizable phase");
    return potential_from_values(c, *sol);
}

}  // namespace confspace
