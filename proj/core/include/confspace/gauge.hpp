#pragma once

#include <map>
#include <utility>
#include <vector>

#include "confspace/configspace.hpp"
#include "confspace/homology.hpp"

namespace confspace {

// Exact rational phases (in turns) on the 1-cells of D^n(g); unset cells are 0.
class GaugePotential {
public:
    GaugePotential(Graph g, int n);

    const Graph& graph() const { return graph_; }
    int particles() const { return n_; }

    bool is_cell(const Cell1& c) const;

    // Value in the canonical orientation. Throws "unknown cell".
    Rational value(const Cell1& c) const;
    // Value along the move, negated against the canonical orientation.
    Rational value(const Move& m) const;

    void set(const Cell1& c, const Rational& v);
    void set(const Move& m, const Rational& v);

    // Nonzero values only, keyed by canonical cell.
    const std::map<Cell1, Rational>& values() const { return values_; }

    friend bool operator==(const GaugePotential& a, const GaugePotential& b) {
        return a.n_ == b.n_ && a.graph_ == b.graph_ && a.values_ == b.values_;
    }

private:
    Graph graph_;
    int n_;
    std::map<Cell1, Rational> values_;
};

GaugePotential operator+(const GaugePotential& a, const GaugePotential& b);
GaugePotential operator-(const GaugePotential& a, const GaugePotential& b);

GaugePotential potential_from_values(const CellComplex& c, const std::vector<Rational>& values);

Rational flux(const GaugePotential& p, const CellChain& z);
Rational flux(const GaugePotential& p, const std::vector<Config>& path);

// a == b modulo 1
bool same_flux(const Rational& a, const Rational& b);

bool is_topological(const GaugePotential& p, const CellComplex& c);
bool is_topological(const GaugePotential& p);

struct AbStatisticsSplit {
    GaugePotential ab;
    GaugePotential stat;
};

// Two-particle potentials only. Throws "no spectators" when V < 3.
AbStatisticsSplit ab_statistics_split(const GaugePotential& p);

// Spectator-independent on every edge.
bool is_pure_ab(const GaugePotential& p);
// Spectator average zero on every edge.
bool is_pure_statistics(const GaugePotential& p);

struct LiftReport {
    bool formulas_consistent = true;  // explicit formulas plus the two uncovered cells sufficed
    int solved_cells = 0;             // cells assigned by the constraint solver
};

// Subdivides edge {p, q} of the potential's graph with new vertex a (which must be the next
// free vertex id). The new edges p-a, a-q replace p-q in the edge list.
GaugePotential lift_subdivision(const GaugePotential& p, Edge pq, Vertex a, LiftReport* report = nullptr);

// Path substitutions between a graph and its subdivision at edge {p, q} with new vertex a.
std::vector<Config> subdivide_path(const std::vector<Config>& path, Edge pq, Vertex a);
// contract_path throws when a particle rests on a while the other one moves.
std::vector<Config> contract_path(const std::vector<Config>& path, Edge pq, Vertex a);

// Directed-edge phases; a missing direction is the negation of the other one.
using EdgePhases = std::map<DirectedEdge, Rational>;

Rational edge_phase(const EdgePhases& omega, Vertex from, Vertex to);

// n-particle potential from a pure-statistics two-particle potential and single-particle phases.
GaugePotential build_n_particle(const GaugePotential& stat2, const EdgePhases& omega1, int n);

// Topological potential with the given fluxes on the target cycles. Throws "unrealizable phase".
GaugePotential solve_from_fluxes(const CellComplex& c, const std::vector<std::pair<CellChain, Rational>>& targets);

}  // namespace confspace
