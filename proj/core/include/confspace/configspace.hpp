#pragma once

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "confspace/graph.hpp"
#include "confspace/integer.hpp"
#include "confspace/matrix.hpp"

namespace confspace {

// Sorted set of occupied vertices.
using Config = std::vector<Vertex>;

struct Cell0 {
    Config vertices;
    auto operator<=>(const Cell0&) const = default;
};

// Canonical orientation: edge.u -> edge.v.
struct Cell1 {
    Config spectators;
    Edge edge;
    auto operator<=>(const Cell1&) const = default;
};

struct Cell2 {
    Config spectators;
    Edge first;
    Edge second;
    auto operator<=>(const Cell2&) const = default;
};

// One particle moves from -> to while the spectators stay put.
struct Move {
    Config spectators;
    Vertex from = 0;
    Vertex to = 0;

    Cell1 cell() const { return {spectators, Edge(from, to)}; }
    int sign() const { return from < to ? 1 : -1; }
    auto operator<=>(const Move&) const = default;
};

// Integer 1-chain keyed by canonical cells; zero coefficients are never stored.
using CellChain = std::map<Cell1, Integer>;

void add_move(CellChain& chain, const Move& m, const Integer& coefficient = 1);
void add_chain(CellChain& chain, const CellChain& other, const Integer& coefficient = 1);
CellChain negate(const CellChain& chain);

// Closed or open walk through configurations; consecutive configurations differ by one particle.
// Throws std::invalid_argument when two consecutive configurations are not one move apart.
std::vector<Move> moves_of_path(const std::vector<Config>& path);
CellChain chain_of_path(const std::vector<Config>& path);

Config insert_vertex(Config c, Vertex v);
Config erase_vertex(Config c, Vertex v);

class CellComplex {
public:
    CellComplex(const Graph& g, int n);

    const Graph& graph() const { return graph_; }
    int particles() const { return n_; }

    const std::vector<Cell0>& cells0() const { return c0_; }
    const std::vector<Cell1>& cells1() const { return c1_; }
    const std::vector<Cell2>& cells2() const { return c2_; }

    std::optional<int> index_of(const Cell0& c) const;
    std::optional<int> index_of(const Cell1& c) const;

    // rows = 0-cells, cols = 1-cells
    const SparseIntegerMatrix& boundary1() const { return d1_; }
    // rows = 1-cells, cols = 2-cells
    const SparseIntegerMatrix& boundary2() const { return d2_; }

    // Oriented boundary of a 2-cell: (a,c) -> (a,d) -> (b,d) -> (b,c) -> (a,c).
    CellChain boundary(const Cell2& c) const;

    // Throws "unknown cell" when the chain leaves the complex.
    std::vector<Integer> to_vector(const CellChain& chain) const;
    CellChain to_chain(const std::vector<Integer>& v) const;

    bool is_cycle(const CellChain& chain) const;

private:
    Graph graph_;
    int n_;
    std::vector<Cell0> c0_;
    std::vector<Cell1> c1_;
    std::vector<Cell2> c2_;
    std::map<Cell0, int> i0_;
    std::map<Cell1, int> i1_;
    SparseIntegerMatrix d1_;
    SparseIntegerMatrix d2_;
};

struct CellCounts {
    std::size_t c0, c1, c2;
    bool operator==(const CellCounts&) const = default;
};

CellCounts cell_counts(const CellComplex& c);

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<Config> subsets(int n, int k);

}  // namespace confspace
