#include <catch_amalgamated.hpp>

#include <random>

#include "confspace/homology.hpp"
#include "confspace/smith.hpp"
#include "corpus.hpp"
#include "oracle.hpp"

using namespace confspace;

namespace {

DenseIntegerMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int spread, double density) {
    std::uniform_int_distribution<int> value(-spread, spread);
    std::bernoulli_distribution keep(density);
    DenseIntegerMatrix m(rows, std::vector<Integer>(cols, 0));
    for (auto& row : m)
        for (auto& x : row)
            if (keep(rng)) x = value(rng);
    return m;
}

bool is_zero(const std::vector<Integer>& x) {
    return std::all_of(x.begin(), x.end(), [](const Integer& v) { return v == 0; });
}

}  // namespace

TEST_CASE("Smith normal form examples") {
    const DenseIntegerMatrix id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(smith_normal_form(id).factors == std::vector<Integer>{1, 1, 1});
    const DenseIntegerMatrix m{{2, 4}, {6, 8}};
    CHECK(testing::naive_smith_factors(m) == std::vector<Integer>{2, 4});
    const SmithForm s = smith_normal_form(m, {true, true});
    CHECK(s.factors == std::vector<Integer>{2, 4});
    CHECK(multiply(multiply(s.u_matrix(), m), s.v_matrix()) == s.diagonal());
    CHECK(smith_normal_form(DenseIntegerMatrix{{0, 0}, {0, 0}}).factors.empty());
    CHECK(smith_normal_form(SparseIntegerMatrix(0, 0)).factors.empty());
}

TEST_CASE("Smith normal form on random matrices") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        std::uniform_int_distribution<int> dim(1, 9);
        const DenseIntegerMatrix m = random_matrix(rng, dim(rng), dim(rng), trial % 3 == 0 ? 30 : 3, 0.5);
        const SmithForm s = smith_normal_form(m, {true, true});
        INFO("trial " << trial);
        CHECK(s.factors == testing::naive_smith_factors(m));
        for (std::size_t i = 1; i < s.factors.size(); ++i) CHECK(s.factors[i] % s.factors[i - 1] == 0);
        CHECK(multiply(multiply(s.u_matrix(), m), s.v_matrix()) == s.diagonal());
        // the sparse path agrees with the dense one
        CHECK(smith_normal_form(from_dense(m)).factors == s.factors);
    }
}

TEST_CASE("Smith normal form keeps exact big entries") {
    const Integer big = Integer(1) << 80;
    const DenseIntegerMatrix m{{big, big + 1}, {big * 3, big * 3 + 6}};
    const SmithForm s = smith_normal_form(m, {true, true});
    CHECK(s.factors == testing::naive_smith_factors(m));
    CHECK(multiply(multiply(s.u_matrix(), m), s.v_matrix()) == s.diagonal());
}

TEST_CASE("solve modulo one") {
    // 2u = 1/3 (mod 1), e.g. u = 1/6
    SparseIntegerMatrix a(1, 1);
    a.add(0, 0, 2);
    auto u = solve_mod_one(a, {Rational(1, 3)});
    REQUIRE(u);
    CHECK(is_integer(Rational(2) * (*u)[0] - Rational(1, 3)));
    // u1 + u2 = 1/2 and u1 + u2 = 1/3 together are inconsistent
    SparseIntegerMatrix b(2, 2);
    b.add(0, 0, 1), b.add(0, 1, 1), b.add(1, 0, 1), b.add(1, 1, 1);
    CHECK_FALSE(solve_mod_one(b, {Rational(1, 2), Rational(1, 3)}));
    CHECK(solve_mod_one(b, {Rational(1, 2), Rational(3, 2)}));
}

TEST_CASE("H1 examples") {
    CHECK(h1(CellComplex(graphs::cycle(3), 2)).to_string() == "Z");
    CHECK(h1(CellComplex(graphs::y_graph(), 2)).to_string() == "Z");
    CHECK(h1(CellComplex(graphs::lasso(), 2)).to_string() == "Z^2");
    CHECK(h1(CellComplex(graphs::complete(5), 2)).to_string() == "Z^6 + Z_2");
    CHECK(h1(CellComplex(graphs::path(2), 2)).to_string() == "0");
    CHECK(testing::naive_h1(graphs::lasso(), 2).to_string() == "Z^2");
}

TEST_CASE("H0 examples") {
    CHECK(h0(CellComplex(graphs::cycle(3), 2)).to_string() == "Z");
    CHECK(h0(CellComplex(graphs::path(3), 2)).to_string() == "Z");
    CHECK_THROWS_WITH(CellComplex(graphs::path(2), 0), "particle count must be positive");
    CHECK(h0(CellComplex(Graph(1, {}), 1)).to_string() == "Z");
    // two particles filling a single edge: one point
    CHECK(h0(CellComplex(graphs::path(2), 2)).to_string() == "Z");
    CHECK(h0(CellComplex(Graph(2, {}), 1)).to_string() == "Z^2");
}

TEST_CASE("group rendering") {
    CHECK(AbelianGroup{0, {}}.to_string() == "0");
    CHECK(AbelianGroup{1, {}}.to_string() == "Z");
    CHECK(AbelianGroup{6, {2}}.to_string() == "Z^6 + Z_2");
    CHECK(AbelianGroup{0, {2, 4}}.to_string() == "Z_2 + Z_4");
    for (const std::string s : {"0", "Z", "Z^7", "Z^6 + Z_2", "Z_2 + Z_6"}) CHECK(parse_group(s).to_string() == s);
    CHECK_THROWS(parse_group("Z^"));
}

TEST_CASE("homology agrees with the independent oracle") {
    for (const Graph& g : testing::random_connected_graphs(40, 3, 7, 0.45, 23)) {
        INFO(g.name());
        CHECK(h1(CellComplex(g, 2)) == testing::naive_h1(g, 2));
    }
    for (const Graph& g : {graphs::complete(4), graphs::wheel(4), graphs::complete_bipartite(2, 3)}) {
        const Graph s = sufficiently_subdivide(g, 3).graph;
        CHECK(h1(CellComplex(s, 3)) == testing::naive_h1(s, 3));
    }
}

TEST_CASE("rank identity and connectivity") {
    std::vector<std::pair<Graph, int>> cases;
    for (const Graph& g : testing::random_connected_graphs(30, 3, 8, 0.4, 31)) cases.push_back({g, 2});
    cases.push_back({graphs::star(4, 2), 3});
    cases.push_back({sufficiently_subdivide(graphs::lasso(), 3).graph, 3});
    for (const auto& [g, n] : cases) {
        const CellComplex c(g, n);
        const HomologyPresentation h(c, false);
        INFO(g.name() << " n=" << n);
        CHECK(h.group().rank == static_cast<int>(c.cells1().size()) - h.rank_boundary1() - h.rank_boundary2());
        if (n < g.vertex_count()) CHECK(h.components() == 1);
        const auto t = h.group().torsion;
        for (std::size_t i = 1; i < t.size(); ++i) CHECK(t[i] % t[i - 1] == 0);
        for (const Integer& d : t) CHECK(d >= 2);
    }
}

TEST_CASE("homology coordinates") {
    const CellComplex tri(graphs::cycle(3), 2);
    const CellChain exchange = chain_of_path({{0, 1}, {0, 2}, {1, 2}, {0, 1}});
    const auto x = homology_coordinates(tri, exchange);
    REQUIRE(x.size() == 1);
    CHECK((x[0] == 1 || x[0] == -1));

    const CellComplex k5(graphs::complete(5), 2);
    const HomologyPresentation h(k5, true);
    for (const Cell2& cell : k5.cells2()) CHECK(is_zero(h.coordinates(k5.boundary(cell))));

    const CellChain loop = chain_of_path({{0, 1}, {0, 2}, {0, 3}, {0, 1}});
    CellChain shifted = loop;
    add_chain(shifted, k5.boundary(k5.cells2()[3]));
    add_chain(shifted, k5.boundary(k5.cells2()[7]), -2);
    CHECK(h.coordinates(shifted) == h.coordinates(loop));

    CellChain open;
    add_move(open, Move{{2}, 0, 1});
    CHECK_THROWS_WITH(h.coordinates(open), "chain is not a cycle");
}

TEST_CASE("torsion coordinates are residues") {
    const CellComplex k5(graphs::complete(5), 2);
    const HomologyPresentation h(k5, true);
    // exchange on a Y: center 0, arms 1, 2, 3
    const CellChain y = chain_of_path({{0, 1}, {1, 2}, {0, 2}, {2, 3}, {0, 3}, {1, 3}, {0, 1}});
    auto x = h.coordinates(y);
    REQUIRE(x.size() == 7);
    CHECK(x.back() == 1);
    CellChain twice = y;
    add_chain(twice, y);
    CHECK(is_zero(h.coordinates(twice)));
}

TEST_CASE("subdivision invariance") {
    for (const Graph& g : {graphs::cycle(3), graphs::lasso(), graphs::complete(4), graphs::star(3)}) {
        const Graph s = sufficiently_subdivide(g, 3).graph;
        const Graph once_more = subdivide_edge(s, 0).graph;
        CHECK(h1(CellComplex(s, 3)) == h1(CellComplex(once_more, 3)));
    }
    const Graph k4 = graphs::complete(4);
    CHECK(h1(CellComplex(k4, 2)) == h1(CellComplex(subdivide_edge(k4, 2).graph, 2)));
}
