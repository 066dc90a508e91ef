#include <doctest.h>

#include <functional>
#include <random>

#include "oracles.hpp"
#include "ptolemy/decomposition.hpp"
#include "ptolemy/enumerate.hpp"
#include "ptolemy/ptolemy.hpp"

using namespace ptolemy;

namespace {

Region leaf(int a, int b) { return Region{RegionKind::DegenerateLeaf, {a, b}, {}}; }

// Region over `boundary` whose non-base edges all carry leaves unless given.
Region cell(RegionKind kind, std::vector<int> boundary, std::vector<GluedChild> glued = {}) {
    Region r{kind, boundary, {}};
    for (std::size_t j = 0; j + 1 < boundary.size(); ++j) {
        int a = boundary[j], b = boundary[j + 1];
        bool found = false;
        for (auto& g : glued)
            if (g.a == a && g.b == b) {
                r.children.push_back(g);
                found = true;
            }
        if (!found) r.children.push_back(GluedChild{a, b, leaf(a, b)});
    }
    return r;
}

bool all_triangles(const Region& r) {
    if (r.kind == RegionKind::Clique) return false;
    if (r.kind == RegionKind::EmptyCell && r.boundary.size() != 3) return false;
    for (const auto& c : r.children)
        if (!all_triangles(c.region)) return false;
    return true;
}

void check_invariants(const Region& r) {
    switch (r.kind) {
        case RegionKind::DegenerateLeaf:
            REQUIRE(r.boundary.size() == 2);
            REQUIRE(r.children.empty());
            break;
        case RegionKind::EmptyCell: REQUIRE(r.boundary.size() >= 3); break;
        case RegionKind::Clique: REQUIRE(r.boundary.size() >= 4); break;
    }
    for (const auto& c : r.children) check_invariants(c.region);
}

}  // namespace

TEST_CASE("decompose a square with one diagonal") {
    CellDecomposition cd = decompose(Diagram(4, {{1, 3}}));
    Region expected = cell(RegionKind::EmptyCell, {1, 3, 4}, {GluedChild{1, 3, cell(RegionKind::EmptyCell, {1, 2, 3})}});
    CHECK(cd.n == 4);
    CHECK(cd.root == expected);
    CHECK(to_string(cd) ==
          "(EmptyCell boundary=[1,3,4] children=[edge=(1,3): (EmptyCell boundary=[1,2,3] children=["
          "edge=(1,2): (DegenerateLeaf boundary=[1,2] children=[]), "
          "edge=(2,3): (DegenerateLeaf boundary=[2,3] children=[])]), "
          "edge=(3,4): (DegenerateLeaf boundary=[3,4] children=[])])");
}

TEST_CASE("decompose a full square") {
    CellDecomposition cd = decompose(Diagram(4, {{1, 3}, {2, 4}}));
    CHECK(cd.root == cell(RegionKind::Clique, {1, 2, 3, 4}));
}

TEST_CASE("decompose rejects non-Ptolemy diagrams with the offending face") {
    CHECK_THROWS_AS(decompose(Diagram(8, {{1, 3}, {1, 5}, {2, 7}})), NotPtolemy);
    auto r = try_decompose(Diagram(5, {{1, 3}, {2, 4}}));
    REQUIRE(std::holds_alternative<NonPtolemyFace>(r));
    CHECK(std::get<NonPtolemyFace>(r).face == std::vector<int>{1, 2, 3, 4, 5});
    try {
        decompose(Diagram(5, {{1, 3}, {2, 4}}));
        FAIL("expected NotPtolemy");
    } catch (const NotPtolemy& e) {
        CHECK(e.face() == std::vector<int>{1, 2, 3, 4, 5});
        CHECK(std::string(e.what()).find("[1,2,3,4,5]") != std::string::npos);
    }
}

TEST_CASE("degenerate and triangle decompositions") {
    CHECK(decompose(Diagram(2)).root == leaf(1, 2));
    CHECK(recompose(CellDecomposition{2, leaf(1, 2)}) == Diagram(2));
    CHECK(decompose(Diagram(3)).root == cell(RegionKind::EmptyCell, {1, 2, 3}));
}

TEST_CASE("recompose examples") {
    CHECK(recompose(CellDecomposition{4, cell(RegionKind::EmptyCell, {1, 2, 3, 4})}) == Diagram(4));
    CHECK(recompose(CellDecomposition{4, cell(RegionKind::Clique, {1, 2, 3, 4})}) == Diagram(4, {{1, 3}, {2, 4}}));
    CHECK(recompose(decompose(Diagram(4, {{1, 3}}))) == Diagram(4, {{1, 3}}));
    // pentagon clique glued to a square clique along {1,5} in a 7-gon
    Region inner = cell(RegionKind::Clique, {1, 2, 3, 4, 5});
    CellDecomposition cd{7, cell(RegionKind::Clique, {1, 5, 6, 7}, {GluedChild{1, 5, inner}})};
    Diagram dg = recompose(cd);
    CHECK(dg.size() == 5 + 1 + 2);
    CHECK(is_ptolemy_pairwise(dg));
    CHECK(decompose(dg) == cd);
}

TEST_CASE("recompose rejects malformed trees") {
    auto bad = [](int n, Region r) { CHECK_THROWS_AS(recompose(CellDecomposition{n, std::move(r)}), InvalidInput); };
    bad(4, cell(RegionKind::Clique, {1, 3, 4}));                // triangle clique
    bad(4, cell(RegionKind::EmptyCell, {1, 4}));                // two-vertex cell
    bad(5, cell(RegionKind::EmptyCell, {1, 2, 3, 4}));          // does not reach N
    bad(4, cell(RegionKind::EmptyCell, {1, 3, 2, 4}));          // not increasing
    bad(4, cell(RegionKind::EmptyCell, {1, 3, 4}));             // leaf glued across a diagonal
    Region r = cell(RegionKind::EmptyCell, {1, 2, 3, 4});
    r.children.pop_back();
    bad(4, r);
    Region wrong_edge = cell(RegionKind::EmptyCell, {1, 2, 3, 4});
    std::swap(wrong_edge.children[0], wrong_edge.children[1]);
    bad(4, wrong_edge);
    bad(3, Region{RegionKind::DegenerateLeaf, {1, 3}, {}});
}

TEST_CASE("text form round trip and parse errors") {
    std::mt19937_64 rng(3);
    for (int n = 2; n <= 8; ++n) {
        auto all = enumerate_recursive(n);
        for (int trial = 0; trial < 20; ++trial) {
            const Diagram& dg = all[rng() % all.size()];
            CellDecomposition cd = decompose(dg);
            CHECK(parse_decomposition(to_string(cd)) == cd);
        }
    }
    CHECK_THROWS_AS(parse_decomposition("(Square boundary=[1,2] children=[])"), InvalidInput);
    CHECK_THROWS_AS(parse_decomposition("(DegenerateLeaf boundary=[1,2] children=[]) x"), InvalidInput);
    CHECK_THROWS_AS(parse_decomposition("(EmptyCell boundary=[1,2,3] children=[])"), InvalidInput);
    CHECK_THROWS_AS(parse_decomposition("(EmptyCell boundary=[1,2,3"), InvalidInput);
}

TEST_CASE("round trips and kind invariants over all Ptolemy diagrams, N <= 8") {
    for (int n = 2; n <= 8; ++n) {
        for (const auto& dg : enumerate_recursive(n)) {
            CellDecomposition cd = decompose(dg);
            check_invariants(cd.root);
            REQUIRE(recompose(cd) == dg);
            REQUIRE(decompose(recompose(cd)) == cd);
        }
    }
}

TEST_CASE("nc exchanges empty cells and cliques on the same skeleton") {
    for (int n = 3; n <= 8; ++n) {
        for (const auto& dg : enumerate_recursive(n)) {
            CellDecomposition cd = decompose(dg);
            REQUIRE(decompose(nc(dg)) == exchange_cells_and_cliques(cd));
            REQUIRE((nc(dg) == dg) == all_triangles(cd.root));
        }
    }
}
