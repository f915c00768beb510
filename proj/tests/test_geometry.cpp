#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ktc/hyperplanes.hpp"
#include "ktc/acyclic_complexes.hpp"
#include "ktc/rng.hpp"
#include "fixtures.hpp"

using namespace ktc;
using namespace ktc_tests;

static CubeComplex grid(int a, int b) { return product(path_complex(a), path_complex(b)); }

static CubeComplex random_tree(Rng& rng, int n) {
    CubeComplex c;
    c.add_vertex();
    SignedPerm id0 = SignedPerm::identity(0);
    std::vector<Cell> verts = {0};
    for (int i = 1; i < n; ++i) {
        Cell parent = verts[rng.below(verts.size())];
        Cell v = c.add_vertex();
        c.add_cell(1, {{parent, id0}, {v, id0}});
        verts.push_back(v);
    }
    return c;
}

TEST_CASE("hyperplanes of cubes, paths, grids") {
    for (int n = 1; n <= 4; ++n) {
        CubeComplex c = standard_cube(n);
        HyperplaneDecomposition d = hyperplanes(c);
        CHECK(d.num_pairs == static_cast<uint32_t>(n));
    }
    CubeComplex p3 = path_complex(3);
    CHECK(hyperplanes(p3).num_pairs == 3);
    CubeComplex g22 = grid(2, 2);
    CHECK(hyperplanes(g22).num_pairs == 4);

    // torus fails the preconditions (not cubical)
    CHECK_THROWS_AS(hyperplanes(one_square_torus()), Error);
}

TEST_CASE("half-spaces of a square and a cube") {
    CubeComplex sq = single_square();
    HyperplaneDecomposition d = hyperplanes(sq);
    REQUIRE(d.num_pairs == 2);
    for (uint32_t p = 0; p < 2; ++p) {
        auto hs = d.halfspace_vertices(p);
        CHECK(hs[0].size() == 2);
        CHECK(hs[1].size() == 2);
    }
    CubeComplex cube = standard_cube(3);
    HyperplaneDecomposition dc = hyperplanes(cube);
    for (uint32_t p = 0; p < dc.num_pairs; ++p) {
        auto hs = dc.halfspace_vertices(p);
        CHECK(hs[0].size() == 4);
        CHECK(hs[1].size() == 4);
    }
}

TEST_CASE("separating pairs equal skeleton distance") {
    Rng rng(424242);
    std::vector<CubeComplex> corpus;
    for (int n = 1; n <= 4; ++n) corpus.push_back(standard_cube(n));
    corpus.push_back(grid(3, 4));
    corpus.push_back(grid(5, 2));
    for (int i = 0; i < 4; ++i) corpus.push_back(random_tree(rng, 3 + static_cast<int>(rng.below(10))));
    for (int i = 0; i < 6; ++i) {
        CubeComplex a = random_tree(rng, 2 + static_cast<int>(rng.below(4)));
        CubeComplex b = random_tree(rng, 2 + static_cast<int>(rng.below(4)));
        corpus.push_back(product(a, b));
    }
    for (auto& c : corpus) {
        HyperplaneDecomposition d = hyperplanes(c);
        std::vector<Cell> verts;
        for (Cell x = 0; x < c.num_cells(); ++x)
            if (c.dim(x) == 0) verts.push_back(x);
        for (Cell v : verts)
            for (Cell w : verts) CHECK(separating_pairs(d, v, w) == skeleton_distance(c, v, w));
    }
    // antipodal corners of the 3-cube: distance 3 and 3 separating pairs
    CubeComplex cube = standard_cube(3);
    HyperplaneDecomposition d = hyperplanes(cube);
    CHECK(skeleton_distance(cube, 0, 7) == 3);
    CHECK(separating_pairs(d, 0, 7) == 3);
    CHECK(separating_pairs(d, 2, 2) == 0);
}

TEST_CASE("convex hulls") {
    CubeComplex sq = single_square();
    HyperplaneDecomposition d = hyperplanes(sq);
    // a single vertex
    CHECK(convex_hull(sq, d, {0}) == std::vector<Cell>{0});
    // two adjacent corners span the shared edge
    std::vector<Cell> h = convex_hull(sq, d, {0, 1});
    std::sort(h.begin(), h.end());
    CHECK(h == std::vector<Cell>{0, 1, 6});  // v00, v10 and the bottom edge
    // two antipodal corners of a cube span the whole cube
    CubeComplex cube = standard_cube(3);
    HyperplaneDecomposition dc = hyperplanes(cube);
    std::vector<Cell> hc = convex_hull(cube, dc, {0, 7});
    CHECK(hc.size() == cube.num_cells());
    CHECK_THROWS_AS(convex_hull(cube, dc, {}), Error);

    // hull properties on a grid: contains input, idempotent, convex, monotone
    CubeComplex g = grid(4, 3);
    HyperplaneDecomposition dg = hyperplanes(g);
    Rng rng(99);
    std::vector<Cell> verts;
    for (Cell x = 0; x < g.num_cells(); ++x)
        if (g.dim(x) == 0) verts.push_back(x);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Cell> input;
        size_t k = 1 + rng.below(4);
        for (size_t i = 0; i < k; ++i) input.push_back(verts[rng.below(verts.size())]);
        std::vector<Cell> hull = convex_hull(g, dg, input);
        for (Cell v : input) CHECK(std::count(hull.begin(), hull.end(), v) == 1);
        CHECK(g.is_subcomplex(hull));
        CHECK(is_combinatorially_convex(g, hull));
        // idempotence
        std::vector<Cell> hv;
        for (Cell c : hull)
            if (g.dim(c) == 0) hv.push_back(c);
        std::vector<Cell> again = convex_hull(g, dg, hv);
        std::sort(hull.begin(), hull.end());
        std::sort(again.begin(), again.end());
        CHECK(hull == again);
        // monotone in the input
        if (input.size() > 1) {
            std::vector<Cell> sub(input.begin(), input.begin() + input.size() - 1);
            std::vector<Cell> smaller = convex_hull(g, dg, sub);
            for (Cell c : smaller) CHECK(std::binary_search(hull.begin(), hull.end(), c));
        }
    }

    // vertices are determined by their half-space membership vectors
    for (auto& c : {grid(3, 3), standard_cube(3)}) {
        HyperplaneDecomposition dd = hyperplanes(c);
        std::set<std::vector<int>> sigs;
        size_t nv = 0;
        for (Cell v = 0; v < c.num_cells(); ++v) {
            if (c.dim(v) != 0) continue;
            ++nv;
            std::vector<int> sig;
            for (uint32_t p = 0; p < dd.num_pairs; ++p) sig.push_back(dd.side(p, v));
            sigs.insert(sig);
        }
        CHECK(sigs.size() == nv);
    }
}

TEST_CASE("fixed points of finite automorphism groups") {
    // half-turn of a single square: the square itself is the invariant cube
    CubeComplex sq = single_square();
    CellularMap rot;
    rot.target = {3, 2, 1, 0, 5, 4, 7, 6, 8};
    rot.sym.resize(9);
    for (Cell c = 0; c < 9; ++c) rot.sym[c] = SignedPerm::identity(sq.dim(c));
    // edges flip orientation under the half turn
    rot.sym[4] = SignedPerm{{-1}};
    rot.sym[5] = SignedPerm{{-1}};
    rot.sym[6] = SignedPerm{{-1}};
    rot.sym[7] = SignedPerm{{-1}};
    rot.sym[8] = SignedPerm{{-1, -2}};
    rot.validate(sq, sq);
    Cell fp = fixed_point(sq, {rot});
    CHECK(sq.dim(fp) == 2);

    // edge swap on a single edge: the edge's midpoint is fixed
    CubeComplex e = path_complex(1);
    CellularMap swap;
    swap.target = {1, 0, 2};
    swap.sym = {SignedPerm::identity(0), SignedPerm::identity(0), SignedPerm{{-1}}};
    swap.validate(e, e);
    Cell fe = fixed_point(e, {swap});
    CHECK(e.dim(fe) == 1);

    // the octagon complex with its involution: the central vertex
    OctagonComplexResult Y = octagon_complex();
    Cell fy = fixed_point(Y.built.complex, {Y.tau.map});
    CHECK(fy == Y.built.center);

    CHECK(ascending_chain_check(sq));
}
