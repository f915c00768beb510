#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ktc/functor.hpp"
#include "ktc/rng.hpp"

using namespace ktc;

static DeltaComplex delta_point() {
    DeltaComplex x;
    x.add_vertex();
    return x;
}

static DeltaComplex delta_interval() { return delta_from_simplicial(full_simplex(1)); }
static DeltaComplex delta_triangle() { return delta_from_simplicial(full_simplex(2)); }
static DeltaComplex delta_circle() { return delta_from_simplicial(boundary_simplex(2)); }
static DeltaComplex delta_sphere() { return delta_from_simplicial(boundary_simplex(3)); }

TEST_CASE("mapping cylinders and tori") {
    // identity cylinder = product with an interval
    CubeComplex cyc = cycle_complex(4);
    MappingCylinder M = mapping_cylinder(cyc, cyc, CellularMap::identity(cyc), 3);
    M.complex.validate();
    CHECK(M.complex.num_cells() == cyc.num_cells() * 7);  // path(3) has 7 cells
    CHECK(homology(M.complex) == homology(cyc));

    // 2-fold cover of a 4-cycle by an 8-cycle
    CubeComplex c8 = cycle_complex(8);
    CellularMap cover;
    cover.target.resize(c8.num_cells());
    cover.sym.resize(c8.num_cells());
    for (Cell v = 0; v < 8; ++v) {
        cover.target[v] = v % 4;
        cover.sym[v] = SignedPerm::identity(0);
    }
    for (Cell e = 0; e < 8; ++e) {
        cover.target[8 + e] = 4 + (e % 4);
        cover.sym[8 + e] = SignedPerm::identity(1);
    }
    MappingCylinder M2 = mapping_cylinder(c8, cycle_complex(4), cover, 4);
    M2.complex.validate();
    CHECK(homology(M2.complex) == homology(cycle_complex(4)));

    // mapping torus of a point is a circle of n edges
    CubeComplex pt;
    pt.add_vertex();
    MappingTorus T = mapping_torus(pt, CellularMap::identity(pt), 8);
    T.complex.validate();
    CHECK(T.complex.count_dim(0) == 8);
    CHECK(T.complex.count_dim(1) == 8);
    CHECK(homology(T.complex).at(1).betti == 1);

    // mapping torus of the identity on a circle is the 2-torus
    MappingTorus T2 = mapping_torus(cyc, CellularMap::identity(cyc), 4);
    T2.complex.validate();
    HomologyGroups h = homology(T2.complex);
    CHECK(h.at(0).betti == 1);
    CHECK(h.at(1).betti == 2);
    CHECK(h.at(2).betti == 1);

    // H(M(n,f)) = H(U) across random covering maps of cycles
    Rng rng(31337);
    for (int trial = 0; trial < 12; ++trial) {
        int m = 3 + static_cast<int>(rng.below(4));
        int k = 1 + static_cast<int>(rng.below(3));
        int n = 1 + static_cast<int>(rng.below(4));
        CubeComplex up = cycle_complex(m);
        CubeComplex down = cycle_complex(k * m);
        CellularMap f;
        f.target.resize(down.num_cells());
        f.sym.resize(down.num_cells());
        for (int v = 0; v < k * m; ++v) {
            f.target[v] = v % m;
            f.sym[v] = SignedPerm::identity(0);
        }
        for (int e = 0; e < k * m; ++e) {
            f.target[k * m + e] = m + (e % m);
            f.sym[k * m + e] = SignedPerm::identity(1);
        }
        MappingCylinder M = mapping_cylinder(down, up, f, n);
        M.complex.validate();
        CHECK(homology(M.complex) == homology(up));
    }
}

TEST_CASE("functor base cases with the mock kit") {
    AcyclicKit kit = mock_kit();

    // a single vertex
    KtResult r0 = kt_build(kit, delta_point());
    CHECK(r0.T.num_cells() == 1);
    CHECK(homology(r0.T).at(0).betti == 1);
    CHECK(r0.dim_t == 0);
    CHECK(r0.U.num_cells() == 1);  // just the wedge point

    // one edge: the 4-path
    KtResult r1 = kt_build(kit, delta_interval());
    r1.T.validate();
    CHECK(r1.T.count_dim(0) == 5);
    CHECK(r1.T.count_dim(1) == 4);
    CHECK(r1.dim_t == 1);
    CHECK(reduced_homology(r1.T).all_trivial());
    CHECK(r1.dim_u == 3);
    CHECK(is_acyclic(r1.U));
    r1.i_map.validate(r1.T, r1.U);
    // the involution is trivial on a 1-dimensional T
    CHECK(r1.tau.map.is_identity());

    // circle: the 12-cycle
    KtResult rc = kt_build(kit, delta_circle());
    rc.T.validate();
    CHECK(rc.T.count_dim(0) == 12);
    CHECK(rc.T.count_dim(1) == 12);
    HomologyGroups h = homology(rc.T);
    CHECK(h.at(0).betti == 1);
    CHECK(h.at(1).betti == 1);
}

TEST_CASE("functor on the triangle and the 2-sphere with the mock kit") {
    AcyclicKit kit = mock_kit();

    KtResult r2 = kt_build(kit, delta_triangle());
    r2.T.validate();
    CHECK(reduced_homology(r2.T).all_trivial());
    CHECK(r2.dim_t == 3);  // the attached copy of U' is three-dimensional
    CHECK(r2.tau.map.is_identity());
    FiltrationReport rep = filtration_check(r2, delta_triangle());
    CHECK(rep.pass);
    for (auto& lvl : rep.levels) CHECK(lvl.rank == lvl.expected_rank);
    CHECK(label_union_laws(r2, delta_triangle()));
    // the labeled 1-skeleton part is the 12-cycle and is convex in T
    auto t1 = r2.t_cells_of(delta_triangle().skeleton_cells(1));
    CHECK(r2.T.is_subcomplex(t1));
    SubcomplexResult s1 = extract_subcomplex(r2.T, t1);
    CHECK(s1.complex.count_dim(1) == 12);
    CHECK(is_combinatorially_convex(r2.T, t1));

    KtResult rs = kt_build(kit, delta_sphere());
    rs.T.validate();
    HomologyGroups h = homology(rs.T);
    CHECK(h.at(0).betti == 1);
    CHECK(h.at(1).trivial());
    CHECK(h.at(2).betti == 1);
    CHECK(h.at(3).trivial());
    FiltrationReport rep2 = filtration_check(rs, delta_sphere());
    CHECK(rep2.pass);
    // relative ranks are the simplex counts (4, 6, 4)
    REQUIRE(rep2.levels.size() == 3);
    CHECK(rep2.levels[0].rank == 4);
    CHECK(rep2.levels[1].rank == 6);
    CHECK(rep2.levels[2].rank == 4);
    CHECK(label_union_laws(rs, delta_sphere()));
    // U is acyclic at every stage of the construction
    CHECK(is_acyclic(rs.U));
    CHECK(is_acyclic(quotient_by_involution(rs.U, rs.tau_u).complex));
}

TEST_CASE("functoriality of the construction") {
    AcyclicKit kit = mock_kit();
    DeltaComplex I = delta_interval();
    DeltaComplex D2 = delta_triangle();
    DeltaComplex B2 = delta_circle();

    KtResult ktI = kt_build(kit, I);
    KtResult ktD = kt_build(kit, D2);
    KtResult ktB = kt_build(kit, B2);

    // identity is the identity
    DeltaMap idm = DeltaMap::identity(D2);
    CellularMap tid = kt_map(idm, D2, D2, ktD, ktD);
    CHECK(tid.is_identity());

    // vertex inclusions into the interval hit the two endpoints of the 4-path
    DeltaComplex P = delta_point();
    KtResult ktP = kt_build(kit, P);
    DeltaMap v0, v1;
    v0.image = {0};
    v1.image = {1};
    CellularMap m0 = kt_map(v0, P, I, ktP, ktI);
    CellularMap m1 = kt_map(v1, P, I, ktP, ktI);
    CHECK(m0.target[0] != m1.target[0]);
    CHECK(ktI.T.dim(m0.target[0]) == 0);

    // the boundary inclusion lands on the labeled subcomplex of T
    // (boundary_simplex(2) and full_simplex(2) list faces in the same order)
    DeltaMap incl;
    incl.image.resize(B2.size());
    for (uint32_t s = 0; s < B2.size(); ++s) incl.image[s] = s;  // shared face order
    incl.validate(B2, D2);
    CellularMap tincl = kt_map(incl, B2, D2, ktB, ktD);
    std::set<Cell> image(tincl.target.begin(), tincl.target.end());
    std::vector<uint32_t> bd_simplices;
    for (uint32_t s = 0; s < D2.size(); ++s)
        if (D2.dims[s] <= 1) bd_simplices.push_back(s);
    auto labeled = ktD.t_cells_of(bd_simplices);
    std::set<Cell> labeled_set(labeled.begin(), labeled.end());
    CHECK(image == labeled_set);
    CHECK(is_combinatorially_convex(ktD.T, labeled));

    // composition: vertex -> interval -> triangle
    DeltaMap e_in;  // interval onto the edge {0,1} of the triangle
    e_in.image.resize(I.size());
    e_in.image[0] = 0;
    e_in.image[1] = 1;
    e_in.image[2] = 3;  // the edge (0,1) of full_simplex(2) in face order
    e_in.validate(I, D2);
    CellularMap tE = kt_map(e_in, I, D2, ktI, ktD);
    CellularMap lhs = kt_map(DeltaMap::compose(e_in, v0), P, D2, ktP, ktD);
    CellularMap rhs = CellularMap::compose(tE, m0);
    CHECK(lhs.target == rhs.target);
}

TEST_CASE("telescope construction") {
    AcyclicKit kit = mock_kit();
    std::vector<DeltaComplex> corpus = {delta_interval(), delta_circle(), delta_triangle(), delta_sphere()};
    {
        // dunce hat (subdivided into category C) and the two-triangle torus
        DeltaComplex dunce;
        uint32_t v = dunce.add_vertex();
        uint32_t e = dunce.add_simplex(1, {v, v});
        dunce.add_simplex(2, {e, e, e});
        corpus.push_back(barycentric_subdivision(dunce));
        DeltaComplex tt;
        uint32_t w = tt.add_vertex();
        uint32_t a = tt.add_simplex(1, {w, w});
        uint32_t b = tt.add_simplex(1, {w, w});
        uint32_t c = tt.add_simplex(1, {w, w});
        tt.add_simplex(2, {b, c, a});
        tt.add_simplex(2, {b, c, a});
        corpus.push_back(tt);
        corpus.push_back(delta_from_simplicial(full_simplex(3)));
        corpus.push_back(barycentric_subdivision(delta_circle()));
        corpus.push_back(barycentric_subdivision(delta_triangle()));
        corpus.push_back(delta_point());
    }
    for (auto& X : corpus) {
        KtResult kt = kt_build(kit, X, {false});
        CubeComplex tp = t_prime_build(kit, X);
        tp.validate();
        CHECK(homology(tp) == homology(kt.T));
    }
    // one edge: a cylinder over two points glued into the 4-path
    CubeComplex tI = t_prime_build(kit, delta_interval());
    CHECK(tI.dimension() == 1);
    CHECK(tI.count_dim(1) == 4 + 2 * 4);  // the 4-path plus two length-4 whiskers
}

TEST_CASE("three-dimensional inputs with the mock kit") {
    AcyclicKit kit = mock_kit();
    DeltaComplex d3 = delta_from_simplicial(full_simplex(3));
    KtResult r = kt_build(kit, d3, {false});
    r.T.validate();
    CHECK(reduced_homology(r.T).all_trivial());
    FiltrationReport f = filtration_check(r, d3);
    CHECK(f.pass);
    REQUIRE(f.levels.size() == 4);
    CHECK(f.levels[0].rank == 4);
    CHECK(f.levels[1].rank == 6);
    CHECK(f.levels[2].rank == 4);
    CHECK(f.levels[3].rank == 1);

    DeltaComplex b4 = delta_from_simplicial(boundary_simplex(4));
    KtResult rs = kt_build(kit, b4, {false});
    HomologyGroups h = homology(rs.T);
    CHECK(h.at(0).betti == 1);
    CHECK(h.at(1).trivial());
    CHECK(h.at(2).trivial());
    CHECK(h.at(3).betti == 1);
    CHECK(h.at(4).trivial());
    CHECK(filtration_check(rs, b4).pass);
}

TEST_CASE("dimension bookkeeping across small inputs") {
    AcyclicKit kit = mock_kit();
    // dim T: 0 -> 0, 1 -> 1, 2 -> 3 (driven by the 3-dimensional U' pieces)
    CHECK(kt_build(kit, delta_point()).dim_t == 0);
    CHECK(kt_build(kit, delta_interval()).dim_t == 1);
    CHECK(kt_build(kit, delta_circle()).dim_t == 1);
    CHECK(kt_build(kit, delta_triangle()).dim_t == 3);
    CHECK(kt_build(kit, delta_sphere()).dim_t == 3);
}

TEST_CASE("the genuine pair: structure and the other gluing choice") {
    KitBuildResult a = build_aa_pair(false);
    a.kit.validate_structure();
    CHECK(a.kit.dim_a == 2);
    CHECK(a.kit.dim_aprime == 3);
    // the fixed set is exactly A
    std::vector<Cell> fixed = fixed_cells(a.kit.aprime, a.kit.tau);
    CHECK(fixed == a.kit.a_cells);
    // the alternative equivariant petal matching yields an isomorphic pair
    KitBuildResult b = build_aa_pair(true);
    CellularMap iso = aa_pair_gluing_isomorphism(a, b);
    // the isomorphism carries A onto A
    std::vector<Cell> image_of_a;
    for (Cell c : a.kit.a_cells) image_of_a.push_back(iso.target[c]);
    std::sort(image_of_a.begin(), image_of_a.end());
    CHECK(image_of_a == b.kit.a_cells);

    // functoriality with the genuine kit on the smallest inputs
    DeltaComplex P;
    P.add_vertex();
    DeltaComplex I = delta_interval();
    KtResult ktP = kt_build(a.kit, P);
    KtResult ktI = kt_build(a.kit, I);
    DeltaMap v0, v1;
    v0.image = {0};
    v1.image = {1};
    CellularMap m0 = kt_map(v0, P, I, ktP, ktI);
    CellularMap m1 = kt_map(v1, P, I, ktP, ktI);
    CHECK(m0.target[0] != m1.target[0]);
    CHECK(ktI.T.dim(m0.target[0]) == 0);
    CHECK(is_acyclic(ktI.U));
}

TEST_CASE("category C is enforced") {
    AcyclicKit kit = mock_kit();
    DeltaComplex dunce;
    uint32_t v = dunce.add_vertex();
    uint32_t e = dunce.add_simplex(1, {v, v});
    dunce.add_simplex(2, {e, e, e});
    CHECK_THROWS_AS(kt_build(kit, dunce), Error);
    // its barycentric subdivision is fine
    KtResult r = kt_build(kit, barycentric_subdivision(dunce));
    CHECK(reduced_homology(r.T).all_trivial());
}
