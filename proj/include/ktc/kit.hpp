#pragma once

#include <cstdint>
#include <vector>

#include "acyclic_complexes.hpp"
#include "cellular_map.hpp"
#include "homology.hpp"

namespace ktc {

// The acyclic pair (A', A) with involution: A' locally CAT(0) and acyclic,
// A = fixed set of tau, A'/tau contractible, plus a base vertex a0 (the
// fixed point of the inner involution of A) and a closed 4-edge loop j in A
// starting there.
struct AcyclicKit {
    CubeComplex aprime;
    std::vector<Cell> a_cells;                 // the subcomplex A
    Involution tau;                            // on aprime
    Cell a0 = 0;                               // vertex of A
    std::vector<std::pair<Cell, int>> j_loop;  // 4 directed edges (cell, +1 forward / -1 reversed)
    int dim_a = 0, dim_aprime = 0;

    // A as a standalone complex plus id maps (computed once)
    SubcomplexResult a_sub;

    Cell j_vertex(int k) const {  // vertex after k steps of j, j_vertex(0) = a0
        if (k == 0) return a0;
        auto [e, d] = j_loop[k - 1];
        return aprime.endpoint(e, d > 0 ? 1 : 0);
    }

    void validate_structure() const {
        tau.validate(aprime);
        check_pointwise_fixed(aprime, tau);
        std::vector<Cell> fixed = fixed_cells(aprime, tau);
        std::vector<Cell> a_sorted = a_cells;
        std::sort(a_sorted.begin(), a_sorted.end());
        if (fixed != a_sorted) throw Error("KIT_FIXED_SET", "A is not the fixed point set of tau");
        if (!aprime.is_subcomplex(a_cells)) throw Error("KIT_FIXED_SET", "A is not a subcomplex");
        if (aprime.dim(a0) != 0) throw Error("KIT_BASEPOINT", "a0 must be a vertex");
        if (j_loop.size() != 4) throw Error("KIT_LOOP", "j must have 4 edges");
        std::vector<uint8_t> in_a(aprime.num_cells(), 0);
        for (Cell c : a_cells) in_a[c] = 1;
        Cell cur = a0;
        for (int k = 0; k < 4; ++k) {
            auto [e, d] = j_loop[k];
            if (!in_a[e]) throw Error("KIT_LOOP", "j leaves A");
            if (aprime.endpoint(e, d > 0 ? 0 : 1) != cur) throw Error("KIT_LOOP", "j is not a path");
            cur = aprime.endpoint(e, d > 0 ? 1 : 0);
        }
        if (cur != a0) throw Error("KIT_LOOP", "j is not closed");
        for (int k = 0; k < 4; ++k) {
            auto [e1, d1] = j_loop[k];
            auto [e2, d2] = j_loop[(k + 1) % 4];
            if (e1 == e2 && d1 == -d2) throw Error("KIT_LOOP", "j backtracks");
        }
    }

    // the heavy checks: acyclicity of A, A' and A'/tau
    void validate_acyclicity() const {
        if (!is_acyclic(aprime)) throw Error("KIT_NOT_ACYCLIC", "A' has nontrivial reduced homology");
        if (!is_acyclic(a_sub.complex)) throw Error("KIT_NOT_ACYCLIC", "A has nontrivial reduced homology");
        QuotientResult q = quotient_by_involution(aprime, tau);
        if (!is_acyclic(q.complex)) throw Error("KIT_NOT_ACYCLIC", "A'/tau has nontrivial reduced homology");
    }
};

// Trivial kit for pipeline tests: A = A' = a solid 3-cube with the identity
// involution; j runs around one square face.  Keeps every kit invariant
// and the dimension bookkeeping of the genuine kit's 3-dimensional A'.
inline AcyclicKit mock_kit() {
    AcyclicKit kit;
    kit.aprime = standard_cube(3);
    for (Cell c = 0; c < kit.aprime.num_cells(); ++c) kit.a_cells.push_back(c);
    kit.tau = Involution::identity(kit.aprime);
    // vertex (x,y,z) has id x + 2y + 4z in enumeration order
    auto v = [](int x, int y, int z) { return static_cast<Cell>(x + 2 * y + 4 * z); };
    auto find_edge = [&](Cell a, Cell b) -> std::pair<Cell, int> {
        for (Cell c = 0; c < kit.aprime.num_cells(); ++c) {
            if (kit.aprime.dim(c) != 1) continue;
            Cell p = kit.aprime.endpoint(c, 0), q = kit.aprime.endpoint(c, 1);
            if (p == a && q == b) return {c, 1};
            if (p == b && q == a) return {c, -1};
        }
        throw Error("KIT_LOOP", "edge not found");
    };
    kit.a0 = v(0, 0, 0);
    kit.j_loop = {find_edge(v(0, 0, 0), v(1, 0, 0)), find_edge(v(1, 0, 0), v(1, 1, 0)),
                  find_edge(v(1, 1, 0), v(0, 1, 0)), find_edge(v(0, 1, 0), v(0, 0, 0))};
    kit.dim_a = 3;
    kit.dim_aprime = 3;
    kit.a_sub = extract_subcomplex(kit.aprime, kit.a_cells);
    kit.validate_structure();
    return kit;
}

struct KitBuildResult {
    AcyclicKit kit;
    CubeComplex x1;              // the mapping torus stage (homology of a circle)
    std::vector<CellImage> y_to_a;  // witness: Y-cell -> A-cell of aprime (iso onto A)
    size_t y_cells = 0;
    // glue bookkeeping, for isomorphism checks between gluing choices
    std::vector<CellImage> from_x2, from_x3;
    CellularMap y_tau;  // the inner involution of the octagon complex
};

// The genuine pair: Y the octagon complex with involution tau'; X0 = Y x
// [0,8]; X1 the mapping torus identifying (y,8) ~ (tau' y, 0) with the
// involution (y,t) -> (tau' y, 8-t); X2 identifies the images of (y0,0) and
// (y0,4); X3 a fresh copy of Y glued to X2 along the 2-petal rose; A is the
// image of Y x {0}, pointwise fixed.
//
// Two equivariant petal matchings exist for the rose gluing; swap_rose_petals
// selects the other one (the results are isomorphic).
inline KitBuildResult build_aa_pair(bool swap_rose_petals = false) {
    OctagonComplexResult Y = octagon_complex();
    const CubeComplex& Yc = Y.built.complex;
    const Cell y0 = Y.built.center;
    const Cell nY = static_cast<Cell>(Yc.num_cells());

    CubeComplex path8 = path_complex(8);
    const Cell np = static_cast<Cell>(path8.num_cells());
    std::vector<Cell> table = product_id_table(Yc, path8);
    CubeComplex X0 = product(Yc, path8);
    auto pid = [&](Cell c, Cell s) { return table[c * np + s]; };
    auto path_vertex = [](int k) { return static_cast<Cell>(k); };
    auto path_edge = [](int k) { return static_cast<Cell>(9 + k); };

    // tau0(y, t) = (tau' y, 8 - t)
    CellularMap tau0;
    tau0.target.resize(X0.num_cells());
    tau0.sym.resize(X0.num_cells());
    SignedPerm flip1{{-1}};
    for (Cell c = 0; c < nY; ++c) {
        for (int k = 0; k <= 8; ++k) {
            Cell src = pid(c, path_vertex(k));
            tau0.target[src] = pid(Y.tau.map.target[c], path_vertex(8 - k));
            tau0.sym[src] = Y.tau.map.sym[c];  // block with the empty vertex chart
        }
        for (int k = 0; k < 8; ++k) {
            Cell src = pid(c, path_edge(k));
            tau0.target[src] = pid(Y.tau.map.target[c], path_edge(7 - k));
            tau0.sym[src] = SignedPerm::block(Y.tau.map.sym[c], flip1);
        }
    }

    // X1: mapping torus
    std::vector<Identification> torus_ids;
    for (Cell c = 0; c < nY; ++c)
        torus_ids.push_back({pid(c, path_vertex(8)), pid(Y.tau.map.target[c], path_vertex(0)), Y.tau.map.sym[c]});
    QuotientResult q1 = quotient_complex(X0, torus_ids);
    Involution tau1;
    tau1.map = transport_through_quotient(tau0, q1);
    tau1.validate(q1.complex);

    // X2: identify the images of (y0, 0) and (y0, 4)
    Cell p0 = q1.map[pid(y0, path_vertex(0))].target;
    Cell p4 = q1.map[pid(y0, path_vertex(4))].target;
    QuotientResult q2 = quotient_complex(q1.complex, {{p0, p4, SignedPerm::identity(0)}});
    Involution tau2;
    tau2.map = transport_through_quotient(tau1.map, q2);
    tau2.validate(q2.complex);
    const CubeComplex& X2 = q2.complex;

    // trace X0 cells through both quotients
    auto to_x2 = [&](Cell x0cell) -> CellImage {
        const CellImage& a = q1.map[x0cell];
        const CellImage& b = q2.map[a.target];
        return CellImage{b.target, SignedPerm::compose(b.sym, a.sym)};
    };

    // the 2-petal rose Z2 -> Z3 in a fresh copy of Y
    // petal 1: t in [0,4] -> one generator's petal; petal 2: the tau-image
    const int g1 = swap_rose_petals ? 2 : 0;
    const int g2 = swap_rose_petals ? 0 : 2;
    std::vector<GluePair> phi;
    auto add_pair = [&](Cell x0cell, Cell x3cell, const SignedPerm& g) {
        CellImage im = to_x2(x0cell);
        phi.push_back({im.target, x3cell, SignedPerm::compose(g, im.sym.inverse())});
    };
    // vertices: (y0, v0) ~ centre; (y0,vk) k=1..3 -> petal interior; (y0,v4) ~ centre (merged)
    SignedPerm id0 = SignedPerm::identity(0);
    SignedPerm id1 = SignedPerm::identity(1);
    add_pair(pid(y0, path_vertex(0)), y0, id0);
    for (int k = 1; k <= 3; ++k) add_pair(pid(y0, path_vertex(k)), Y.built.petal_vertices[g1][k - 1], id0);
    for (int k = 5; k <= 7; ++k) add_pair(pid(y0, path_vertex(k)), Y.built.petal_vertices[g2][3 - (k - 4)], id0);
    for (int k = 0; k < 4; ++k) add_pair(pid(y0, path_edge(k)), Y.built.petal_edges[g1][k], id1);
    for (int k = 0; k < 4; ++k) add_pair(pid(y0, path_edge(4 + k)), Y.built.petal_edges[g2][3 - k], flip1);
    GlueResult g = glue(X2, Yc, phi);

    // assemble tau on A'
    KitBuildResult out;
    out.kit.aprime = std::move(g.complex);
    CellularMap tau;
    tau.target.assign(out.kit.aprime.num_cells(), CubeComplex::npos);
    tau.sym.resize(out.kit.aprime.num_cells());
    auto put = [&](const CellImage& from, const CellImage& to_img, const CellularMap& part, Cell c) {
        // part maps c -> part.target[c] inside its piece; transport to A'
        Cell nc = from.target;
        Cell nt = to_img.target;
        SignedPerm sym = SignedPerm::compose(SignedPerm::compose(to_img.sym, part.sym[c]), from.sym.inverse());
        if (tau.target[nc] == CubeComplex::npos) {
            tau.target[nc] = nt;
            tau.sym[nc] = sym;
        } else if (tau.target[nc] != nt || !(tau.sym[nc] == sym)) {
            throw Error("KIT_TAU", "involution pieces disagree on the glued rose");
        }
    };
    for (Cell c = 0; c < X2.num_cells(); ++c) put(g.from_a[c], g.from_a[tau2.map.target[c]], tau2.map, c);
    for (Cell c = 0; c < nY; ++c) put(g.from_b[c], g.from_b[Y.tau.map.target[c]], Y.tau.map, c);
    out.kit.tau.map = std::move(tau);
    out.kit.tau.validate(out.kit.aprime);

    // A = image of Y x {0}
    out.y_to_a.resize(nY);
    for (Cell c = 0; c < nY; ++c) {
        CellImage im = to_x2(pid(c, path_vertex(0)));
        const CellImage& fin = g.from_a[im.target];
        out.y_to_a[c] = CellImage{fin.target, SignedPerm::compose(fin.sym, im.sym)};
        out.kit.a_cells.push_back(fin.target);
    }
    std::sort(out.kit.a_cells.begin(), out.kit.a_cells.end());
    out.kit.a_cells.erase(std::unique(out.kit.a_cells.begin(), out.kit.a_cells.end()), out.kit.a_cells.end());
    if (out.kit.a_cells.size() != nY) throw Error("KIT_FIXED_SET", "Y does not embed in A'");

    out.kit.a0 = out.y_to_a[y0].target;
    // j: the image of the petal of generator 0 inside A
    for (int k = 0; k < 4; ++k) {
        const CellImage& im = out.y_to_a[Y.built.petal_edges[0][k]];
        out.kit.j_loop.push_back({im.target, im.sym.is_identity() ? 1 : -1});
    }
    out.kit.dim_a = 2;
    out.kit.dim_aprime = out.kit.aprime.dimension();
    out.kit.a_sub = extract_subcomplex(out.kit.aprime, out.kit.a_cells);
    out.kit.validate_structure();

    out.x1 = std::move(q1.complex);
    out.y_cells = nY;
    out.from_x2 = g.from_a;
    out.from_x3 = g.from_b;
    out.y_tau = Y.tau.map;
    return out;
}

// The two equivariant gluing choices give isomorphic pairs: the identity on
// X2 together with tau' on X3 is the isomorphism.  Returns the cellular
// isomorphism, validated.
inline CellularMap aa_pair_gluing_isomorphism(const KitBuildResult& a, const KitBuildResult& b) {
    size_t n = a.kit.aprime.num_cells();
    if (b.kit.aprime.num_cells() != n) throw Error("KIT_ISO", "cell counts differ");
    CellularMap iso;
    iso.target.assign(n, CubeComplex::npos);
    iso.sym.resize(n);
    auto put = [&](const CellImage& from, const CellImage& to, const SignedPerm& part) {
        SignedPerm sym = SignedPerm::compose(SignedPerm::compose(to.sym, part), from.sym.inverse());
        if (iso.target[from.target] == CubeComplex::npos) {
            iso.target[from.target] = to.target;
            iso.sym[from.target] = sym;
        } else if (iso.target[from.target] != to.target || !(iso.sym[from.target] == sym)) {
            throw Error("KIT_ISO", "gluing pieces disagree");
        }
    };
    size_t x2_cells = a.from_x2.size();
    for (Cell c = 0; c < x2_cells; ++c)
        put(a.from_x2[c], b.from_x2[c], SignedPerm::identity(a.kit.aprime.dim(a.from_x2[c].target)));
    for (Cell c = 0; c < a.y_cells; ++c)
        put(a.from_x3[c], b.from_x3[a.y_tau.target[c]], a.y_tau.sym[c]);
    iso.validate(a.kit.aprime, b.kit.aprime);
    std::vector<Cell> image(iso.target.begin(), iso.target.end());
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end())
        throw Error("KIT_ISO", "map is not injective");
    return iso;
}

} // namespace ktc
