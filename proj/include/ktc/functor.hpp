#pragma once

#include <cstdint>
#include <map>
#include <vector>
#include <algorithm>

#include "delta.hpp"
#include "kit.hpp"
#include "cellular_map.hpp"
#include "homology.hpp"

namespace ktc {

// ---------------------------------------------------------------------------
// cell provenance: a structural name for every cell of T and U, stable
// across builds, used to realize functoriality

struct Prov {
    enum Tag : uint8_t {
        TV,      // a = X-vertex
        TEV,     // a = X-edge, b = interior vertex 0..2
        TEE,     // a = X-edge, b = path edge 0..3
        TCYL,    // a = simplex, b = T-prov of the T' cell, c = path4 cell
        TUPR,    // a = simplex, b = U-prov of the copied cell
        UWEDGE,  // the base wedge vertex
        UAPR1,   // a = X-edge, b = cell of A'
        UTA,     // a = simplex, b = T-prov of the T' cell, c = cell of the A subcomplex
        UAPR2,   // a = simplex, b = cell of A'
    } tag;
    uint32_t a = 0, b = 0, c = 0;

    friend bool operator<(const Prov& x, const Prov& y) {
        if (x.tag != y.tag) return x.tag < y.tag;
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        return x.c < y.c;
    }
};

struct ProvTable {
    std::map<Prov, uint32_t> index;
    std::vector<Prov> items;
    uint32_t intern(const Prov& p) {
        auto it = index.find(p);
        if (it != index.end()) return it->second;
        uint32_t id = static_cast<uint32_t>(items.size());
        items.push_back(p);
        index.emplace(p, id);
        return id;
    }
};

struct KtOptions {
    bool want_u = true;
};

struct KtResult {
    CubeComplex T;
    Involution tau;
    std::vector<uint32_t> t_owner;  // T cell -> simplex of X

    bool has_u = false;
    CubeComplex U;
    Involution tau_u;
    std::vector<uint32_t> u_owner;
    CellularMap i_map;  // T -> U when has_u

    int dim_t = 0, dim_u = 0;

    // provenance (T and U share one table)
    ProvTable prov;
    std::vector<uint32_t> t_prov;
    std::vector<SignedPerm> t_prov_sym;  // canonical chart -> stored chart
    std::vector<uint32_t> u_prov;
    std::vector<SignedPerm> u_prov_sym;
    std::map<uint32_t, Cell> t_cell_of_prov;

    std::vector<Cell> x_vertex_tcell;  // X-vertex -> T vertex cell

    // cells of T owned by the given face-closed simplex set
    std::vector<Cell> t_cells_of(const std::vector<uint32_t>& simplices) const {
        uint32_t top = 0;
        for (uint32_t o : t_owner) top = std::max(top, o);
        std::vector<uint8_t> mark(top + 1, 0);
        for (uint32_t s : simplices)
            if (s < mark.size()) mark[s] = 1;
        std::vector<Cell> cells;
        for (Cell c = 0; c < T.num_cells(); ++c)
            if (mark[t_owner[c]]) cells.push_back(c);
        return T.face_closure_of(cells);
    }
    std::vector<Cell> u_cells_of(const std::vector<uint32_t>& simplices) const {
        std::vector<uint8_t> mark;
        uint32_t top = 0;
        for (uint32_t o : u_owner) top = std::max(top, o);
        mark.assign(top + 1, 0);
        for (uint32_t s : simplices)
            if (s < mark.size()) mark[s] = 1;
        std::vector<Cell> cells;
        for (Cell c = 0; c < U.num_cells(); ++c)
            if (mark[u_owner[c]]) cells.push_back(c);
        return U.face_closure_of(cells);
    }
};

namespace kt_detail {

// proper faces of a simplex, face-closed, plus the simplex's skeleton ids
inline std::vector<uint32_t> boundary_simplices(const DeltaComplex& X, uint32_t sigma) {
    std::vector<uint32_t> out;
    std::vector<uint8_t> seen(X.size(), 0);
    std::vector<uint32_t> work;
    int n = X.dims[sigma];
    for (int i = 0; i <= n; ++i) work.push_back(X.d[sigma][i]);
    while (!work.empty()) {
        uint32_t s = work.back();
        work.pop_back();
        if (seen[s]) continue;
        seen[s] = 1;
        out.push_back(s);
        for (int i = 0; i <= X.dims[s] && X.dims[s] > 0; ++i) work.push_back(X.d[s][i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace kt_detail

// ---------------------------------------------------------------------------
// the construction

inline KtResult kt_build(const AcyclicKit& kit, const DeltaComplex& X, KtOptions opts = {}) {
    kit.validate_structure();
    std::string why;
    if (!X.category_c_check(&why)) throw Error("NOT_IN_C", why);
    X.validate();

    KtResult R;
    R.has_u = true;

    // ---- base: T on the 1-skeleton is its second barycentric subdivision
    {
        DeltaComplex skel;  // same simplex ids for dims <= 1; higher dims dropped
        // second_subdivision_graph ignores nothing, so feed a graph with
        // placeholder vertices for higher simplices (they own no cells)
        skel.dims = X.dims;
        skel.d = X.d;
        for (uint32_t s = 0; s < skel.size(); ++s)
            if (skel.dims[s] > 1) {
                skel.dims[s] = 0;
                skel.d[s].clear();
            }
        GraphAsCubes g = second_subdivision_graph(skel);
        // drop the placeholder vertices we just added for dim>=2 simplices
        std::vector<Cell> keep;
        for (Cell c = 0; c < g.complex.num_cells(); ++c)
            if (X.dims[g.owner[c]] <= 1) keep.push_back(c);
        SubcomplexResult sub = extract_subcomplex(g.complex, keep);
        R.T = sub.complex;
        R.t_owner.resize(R.T.num_cells());
        R.t_prov.resize(R.T.num_cells());
        R.t_prov_sym.resize(R.T.num_cells());
        for (Cell c = 0; c < R.T.num_cells(); ++c) {
            Cell oc = sub.to_parent[c];
            R.t_owner[c] = g.owner[oc];
            R.t_prov_sym[c] = SignedPerm::identity(R.T.dim(c));
        }
        R.x_vertex_tcell.assign(X.size(), CubeComplex::npos);
        for (uint32_t s = 0; s < X.size(); ++s) {
            if (X.dims[s] == 0) {
                R.x_vertex_tcell[s] = sub.from_parent[g.vertex_cell[s]];
                R.t_prov[R.x_vertex_tcell[s]] = R.prov.intern({Prov::TV, s, 0, 0});
            } else if (X.dims[s] == 1) {
                for (int k = 0; k < 3; ++k)
                    R.t_prov[sub.from_parent[g.inner_vertex[s][k]]] =
                        R.prov.intern({Prov::TEV, s, static_cast<uint32_t>(k), 0});
                for (int k = 0; k < 4; ++k)
                    R.t_prov[sub.from_parent[g.edge_cells[s][k]]] =
                        R.prov.intern({Prov::TEE, s, static_cast<uint32_t>(k), 0});
            }
        }
        R.tau = Involution::identity(R.T);
    }

    // ---- base: U is the one-point union of one A' copy per X-edge
    uint32_t base_owner = 0;
    for (uint32_t s = 0; s < X.size(); ++s)
        if (X.dims[s] == 0) { base_owner = s; break; }
    {
        CubeComplex W;
        W.add_vertex();
        std::vector<Cell> copy_offset(X.size(), CubeComplex::npos);
        std::vector<uint32_t> edges;
        for (uint32_t s = 0; s < X.size(); ++s)
            if (X.dims[s] == 1) edges.push_back(s);
        for (uint32_t e : edges) {
            UnionResult u = disjoint_union(W, kit.aprime);
            W = std::move(u.complex);
            copy_offset[e] = u.offset_b;
        }
        std::vector<Identification> ids;
        for (uint32_t e : edges) ids.push_back({copy_offset[e] + kit.a0, 0, SignedPerm::identity(0)});
        QuotientResult q = quotient_complex(W, ids);
        R.U = std::move(q.complex);
        R.u_owner.assign(R.U.num_cells(), base_owner);
        R.u_prov.assign(R.U.num_cells(), 0);
        R.u_prov_sym.resize(R.U.num_cells());
        Cell wedge = q.map[0].target;
        R.u_prov[wedge] = R.prov.intern({Prov::UWEDGE, 0, 0, 0});
        R.u_prov_sym[wedge] = SignedPerm::identity(0);
        CellularMap tau_pre;
        tau_pre.target.resize(W.num_cells());
        tau_pre.sym.resize(W.num_cells());
        tau_pre.target[0] = 0;
        tau_pre.sym[0] = SignedPerm::identity(0);
        for (uint32_t e : edges) {
            for (Cell c = 0; c < kit.aprime.num_cells(); ++c) {
                Cell pre = copy_offset[e] + c;
                const CellImage& im = q.map[pre];
                if (q.rep[im.target] == pre) {
                    R.u_owner[im.target] = e;
                    R.u_prov[im.target] = R.prov.intern({Prov::UAPR1, e, c, 0});
                    R.u_prov_sym[im.target] = im.sym;
                }
                tau_pre.target[pre] = copy_offset[e] + kit.tau.map.target[c];
                tau_pre.sym[pre] = kit.tau.map.sym[c];
            }
        }
        R.tau_u.map = transport_through_quotient(tau_pre, q);

        // i on the base: vertices to the wedge, each 4-path around j
        R.i_map.target.assign(R.T.num_cells(), CubeComplex::npos);
        R.i_map.sym.resize(R.T.num_cells());
        for (Cell c = 0; c < R.T.num_cells(); ++c) {
            const Prov& p = R.prov.items[R.t_prov[c]];
            switch (p.tag) {
                case Prov::TV:
                    R.i_map.target[c] = wedge;
                    R.i_map.sym[c] = SignedPerm::identity(0);
                    break;
                case Prov::TEV: {
                    Cell jv = kit.j_vertex(static_cast<int>(p.b) + 1);
                    const CellImage& im = q.map[copy_offset[p.a] + jv];
                    R.i_map.target[c] = im.target;
                    R.i_map.sym[c] = im.sym;
                    break;
                }
                case Prov::TEE: {
                    auto [jedge, jdir] = kit.j_loop[p.b];
                    const CellImage& im = q.map[copy_offset[p.a] + jedge];
                    SignedPerm orient = jdir > 0 ? SignedPerm::identity(1) : SignedPerm{{-1}};
                    R.i_map.target[c] = im.target;
                    R.i_map.sym[c] = SignedPerm::compose(im.sym, orient);
                    break;
                }
                default:
                    throw Error("INTERNAL", "unexpected base provenance");
            }
        }
        R.i_map.validate(R.T, R.U);
    }

    // ---- inductive steps over simplices of dimension >= 2
    std::vector<uint32_t> order;
    for (uint32_t s = 0; s < X.size(); ++s)
        if (X.dims[s] >= 2) order.push_back(s);
    std::stable_sort(order.begin(), order.end(),
                     [&](uint32_t a, uint32_t b) { return X.dims[a] < X.dims[b]; });

    CubeComplex path4 = path_complex(4);
    const Cell np4 = static_cast<Cell>(path4.num_cells());
    auto p4_vertex = [](int k) { return static_cast<Cell>(k); };

    for (size_t step_idx = 0; step_idx < order.size(); ++step_idx) {
        uint32_t sigma = order[step_idx];
        bool do_u = opts.want_u || step_idx + 1 < order.size();

        std::vector<uint32_t> bd = kt_detail::boundary_simplices(X, sigma);
        std::vector<Cell> t_bd = R.t_cells_of(bd);
        std::vector<Cell> tprime_cells;
        for (Cell c : t_bd)
            if (R.tau.map.target[c] == c) {
                if (!R.tau.map.sym[c].is_identity())
                    throw Error("SETWISE_NOT_POINTWISE", "fixed part of the boundary is not pointwise fixed");
                tprime_cells.push_back(c);
            }
        SubcomplexResult tp = extract_subcomplex(R.T, tprime_cells);
        std::vector<Cell> u_bd = R.u_cells_of(bd);
        SubcomplexResult up = extract_subcomplex(R.U, u_bd);

        CellularMap iprime;  // tp -> up
        iprime.target.resize(tp.complex.num_cells());
        iprime.sym.resize(tp.complex.num_cells());
        for (Cell c = 0; c < tp.complex.num_cells(); ++c) {
            Cell parent = tp.to_parent[c];
            Cell ut = R.i_map.target[parent];
            Cell us = up.from_parent[ut];
            if (us == CubeComplex::npos) throw Error("INTERNAL", "i does not respect labels");
            iprime.target[c] = us;
            iprime.sym[c] = R.i_map.sym[parent];
        }
        iprime.validate(tp.complex, up.complex);

        uint32_t x0 = X.iterated_face(sigma, {0});
        Cell w0 = R.x_vertex_tcell[x0];
        Cell w0sub = tp.from_parent[w0];
        if (w0sub == CubeComplex::npos) throw Error("INTERNAL", "initial vertex not in the fixed part");

        // ---------------- T step
        std::vector<Cell> tableP = product_id_table(tp.complex, path4);
        CubeComplex P = product(tp.complex, path4);
        UnionResult tu1 = disjoint_union(R.T, P);
        UnionResult tu2 = disjoint_union(tu1.complex, up.complex);
        Cell offP = tu1.offset_b, offUc = tu2.offset_b;
        size_t oldT = R.T.num_cells();
        auto pidP = [&](Cell c, Cell s) { return tableP[c * np4 + s]; };
        std::vector<Identification> idsT;
        for (Cell c = 0; c < tp.complex.num_cells(); ++c) {
            int d = tp.complex.dim(c);
            idsT.push_back({offP + pidP(c, p4_vertex(0)), tp.to_parent[c], SignedPerm::identity(d)});
            idsT.push_back({offP + pidP(c, p4_vertex(4)), offUc + iprime.target[c], iprime.sym[c]});
        }
        QuotientResult qT = quotient_complex(tu2.complex, idsT);

        // pre-union registries for the new pieces
        size_t nu = tu2.complex.num_cells();
        std::vector<uint32_t> pre_owner(nu), pre_prov(nu);
        std::vector<SignedPerm> pre_psym(nu);
        CellularMap pre_tau;
        pre_tau.target.resize(nu);
        pre_tau.sym.resize(nu);
        for (Cell c = 0; c < oldT; ++c) {
            pre_owner[c] = R.t_owner[c];
            pre_prov[c] = R.t_prov[c];
            pre_psym[c] = R.t_prov_sym[c];
            pre_tau.target[c] = R.tau.map.target[c];
            pre_tau.sym[c] = R.tau.map.sym[c];
        }
        for (Cell c = 0; c < tp.complex.num_cells(); ++c)
            for (Cell s = 0; s < np4; ++s) {
                Cell pc = offP + pidP(c, s);
                pre_owner[pc] = sigma;
                pre_prov[pc] = R.prov.intern({Prov::TCYL, sigma, R.t_prov[tp.to_parent[c]], s});
                pre_psym[pc] = SignedPerm::block(R.t_prov_sym[tp.to_parent[c]], SignedPerm::identity(path4.dim(s)));
                pre_tau.target[pc] = pc;
                pre_tau.sym[pc] = SignedPerm::identity(tu2.complex.dim(pc));
            }
        for (Cell c = 0; c < up.complex.num_cells(); ++c) {
            Cell pc = offUc + c;
            Cell parent = up.to_parent[c];
            pre_owner[pc] = sigma;
            pre_prov[pc] = R.prov.intern({Prov::TUPR, sigma, R.u_prov[parent], 0});
            pre_psym[pc] = R.u_prov_sym[parent];
            Cell ut = R.tau_u.map.target[parent];
            Cell us = up.from_parent[ut];
            if (us == CubeComplex::npos) throw Error("INTERNAL", "tau does not respect U labels");
            pre_tau.target[pc] = offUc + us;
            pre_tau.sym[pc] = R.tau_u.map.sym[parent];
        }

        CubeComplex newT = std::move(qT.complex);
        size_t nT = newT.num_cells();
        std::vector<uint32_t> newOwner(nT), newProv(nT);
        std::vector<SignedPerm> newPsym(nT);
        for (Cell nc = 0; nc < nT; ++nc) {
            Cell rep = qT.rep[nc];
            newOwner[nc] = pre_owner[rep];
            newProv[nc] = pre_prov[rep];
            newPsym[nc] = SignedPerm::compose(qT.map[rep].sym, pre_psym[rep]);
        }
        Involution newTau;
        newTau.map = transport_through_quotient(pre_tau, qT);

        for (uint32_t v = 0; v < X.size(); ++v)
            if (R.x_vertex_tcell[v] != CubeComplex::npos)
                R.x_vertex_tcell[v] = qT.map[R.x_vertex_tcell[v]].target;

        // ---------------- U step
        if (do_u) {
            Cell a0sub = kit.a_sub.from_parent[kit.a0];
            const CubeComplex& A = kit.a_sub.complex;
            Cell nA = static_cast<Cell>(A.num_cells());
            std::vector<Cell> tableA = product_id_table(tp.complex, A);
            CubeComplex PA = product(tp.complex, A);
            UnionResult uu1 = disjoint_union(R.U, PA);
            UnionResult uu2 = disjoint_union(uu1.complex, kit.aprime);
            Cell offPA = uu1.offset_b, offA = uu2.offset_b;
            size_t oldU = R.U.num_cells();
            auto pidA = [&](Cell c, Cell a) { return tableA[c * nA + a]; };
            std::vector<Identification> idsU;
            for (Cell c = 0; c < tp.complex.num_cells(); ++c)
                idsU.push_back({offPA + pidA(c, a0sub), up.to_parent[iprime.target[c]], iprime.sym[c]});
            for (Cell a = 0; a < nA; ++a)
                idsU.push_back({offPA + pidA(w0sub, a), offA + kit.a_sub.to_parent[a],
                                SignedPerm::identity(A.dim(a))});
            QuotientResult qU = quotient_complex(uu2.complex, idsU);

            size_t nuU = uu2.complex.num_cells();
            std::vector<uint32_t> preOwnU(nuU), preProvU(nuU);
            std::vector<SignedPerm> prePsymU(nuU);
            CellularMap preTauU;
            preTauU.target.resize(nuU);
            preTauU.sym.resize(nuU);
            for (Cell c = 0; c < oldU; ++c) {
                preOwnU[c] = R.u_owner[c];
                preProvU[c] = R.u_prov[c];
                prePsymU[c] = R.u_prov_sym[c];
                preTauU.target[c] = R.tau_u.map.target[c];
                preTauU.sym[c] = R.tau_u.map.sym[c];
            }
            for (Cell c = 0; c < tp.complex.num_cells(); ++c)
                for (Cell a = 0; a < nA; ++a) {
                    Cell pc = offPA + pidA(c, a);
                    preOwnU[pc] = sigma;
                    preProvU[pc] = R.prov.intern({Prov::UTA, sigma, R.t_prov[tp.to_parent[c]], a});
                    prePsymU[pc] =
                        SignedPerm::block(R.t_prov_sym[tp.to_parent[c]], SignedPerm::identity(A.dim(a)));
                    preTauU.target[pc] = pc;
                    preTauU.sym[pc] = SignedPerm::identity(uu2.complex.dim(pc));
                }
            for (Cell c = 0; c < kit.aprime.num_cells(); ++c) {
                Cell pc = offA + c;
                preOwnU[pc] = sigma;
                preProvU[pc] = R.prov.intern({Prov::UAPR2, sigma, c, 0});
                prePsymU[pc] = SignedPerm::identity(kit.aprime.dim(c));
                preTauU.target[pc] = offA + kit.tau.map.target[c];
                preTauU.sym[pc] = kit.tau.map.sym[c];
            }
            CubeComplex newU = std::move(qU.complex);
            size_t nU = newU.num_cells();
            std::vector<uint32_t> newOwnU(nU), newProvU(nU);
            std::vector<SignedPerm> newPsymU(nU);
            for (Cell nc = 0; nc < nU; ++nc) {
                Cell rep = qU.rep[nc];
                newOwnU[nc] = preOwnU[rep];
                newProvU[nc] = preProvU[rep];
                newPsymU[nc] = SignedPerm::compose(qU.map[rep].sym, prePsymU[rep]);
            }
            Involution newTauU;
            newTauU.map = transport_through_quotient(preTauU, qU);

            // ---------------- the new i: T_X -> U_X
            CellularMap newI;
            newI.target.resize(nT);
            newI.sym.resize(nT);
            // T_W cells keep the old map, the copied U' cells include into
            // U_W; cylinder cells are filled from the product tables below
            for (Cell nc = 0; nc < nT; ++nc) {
                Cell rep = qT.rep[nc];
                if (rep < oldT) {
                    newI.target[nc] = R.i_map.target[rep];
                    newI.sym[nc] = R.i_map.sym[rep];
                } else if (rep < offUc) {
                    newI.target[nc] = CubeComplex::npos;
                } else {
                    Cell parent = up.to_parent[rep - offUc];
                    newI.target[nc] = parent;
                    newI.sym[nc] = SignedPerm::identity(R.U.dim(parent));
                }
            }
            // cylinder cell (c x s) maps to (c x j(s))
            {
                // j as cells of the A subcomplex
                std::vector<Cell> jv(5), je(4);
                std::vector<int> jdir(4);
                for (int k = 0; k <= 4; ++k) jv[k] = kit.a_sub.from_parent[kit.j_vertex(k)];
                for (int k = 0; k < 4; ++k) {
                    je[k] = kit.a_sub.from_parent[kit.j_loop[k].first];
                    jdir[k] = kit.j_loop[k].second;
                }
                for (Cell c = 0; c < tp.complex.num_cells(); ++c) {
                    for (Cell s = 0; s < np4; ++s) {
                        Cell pre = offP + pidP(c, s);
                        Cell nc = qT.map[pre].target;
                        if (qT.rep[nc] != pre) continue;  // owned by another piece
                        Cell a_cell;
                        SignedPerm jsym;
                        if (s <= 4) {  // vertex k of the path
                            a_cell = jv[s];
                            jsym = SignedPerm::identity(0);
                        } else {  // edge k
                            int k = static_cast<int>(s) - 5;
                            a_cell = je[k];
                            jsym = jdir[k] > 0 ? SignedPerm::identity(1) : SignedPerm{{-1}};
                        }
                        newI.sym[nc] = SignedPerm::block(SignedPerm::identity(tp.complex.dim(c)), jsym);
                        newI.target[nc] = offPA + pidA(c, a_cell);  // pre-quotient id, routed below
                    }
                }
            }
            // targets so far are pre-quotient union ids (old U cells keep
            // their ids there); route through the U quotient and correct the
            // domain chart
            for (Cell nc = 0; nc < nT; ++nc) {
                Cell rep = qT.rep[nc];
                const CellImage& im = qU.map[newI.target[nc]];
                newI.target[nc] = im.target;
                newI.sym[nc] = SignedPerm::compose(SignedPerm::compose(im.sym, newI.sym[nc]),
                                                   qT.map[rep].sym.inverse());
            }

            R.U = std::move(newU);
            R.u_owner = std::move(newOwnU);
            R.u_prov = std::move(newProvU);
            R.u_prov_sym = std::move(newPsymU);
            R.tau_u = std::move(newTauU);
            R.i_map = std::move(newI);
        } else {
            R.has_u = false;
            R.i_map.target.clear();
            R.i_map.sym.clear();
        }

        R.T = std::move(newT);
        R.t_owner = std::move(newOwner);
        R.t_prov = std::move(newProv);
        R.t_prov_sym = std::move(newPsym);
        R.tau = std::move(newTau);

        if (R.has_u) R.i_map.validate(R.T, R.U);
    }

    R.tau.validate(R.T);
    check_pointwise_fixed(R.T, R.tau);
    if (R.has_u) {
        R.tau_u.validate(R.U);
        check_pointwise_fixed(R.U, R.tau_u);
    }
    R.dim_t = R.T.dimension();
    R.dim_u = R.has_u ? R.U.dimension() : -1;
    for (Cell c = 0; c < R.T.num_cells(); ++c) R.t_cell_of_prov[R.t_prov[c]] = c;
    return R;
}

// ---------------------------------------------------------------------------
// functoriality

inline CellularMap kt_map(const DeltaMap& f, const DeltaComplex& X, const DeltaComplex& Y,
                          const KtResult& ktX, const KtResult& ktY) {
    f.validate(X, Y);
    for (uint32_t s = 0; s < X.size(); ++s) {
        // injective on each simplex: all vertices of s have distinct images
        int n = X.dims[s];
        std::vector<uint32_t> vs;
        for (int i = 0; i <= n; ++i) vs.push_back(f.image[X.vertex_of(s, i)]);
        std::sort(vs.begin(), vs.end());
        if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
            throw Error("NOT_SIMPLEXWISE_INJECTIVE", "map collapses a simplex");
    }
    // translate provenance
    std::map<uint32_t, uint32_t> memo;  // X prov id -> Y prov id
    std::function<uint32_t(uint32_t)> tr = [&](uint32_t pid) -> uint32_t {
        auto it = memo.find(pid);
        if (it != memo.end()) return it->second;
        Prov p = ktX.prov.items[pid];
        Prov q = p;
        switch (p.tag) {
            case Prov::TV:
            case Prov::TEV:
            case Prov::TEE:
            case Prov::UAPR1:
                q.a = f.image[p.a];
                break;
            case Prov::TCYL:
            case Prov::UTA:
                q.a = f.image[p.a];
                q.b = tr(p.b);
                break;
            case Prov::TUPR:
                q.a = f.image[p.a];
                q.b = tr(p.b);
                break;
            case Prov::UAPR2:
                q.a = f.image[p.a];
                break;
            case Prov::UWEDGE:
                break;
        }
        auto jt = ktY.prov.index.find(q);
        if (jt == ktY.prov.index.end()) throw Error("INTERNAL", "provenance missing in the target build");
        memo[pid] = jt->second;
        return jt->second;
    };
    CellularMap out;
    out.target.resize(ktX.T.num_cells());
    out.sym.resize(ktX.T.num_cells());
    for (Cell c = 0; c < ktX.T.num_cells(); ++c) {
        uint32_t qp = tr(ktX.t_prov[c]);
        auto it = ktY.t_cell_of_prov.find(qp);
        if (it == ktY.t_cell_of_prov.end()) throw Error("INTERNAL", "image cell not found");
        Cell tc = it->second;
        out.target[c] = tc;
        out.sym[c] = SignedPerm::compose(ktY.t_prov_sym[tc], ktX.t_prov_sym[c].inverse());
    }
    out.validate(ktX.T, ktY.T);
    return out;
}

// ---------------------------------------------------------------------------
// verification reports

struct FiltrationReport {
    bool pass = true;
    struct Level {
        int k;
        int64_t expected_rank;  // number of k-simplices of X
        bool free_and_concentrated = false;
        int64_t rank = 0;
    };
    std::vector<Level> levels;
    bool homology_matches_x = false;
    bool labels_face_closed = true;
    bool union_law = true;
};

inline FiltrationReport filtration_check(const KtResult& R, const DeltaComplex& X) {
    FiltrationReport rep;
    int top = X.dimension();
    // skeleton pairs
    for (int k = 0; k <= top; ++k) {
        std::vector<uint32_t> skel_k = X.skeleton_cells(k);
        std::vector<uint32_t> skel_k1 = X.skeleton_cells(k - 1);
        std::vector<Cell> tk = R.t_cells_of(skel_k);
        std::vector<Cell> tk1 = R.t_cells_of(skel_k1);
        if (!R.T.is_subcomplex(tk) || !R.T.is_subcomplex(tk1)) rep.labels_face_closed = false;
        SubcomplexResult sk = extract_subcomplex(R.T, tk);
        std::vector<Cell> sub_in_sk;
        for (Cell c : tk1) sub_in_sk.push_back(sk.from_parent[c]);
        HomologyGroups h = homology(chain_complex_rel(sk.complex, sub_in_sk));
        FiltrationReport::Level lvl;
        lvl.k = k;
        lvl.expected_rank = static_cast<int64_t>(X.count_dim(k));
        lvl.rank = h.at(k).betti;
        lvl.free_and_concentrated = true;
        for (int d = 0; d < static_cast<int>(h.groups.size()); ++d) {
            if (d == k) {
                if (!h.groups[d].torsion.empty()) lvl.free_and_concentrated = false;
            } else if (!h.groups[d].trivial()) {
                lvl.free_and_concentrated = false;
            }
        }
        if (!lvl.free_and_concentrated || lvl.rank != lvl.expected_rank) rep.pass = false;
        rep.levels.push_back(lvl);
    }
    // total homology matches H(X)
    rep.homology_matches_x = (homology(R.T) == homology(chain_complex(X)));
    if (!rep.homology_matches_x) rep.pass = false;
    if (!rep.labels_face_closed) rep.pass = false;
    return rep;
}

// labeled-union laws on random/basic subcomplex pairs
inline bool label_union_laws(const KtResult& R, const DeltaComplex& X) {
    auto closure = [&](std::vector<uint32_t> s) {
        std::vector<uint8_t> seen(X.size(), 0);
        std::vector<uint32_t> work = s;
        std::vector<uint32_t> out;
        while (!work.empty()) {
            uint32_t t = work.back();
            work.pop_back();
            if (seen[t]) continue;
            seen[t] = 1;
            out.push_back(t);
            for (int i = 0; i <= X.dims[t] && X.dims[t] > 0; ++i) work.push_back(X.d[t][i]);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    std::vector<std::vector<uint32_t>> subs;
    for (uint32_t s = 0; s < X.size(); ++s) subs.push_back(closure({s}));
    for (size_t i = 0; i < subs.size(); ++i)
        for (size_t j = i; j < subs.size(); ++j) {
            std::vector<uint32_t> uni, inter;
            std::set_union(subs[i].begin(), subs[i].end(), subs[j].begin(), subs[j].end(),
                           std::back_inserter(uni));
            std::set_intersection(subs[i].begin(), subs[i].end(), subs[j].begin(), subs[j].end(),
                                  std::back_inserter(inter));
            auto ta = R.t_cells_of(subs[i]);
            auto tb = R.t_cells_of(subs[j]);
            auto tu = R.t_cells_of(uni);
            auto ti = R.t_cells_of(inter);
            std::vector<Cell> tu2, ti2;
            std::set_union(ta.begin(), ta.end(), tb.begin(), tb.end(), std::back_inserter(tu2));
            std::set_intersection(ta.begin(), ta.end(), tb.begin(), tb.end(), std::back_inserter(ti2));
            if (tu != tu2 || ti != ti2) return false;
            if (!R.T.is_subcomplex(ta)) return false;
        }
    return true;
}

inline SubcomplexResult kt_fixed(const KtResult& r) { return fixed_subcomplex(r.T, r.tau); }
inline QuotientResult kt_quotient(const KtResult& r) { return quotient_by_involution(r.T, r.tau); }

// ---------------------------------------------------------------------------
// iterated mapping cylinder over the skeleton inclusions

inline CubeComplex t_prime_build(const AcyclicKit& kit, const DeltaComplex& X, int cylinder_length = 4) {
    KtResult R = kt_build(kit, X, {false});
    int top = X.dimension();
    // stage complexes T_{X^0} ... T_{X^n} as label subcomplexes
    std::vector<SubcomplexResult> stages;
    for (int k = 0; k <= top; ++k) stages.push_back(extract_subcomplex(R.T, R.t_cells_of(X.skeleton_cells(k))));
    CubeComplex out = stages[0].complex;
    // out holds the telescope up to stage k, with `embed` mapping stage-k
    // cells into it (with chart relations)
    std::vector<CellImage> embed(stages[0].complex.num_cells());
    for (Cell c = 0; c < stages[0].complex.num_cells(); ++c)
        embed[c] = {c, SignedPerm::identity(stages[0].complex.dim(c))};
    for (int k = 1; k <= top; ++k) {
        // cylinder over stage k-1 glued into stage k
        const CubeComplex& Sk = stages[k].complex;
        CellularMap incl;  // stage k-1 -> stage k
        incl.target.resize(stages[k - 1].complex.num_cells());
        incl.sym.resize(stages[k - 1].complex.num_cells());
        for (Cell c = 0; c < stages[k - 1].complex.num_cells(); ++c) {
            Cell parent = stages[k - 1].to_parent[c];
            incl.target[c] = stages[k].from_parent[parent];
            incl.sym[c] = SignedPerm::identity(stages[k - 1].complex.dim(c));
        }
        MappingCylinder M = mapping_cylinder(stages[k - 1].complex, Sk, incl, cylinder_length);
        // glue the cylinder's source copy onto the telescope built so far
        std::vector<GluePair> phi;
        for (Cell c = 0; c < stages[k - 1].complex.num_cells(); ++c) {
            const CellImage& im = M.from_source[c];
            phi.push_back({im.target, embed[c].target, SignedPerm::compose(embed[c].sym, im.sym.inverse())});
        }
        GlueResult g = glue(M.complex, out, phi);
        // new embedding: stage k sits inside the glued complex
        std::vector<CellImage> newEmbed(Sk.num_cells());
        for (Cell c = 0; c < Sk.num_cells(); ++c) {
            const CellImage& mt = M.from_target[c];
            const CellImage& ga = g.from_a[mt.target];
            newEmbed[c] = {ga.target, SignedPerm::compose(ga.sym, mt.sym)};
        }
        out = std::move(g.complex);
        embed = std::move(newEmbed);
    }
    return out;
}

} // namespace ktc
