#pragma once

#include <cstdint>
#include <vector>
#include <string>

#include "cube_complex.hpp"

namespace ktc {

// Cellular map of cube complexes: each cell goes to a cell of the same
// dimension, with f o sigma_c = sigma_{f(c)} o sym_c.
struct CellularMap {
    std::vector<Cell> target;
    std::vector<SignedPerm> sym;

    static CellularMap identity(const CubeComplex& cx) {
        CellularMap m;
        m.target.resize(cx.num_cells());
        m.sym.resize(cx.num_cells());
        for (Cell c = 0; c < cx.num_cells(); ++c) {
            m.target[c] = c;
            m.sym[c] = SignedPerm::identity(cx.dim(c));
        }
        return m;
    }

    bool is_identity() const {
        for (Cell c = 0; c < target.size(); ++c)
            if (target[c] != c || !sym[c].is_identity()) return false;
        return true;
    }

    // g after f
    static CellularMap compose(const CellularMap& g, const CellularMap& f) {
        CellularMap m;
        m.target.resize(f.target.size());
        m.sym.resize(f.target.size());
        for (Cell c = 0; c < f.target.size(); ++c) {
            m.target[c] = g.target[f.target[c]];
            m.sym[c] = SignedPerm::compose(g.sym[f.target[c]], f.sym[c]);
        }
        return m;
    }

    void validate(const CubeComplex& src, const CubeComplex& dst) const {
        if (target.size() != src.num_cells()) throw Error("BAD_MAP", "cell count mismatch");
        for (Cell c = 0; c < src.num_cells(); ++c) {
            int d = src.dim(c);
            if (target[c] >= dst.num_cells() || dst.dim(target[c]) != d)
                throw Error("BAD_MAP", "cell " + std::to_string(c) + " image has wrong dimension");
            if (sym[c].dim() != d) throw Error("BAD_MAP", "cell " + std::to_string(c) + " has wrong symmetry rank");
            for (int i = 1; i <= d; ++i)
                for (int s = 0; s < 2; ++s) {
                    auto f1 = src.face(c, i, s);
                    FacePush fp = push_through_face(sym[c], i, s);
                    auto f2 = dst.face(target[c], fp.dir, fp.sign);
                    SignedPerm lhs = SignedPerm::compose(sym[f1.target], src.sym(f1.sym));
                    SignedPerm rhs = SignedPerm::compose(dst.sym(f2.sym), fp.induced);
                    if (target[f1.target] != f2.target || !(lhs == rhs))
                        throw Error("BAD_MAP", "cell " + std::to_string(c) + " does not commute with faces");
                }
        }
    }
};

// Involution: a cellular self-map squaring to the identity.
struct Involution {
    CellularMap map;

    void validate(const CubeComplex& cx) const {
        map.validate(cx, cx);
        for (Cell c = 0; c < cx.num_cells(); ++c) {
            Cell t = map.target[c];
            if (map.target[t] != c || !SignedPerm::compose(map.sym[t], map.sym[c]).is_identity())
                throw Error("NOT_AN_INVOLUTION", "cell " + std::to_string(c));
        }
    }
    static Involution identity(const CubeComplex& cx) { return Involution{CellularMap::identity(cx)}; }
};

// Every setwise-fixed cell must be pointwise fixed, else the orbit space is
// not a cube complex with orbit cells.
inline void check_pointwise_fixed(const CubeComplex& cx, const Involution& t) {
    for (Cell c = 0; c < cx.num_cells(); ++c)
        if (t.map.target[c] == c && !t.map.sym[c].is_identity())
            throw Error("SETWISE_NOT_POINTWISE", "cell " + std::to_string(c));
}

inline QuotientResult quotient_by_involution(const CubeComplex& cx, const Involution& t) {
    check_pointwise_fixed(cx, t);
    // sigma_c ~ tau o sigma_c = sigma_{tc} o sym_c, so identify with g = sym_c
    std::vector<Identification> ids;
    for (Cell c = 0; c < cx.num_cells(); ++c) {
        Cell tc = t.map.target[c];
        if (c < tc) ids.push_back({c, tc, t.map.sym[c]});
    }
    QuotientResult q = quotient_complex(cx, ids);
    // orbit count sanity
    size_t fixed = 0;
    for (Cell c = 0; c < cx.num_cells(); ++c) fixed += (t.map.target[c] == c);
    if (2 * q.complex.num_cells() != cx.num_cells() + fixed)
        throw Error("QUOTIENT_COUNT", "orbit cell count mismatch");
    return q;
}

inline std::vector<Cell> fixed_cells(const CubeComplex& cx, const Involution& t) {
    check_pointwise_fixed(cx, t);
    std::vector<Cell> out;
    for (Cell c = 0; c < cx.num_cells(); ++c)
        if (t.map.target[c] == c) out.push_back(c);
    return out;
}

inline SubcomplexResult fixed_subcomplex(const CubeComplex& cx, const Involution& t) {
    return extract_subcomplex(cx, fixed_cells(cx, t));
}

// push a self-map through a quotient (requires that it descends)
inline CellularMap transport_through_quotient(const CellularMap& f, const QuotientResult& q) {
    CellularMap out;
    out.target.resize(q.rep.size());
    out.sym.resize(q.rep.size());
    for (Cell nc = 0; nc < q.rep.size(); ++nc) {
        Cell r = q.rep[nc];
        const CellImage& fr = q.map[f.target[r]];
        const CellImage& sr = q.map[r];
        out.target[nc] = fr.target;
        out.sym[nc] = SignedPerm::compose(SignedPerm::compose(fr.sym, f.sym[r]), sr.sym.inverse());
    }
    return out;
}

// ---------------------------------------------------------------------------
// gluing along an isomorphism of subcomplexes

struct GluePair {
    Cell a;          // cell of the first complex (domain subcomplex)
    Cell b;          // its image in the second complex
    SignedPerm sym;  // phi o sigma_a = sigma_b o sym
};

struct GlueResult {
    CubeComplex complex;
    std::vector<CellImage> from_a, from_b;
};

inline GlueResult glue(const CubeComplex& a, const CubeComplex& b, const std::vector<GluePair>& phi) {
    // domain must be a subcomplex, phi injective and face-compatible
    std::vector<Cell> dom;
    for (auto& p : phi) dom.push_back(p.a);
    {
        std::vector<Cell> targets;
        for (auto& p : phi) targets.push_back(p.b);
        std::sort(targets.begin(), targets.end());
        if (std::adjacent_find(targets.begin(), targets.end()) != targets.end())
            throw Error("GLUE_NOT_INJECTIVE", "two cells share an image");
        std::sort(dom.begin(), dom.end());
        if (std::adjacent_find(dom.begin(), dom.end()) != dom.end())
            throw Error("GLUE_BAD_DOMAIN", "repeated domain cell");
    }
    if (!a.is_subcomplex(dom)) throw Error("GLUE_BAD_DOMAIN", "domain is not a subcomplex");
    std::vector<Cell> ran;
    for (auto& p : phi) ran.push_back(p.b);
    if (!b.is_subcomplex(ran)) throw Error("GLUE_BAD_DOMAIN", "image is not a subcomplex");
    // face compatibility
    {
        std::vector<Cell> img(a.num_cells(), CubeComplex::npos);
        std::vector<SignedPerm> sym(a.num_cells());
        for (auto& p : phi) {
            if (a.dim(p.a) != b.dim(p.b)) throw Error("GLUE_BAD_DOMAIN", "dimension mismatch");
            img[p.a] = p.b;
            sym[p.a] = p.sym;
        }
        for (auto& p : phi) {
            int d = a.dim(p.a);
            for (int i = 1; i <= d; ++i)
                for (int s = 0; s < 2; ++s) {
                    auto f1 = a.face(p.a, i, s);
                    FacePush fp = push_through_face(p.sym, i, s);
                    auto f2 = b.face(p.b, fp.dir, fp.sign);
                    if (img[f1.target] == CubeComplex::npos)
                        throw Error("GLUE_BAD_DOMAIN", "face outside domain");
                    SignedPerm lhs = SignedPerm::compose(sym[f1.target], a.sym(f1.sym));
                    SignedPerm rhs = SignedPerm::compose(b.sym(f2.sym), fp.induced);
                    if (img[f1.target] != f2.target || !(lhs == rhs))
                        throw Error("GLUE_NOT_COMPATIBLE", "phi does not commute with faces at cell " + std::to_string(p.a));
                }
        }
    }
    UnionResult u = disjoint_union(a, b);
    std::vector<Identification> ids;
    for (auto& p : phi) ids.push_back({p.a, p.b + u.offset_b, p.sym});
    QuotientResult q = quotient_complex(u.complex, ids);
    if (q.complex.num_cells() != a.num_cells() + b.num_cells() - phi.size())
        throw Error("GLUE_COUNT", "glued cell count mismatch");
    GlueResult out;
    out.complex = std::move(q.complex);
    out.from_a.assign(q.map.begin(), q.map.begin() + a.num_cells());
    out.from_b.assign(q.map.begin() + u.offset_b, q.map.end());
    return out;
}

// ---------------------------------------------------------------------------
// mapping cylinder and mapping torus

struct MappingCylinder {
    CubeComplex complex;
    std::vector<CellImage> from_source;    // T = T x {0}
    std::vector<CellImage> from_target;    // U
    std::vector<CellImage> from_product;   // T x [0,n], addressed via id_table
    std::vector<Cell> id_table;            // (c,y) -> product cell (pre-quotient)
    Cell offset_target = 0;                // U offset in the pre-quotient union
    int length = 0;
};

// M(n, f) = (T x [0,n] |_| U) / (t,n) ~ f(t)
inline MappingCylinder mapping_cylinder(const CubeComplex& T, const CubeComplex& U, const CellularMap& f,
                                        int n) {
    if (n <= 0) throw Error("BAD_LENGTH", "cylinder length must be positive");
    f.validate(T, U);
    CubeComplex path = path_complex(n);
    std::vector<Cell> table = product_id_table(T, path);
    CubeComplex P = product(T, path);
    UnionResult u = disjoint_union(P, U);
    Cell np = static_cast<Cell>(path.num_cells());
    std::vector<Identification> ids;
    for (Cell c = 0; c < T.num_cells(); ++c) {
        Cell top = table[c * np + n];  // vertex n has id n in path_complex
        ids.push_back({top, u.offset_b + f.target[c], f.sym[c]});
    }
    QuotientResult q = quotient_complex(u.complex, ids);
    MappingCylinder out;
    out.complex = std::move(q.complex);
    out.length = n;
    out.id_table = table;
    out.offset_target = u.offset_b;
    out.from_product.assign(q.map.begin(), q.map.begin() + P.num_cells());
    out.from_target.assign(q.map.begin() + u.offset_b, q.map.end());
    out.from_source.resize(T.num_cells());
    for (Cell c = 0; c < T.num_cells(); ++c) out.from_source[c] = out.from_product[table[c * np + 0]];
    return out;
}

struct MappingTorus {
    CubeComplex complex;
    std::vector<CellImage> from_product;  // Y x [0,n]
    std::vector<Cell> id_table;
    int length = 0;
};

// Y x [0,n] / (y,n) ~ (f(y),0)
inline MappingTorus mapping_torus(const CubeComplex& Y, const CellularMap& f, int n) {
    if (n <= 0) throw Error("BAD_LENGTH", "torus length must be positive");
    f.validate(Y, Y);
    CubeComplex path = path_complex(n);
    std::vector<Cell> table = product_id_table(Y, path);
    CubeComplex P = product(Y, path);
    Cell np = static_cast<Cell>(path.num_cells());
    std::vector<Identification> ids;
    for (Cell c = 0; c < Y.num_cells(); ++c)
        ids.push_back({table[c * np + n], table[f.target[c] * np + 0], f.sym[c]});
    QuotientResult q = quotient_complex(P, ids);
    MappingTorus out;
    out.complex = std::move(q.complex);
    out.length = n;
    out.id_table = table;
    out.from_product = q.map;
    return out;
}

} // namespace ktc
