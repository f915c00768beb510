#pragma once

#include <cstdint>
#include <map>
#include <vector>
#include <string>

#include "cube_complex.hpp"
#include "cellular_map.hpp"
#include "links.hpp"
#include "polygon.hpp"
#include "words.hpp"

namespace ktc {

// One 2-cell of a presentation complex: the relator split into sides, and a
// tessellated polygon whose side lengths are petal_length * |side|.
struct RelatorRecipe {
    std::vector<Word> sides;
    TessellatedPolygon polygon;

    Word relator() const { return concat(sides); }
};

struct PresentationComplexSpec {
    Presentation pres;
    int petal_length = 4;
    std::vector<RelatorRecipe> recipes;
};

struct PresentationComplexResult {
    CubeComplex complex;
    Cell center = 0;
    std::vector<std::vector<Cell>> petal_edges;     // per generator, oriented path of petal_length edges
    std::vector<std::vector<Cell>> petal_vertices;  // interior vertices per petal
    // pre-quotient bookkeeping, for symmetry transport
    QuotientResult q;                // of the big disjoint union
    std::vector<Cell> rose_cells;    // pre-quotient ids of the rose cells
    std::vector<Cell> poly_offset;   // pre-quotient offset of each relator's polygon complex
    std::vector<size_t> poly_size;

    Cell global_rose(Cell pre) const { return q.map[pre].target; }
    Cell global_poly(size_t r, Cell local) const { return q.map[poly_offset[r] + local].target; }

    VertexLink center_link() const { return vertex_link(complex, center); }
};

// Rose with one petal of `petal_length` edges per generator, polygons glued
// along their boundary words.
inline PresentationComplexResult presentation_complex(const PresentationComplexSpec& spec) {
    const int L = spec.petal_length;
    if (L < 2 || L % 2 != 0) throw Error("BAD_PETAL", "petal length must be even and at least 2");
    spec.pres.validate();
    if (spec.recipes.size() != spec.pres.relators.size())
        throw Error("BAD_RECIPE", "one polygon recipe per relator required");

    // rose
    CubeComplex rose;
    Cell center = rose.add_vertex();
    SignedPerm id0 = SignedPerm::identity(0);
    std::vector<std::vector<Cell>> petal_edges(spec.pres.num_generators);
    std::vector<std::vector<Cell>> petal_vertices(spec.pres.num_generators);
    for (int g = 0; g < spec.pres.num_generators; ++g) {
        std::vector<Cell> pts = {center};
        for (int i = 0; i < L - 1; ++i) {
            Cell v = rose.add_vertex();
            petal_vertices[g].push_back(v);
            pts.push_back(v);
        }
        pts.push_back(center);
        for (int i = 0; i < L; ++i)
            petal_edges[g].push_back(rose.add_cell(1, {{pts[i], id0}, {pts[i + 1], id0}}));
    }

    // assemble the disjoint union rose + polygons
    CubeComplex big = rose;
    std::vector<Cell> poly_offset;
    std::vector<size_t> poly_size;
    std::vector<PolygonComplex> pcs;
    for (size_t r = 0; r < spec.recipes.size(); ++r) {
        const RelatorRecipe& rec = spec.recipes[r];
        Word w = rec.relator();
        if (free_reduce(w) != w || cyclic_reduce(w) != w)
            throw Error("NOT_REDUCED", "relator " + std::to_string(r) + " is not cyclically reduced");
        // side lengths must match petal_length * |side|
        auto sl = rec.polygon.side_lengths();
        if (sl.size() != rec.sides.size()) throw Error("SIDE_MISMATCH", "relator " + std::to_string(r));
        for (size_t i = 0; i < sl.size(); ++i)
            if (sl[i] != static_cast<int64_t>(rec.sides[i].size()) * L)
                throw Error("SIDE_MISMATCH", "relator " + std::to_string(r) + " side " + std::to_string(i));
        Cat0Result cat = is_cat0_polygon(rec.polygon);
        if (!cat.cat0) throw Error("POLYGON_NOT_CAT0", "relator " + std::to_string(r));
        PolygonComplex pc = to_cube_complex(rec.polygon);
        UnionResult u = disjoint_union(big, pc.complex);
        big = std::move(u.complex);
        poly_offset.push_back(u.offset_b);
        poly_size.push_back(pc.complex.num_cells());
        pcs.push_back(std::move(pc));
    }

    // identifications: polygon boundary edges onto petal edges
    std::vector<Identification> ids;
    for (size_t r = 0; r < spec.recipes.size(); ++r) {
        const RelatorRecipe& rec = spec.recipes[r];
        const PolygonComplex& pc = pcs[r];
        Word w = rec.relator();
        size_t perim = pc.boundary_edges.size();
        if (perim != w.size() * static_cast<size_t>(L))
            throw Error("SIDE_MISMATCH", "relator " + std::to_string(r) + " perimeter");
        size_t start = pc.corner_positions.at(0);
        for (size_t li = 0; li < w.size(); ++li) {
            int g = std::abs(w[li]) - 1;
            bool fwd = w[li] > 0;
            for (int k = 0; k < L; ++k) {
                size_t t = (start + li * L + k) % perim;
                Cell pedge = pc.boundary_edges[t];
                // traversal direction of the polygon edge in its own chart
                Cell va = pc.boundary_vertices[t];
                Cell vb = pc.boundary_vertices[(t + 1) % perim];
                bool poly_fwd = pc.complex.endpoint(pedge, 0) == va && pc.complex.endpoint(pedge, 1) == vb;
                Cell redge = fwd ? petal_edges[g][k] : petal_edges[g][L - 1 - k];
                bool rose_fwd = fwd;  // petal edges stored along the forward traversal
                SignedPerm sym = (poly_fwd == rose_fwd) ? SignedPerm::identity(1) : SignedPerm{{-1}};
                ids.push_back({poly_offset[r] + pedge, redge, sym});
            }
        }
    }

    PresentationComplexResult out;
    out.q = quotient_complex(big, ids);
    out.complex = out.q.complex;
    out.center = out.q.map[center].target;
    out.rose_cells.resize(rose.num_cells());
    for (Cell c = 0; c < rose.num_cells(); ++c) out.rose_cells[c] = c;
    out.petal_edges.resize(spec.pres.num_generators);
    out.petal_vertices.resize(spec.pres.num_generators);
    for (int g = 0; g < spec.pres.num_generators; ++g) {
        for (Cell e : petal_edges[g]) out.petal_edges[g].push_back(out.q.map[e].target);
        for (Cell v : petal_vertices[g]) out.petal_vertices[g].push_back(out.q.map[v].target);
    }
    out.poly_offset = poly_offset;
    out.poly_size = poly_size;
    return out;
}

// Cellular automorphism induced by a generator permutation pi (with all
// relators mapped to relators by rel_perm, preserving recipes, orientation
// preserved).  Petal edges map in order; polygon r maps to rel_perm[r] by
// local cell identity.
inline CellularMap symmetry_from_permutation(const PresentationComplexResult& pcr,
                                             const PresentationComplexSpec& spec,
                                             const std::vector<int>& gen_perm,
                                             const std::vector<int>& rel_perm) {
    size_t nold = pcr.q.map.size();
    // pre-quotient map
    CellularMap pre;
    pre.target.assign(nold, CubeComplex::npos);
    pre.sym.resize(nold);
    // rose: center fixed, petal g -> petal gen_perm[g] in order
    pre.target[0] = 0;
    pre.sym[0] = SignedPerm::identity(0);
    const int L = spec.petal_length;
    int ng = spec.pres.num_generators;
    auto rose_vertex = [&](int g, int i) -> Cell { return 1 + static_cast<Cell>(g) * (2 * L - 1) + i; };
    auto rose_edge = [&](int g, int k) -> Cell { return 1 + static_cast<Cell>(g) * (2 * L - 1) + (L - 1) + k; };
    for (int g = 0; g < ng; ++g) {
        for (int i = 0; i < L - 1; ++i) {
            pre.target[rose_vertex(g, i)] = rose_vertex(gen_perm[g], i);
            pre.sym[rose_vertex(g, i)] = SignedPerm::identity(0);
        }
        for (int k = 0; k < L; ++k) {
            pre.target[rose_edge(g, k)] = rose_edge(gen_perm[g], k);
            pre.sym[rose_edge(g, k)] = SignedPerm::identity(1);
        }
    }
    for (size_t r = 0; r < spec.recipes.size(); ++r) {
        if (pcr.poly_size[r] != pcr.poly_size[rel_perm[r]])
            throw Error("BAD_SYMMETRY", "permuted relators have different polygons");
        for (Cell c = 0; c < pcr.poly_size[r]; ++c) {
            pre.target[pcr.poly_offset[r] + c] = pcr.poly_offset[rel_perm[r]] + c;
            // dimension of the local cell: look it up through the quotient rep
            pre.sym[pcr.poly_offset[r] + c] = SignedPerm::identity(0);
        }
    }
    // fix symmetry ranks for polygon cells (identity of the right dimension)
    for (size_t r = 0; r < spec.recipes.size(); ++r)
        for (Cell c = 0; c < pcr.poly_size[r]; ++c) {
            Cell pre_id = pcr.poly_offset[r] + c;
            const CellImage& im = pcr.q.map[pre_id];
            int d = pcr.complex.dim(im.target);
            pre.sym[pre_id] = SignedPerm::identity(d);
        }
    // descend through the quotient
    CellularMap out;
    out.target.resize(pcr.complex.num_cells());
    out.sym.resize(pcr.complex.num_cells());
    for (Cell nc = 0; nc < pcr.complex.num_cells(); ++nc) {
        Cell rep = pcr.q.rep[nc];
        const CellImage& fr = pcr.q.map[pre.target[rep]];
        const CellImage& sr = pcr.q.map[rep];
        out.target[nc] = fr.target;
        out.sym[nc] = SignedPerm::compose(SignedPerm::compose(fr.sym, pre.sym[rep]), sr.sym.inverse());
    }
    out.validate(pcr.complex, pcr.complex);
    return out;
}

// ---------------------------------------------------------------------------
// meeting points: corners a_i^{e1} b_j^{e2} across side-decomposed relators

// Sides must alternate between the two alphabet classes given by `is_b`;
// the corner between consecutive sides is the pair (last letter, first
// letter), normalized so the a-class letter comes first.
inline bool meeting_points_distinct(const std::vector<std::vector<Word>>& relator_sides,
                                    const std::function<bool(int)>& is_b_class) {
    std::set<std::array<int, 4>> seen;
    for (auto& sides : relator_sides) {
        size_t m = sides.size();
        for (size_t s = 0; s < m; ++s) {
            const Word& cur = sides[s];
            const Word& nxt = sides[(s + 1) % m];
            if (cur.empty() || nxt.empty()) throw Error("BAD_WORD", "empty side");
            int x = cur.back(), y = nxt.front();
            int gx = std::abs(x) - 1, gy = std::abs(y) - 1;
            bool bx = is_b_class(gx), by = is_b_class(gy);
            if (bx == by) throw Error("BAD_WORD", "sides do not alternate classes");
            std::array<int, 4> key;
            if (!bx) key = {gx, x > 0 ? 1 : -1, gy, y > 0 ? 1 : -1};
            else key = {gy, y > 0 ? -1 : 1, gx, x > 0 ? -1 : 1};  // formal inverse, a-first
            if (!seen.insert(key).second) return false;
        }
    }
    return true;
}

} // namespace ktc
