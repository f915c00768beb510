#pragma once

#include <cstdint>
#include <vector>
#include <string>

#include "presentation_complex.hpp"
#include "polygon.hpp"
#include "words.hpp"

namespace ktc {

// ---------------------------------------------------------------------------
// Y(n): n pentagons a_i a_{i+1} a_{i+3}^-1 a_{i+1}^-1 a_{i+3} on an n-petal rose

inline PresentationComplexSpec y_n_spec(int n, int petal_length = 4) {
    if (n < 5) throw Error("BAD_N", "need n >= 5 so the indices are distinct");
    if (petal_length < 2 || petal_length % 2 != 0) throw Error("BAD_PETAL", "petal length must be even >= 2");
    PresentationComplexSpec spec;
    spec.pres.num_generators = n;
    spec.petal_length = petal_length;
    TessellatedPolygon pent = single_vertex_polygon(std::vector<int64_t>(5, petal_length));
    for (int i = 0; i < n; ++i) {
        auto g = [&](int j) { return (i + j) % n; };
        RelatorRecipe rec;
        rec.sides = {letter(g(0)), letter(g(1)), letter(g(3), -1), letter(g(1), -1), letter(g(3))};
        rec.polygon = pent;
        spec.pres.relators.push_back(rec.relator());
        spec.recipes.push_back(rec);
    }
    return spec;
}

inline PresentationComplexResult y_n(int n, int petal_length = 4) {
    return presentation_complex(y_n_spec(n, petal_length));
}

// the central link straight from the adjacency lists; vertex 2i = inward
// end of petal i, 2i+1 = outward end
inline SimplicialComplex link_graph_yn(int n) {
    if (n < 5) throw Error("BAD_N", "need n >= 5");
    SimplicialComplex g;
    g.num_vertices = 2 * n;
    for (uint32_t v = 0; v < g.num_vertices; ++v) g.add_face({v});
    auto IN = [&](int i) { return static_cast<uint32_t>(2 * (((i % n) + n) % n)); };
    auto OUT = [&](int i) { return IN(i) + 1; };
    for (int i = 0; i < n; ++i) {
        for (uint32_t w : {OUT(i + 1), IN(i + 2), IN(i - 2), OUT(i + 2), OUT(i - 3)})
            g.add_face({std::min(IN(i), w), std::max(IN(i), w)});
        for (uint32_t w : {IN(i + 3), IN(i - 1), IN(i - 2), OUT(i + 2), OUT(i - 2)})
            g.add_face({std::min(OUT(i), w), std::max(OUT(i), w)});
    }
    g.dedup();
    return g;
}

// ---------------------------------------------------------------------------
// the six-relator acyclic presentation on a..f

inline Presentation acycone_presentation() {
    Presentation p;
    p.num_generators = 6;
    // a,b,c,d,e,f = 1..6
    p.relators = {
        {1, 2, 3, 4, 5, 6},
        {1, -2, 3, 3, -6, 5, 5, -4},
        {1, 1, 6, 3, 3, 2, 5, 4},
        {1, -4, -4, 3, -2, -2, 5, -6},
        {1, 4, 4, 3, 6, 6, 5, 2, 2},
        {1, -6, -6, 3, -4, 5, -2, -2},
    };
    return p;
}

inline PresentationComplexSpec acycone_spec(int petal_length = 4) {
    PresentationComplexSpec spec;
    spec.pres = acycone_presentation();
    spec.petal_length = petal_length;
    // side decompositions: single-power sides alternating a,c,e with b,d,f
    std::vector<std::vector<Word>> sides = {
        {{1}, {2}, {3}, {4}, {5}, {6}},
        {{1}, {-2}, {3, 3}, {-6}, {5, 5}, {-4}},
        {{1, 1}, {6}, {3, 3}, {2}, {5}, {4}},
        {{1}, {-4, -4}, {3}, {-2, -2}, {5}, {-6}},
        {{1}, {4, 4}, {3}, {6, 6}, {5}, {2, 2}},
        {{1}, {-6, -6}, {3}, {-4}, {5}, {-2, -2}},
    };
    for (size_t r = 0; r < sides.size(); ++r) {
        RelatorRecipe rec;
        rec.sides = sides[r];
        std::vector<int64_t> lens;
        for (auto& s : rec.sides) lens.push_back(static_cast<int64_t>(s.size()) * petal_length);
        rec.polygon = single_vertex_polygon(lens);
        spec.recipes.push_back(rec);
    }
    return spec;
}

inline PresentationComplexResult acycone_complex(int petal_length = 4) {
    return presentation_complex(acycone_spec(petal_length));
}

// ---------------------------------------------------------------------------
// the CAT(0) octagon with seven sides of length 2 and one of length 4

// Pinned realization: cut two unit squares off a 4 x 5 rectangle, corners
// starting at the rectangle corner (0,0).  Curvature sits at two corners
// and at the midpoints of two sides.
inline TessellatedPolygon fig_octagon() {
    TessellatedPolygon p = corner_cut_rectangle(4, 5, {4, 2, 2, 2, 2, 2, 2, 2}, 0, false);
    if (!is_cat0_polygon(p).cat0) throw Error("POLYGON_NOT_CAT0", "octagon realization");
    auto cs = all_curvatures(p);
    std::set<uint32_t> corner_set(p.corners.begin(), p.corners.end());
    int neg_corner = 0, neg_side = 0;
    for (uint32_t v = 0; v < p.num_vertices; ++v) {
        if (cs[v] == 0) continue;
        if (cs[v] != -1) throw Error("POLYGON_SHAPE", "unexpected curvature value");
        if (corner_set.count(v)) ++neg_corner;
        else ++neg_side;
    }
    if (neg_corner != 2 || neg_side != 2) throw Error("POLYGON_SHAPE", "curvature pattern mismatch");
    return p;
}

// ---------------------------------------------------------------------------
// the octagon complex with the order-4 symmetry (n = 4 word construction)

struct OctagonComplexResult {
    PresentationComplexSpec spec;
    PresentationComplexResult built;
    CellularMap rho;   // order-4 action a_i -> a_{i+1}, b_i -> b_{i+1}
    Involution tau;    // the action of 2, a_i -> a_{i+2}
    Presentation quotient_presentation;  // of Y/tau, on a_1, a_2, b_1, b_2
};

inline OctagonComplexResult octagon_complex(int petal_length = 4) {
    const int n = 4;
    auto A = [&](int i) {  // a_i a_{i+2} a_i^-2 a_{i+2}^-1 a_i, generators a = 0..3
        int x = ((i % n) + n) % n, y = (x + 2) % n;
        return concat({letter(x), letter(y), letter(x, -2), letter(y, -1), letter(x)});
    };
    auto B = [&](int i) {  // same on b-generators 4..7
        int x = 4 + ((i % n) + n) % n, y = 4 + ((x - 4 + 2) % n);
        return concat({letter(x), letter(y), letter(x, -2), letter(y, -1), letter(x)});
    };
    OctagonComplexResult out;
    out.spec.pres.num_generators = 8;
    out.spec.petal_length = petal_length;
    TessellatedPolygon oct = subdivide_polygon(collar_all_iter(fig_octagon(), 5));
    for (int i = 0; i < n; ++i) {
        RelatorRecipe rec;
        rec.sides = {concat({letter(i), A(i)}), B(i), A(i + 1), B(i), A(i + 2), B(i), A(i + 3), B(i)};
        rec.polygon = oct;
        out.spec.pres.relators.push_back(rec.relator());
        out.spec.recipes.push_back(rec);
    }
    for (int i = 0; i < n; ++i) {
        RelatorRecipe rec;
        rec.sides = {concat({letter(4 + i), B(i)}),
                     inverse_word(A(i)),
                     B(i),
                     inverse_word(A(i + 1)),
                     B(i),
                     inverse_word(A(i + 2)),
                     B(i),
                     inverse_word(A(i + 3))};
        out.spec.pres.relators.push_back(rec.relator());
        rec.polygon = oct;
        out.spec.recipes.push_back(rec);
    }
    out.built = presentation_complex(out.spec);
    // generator shift: a_i -> a_{i+1}, b_i -> b_{i+1}; relators shift by one
    std::vector<int> gperm(8), rperm(8);
    for (int i = 0; i < 4; ++i) {
        gperm[i] = (i + 1) % 4;
        gperm[4 + i] = 4 + (i + 1) % 4;
        rperm[i] = (i + 1) % 4;
        rperm[4 + i] = 4 + (i + 1) % 4;
    }
    out.rho = symmetry_from_permutation(out.built, out.spec, gperm, rperm);
    out.tau = Involution{CellularMap::compose(out.rho, out.rho)};
    out.tau.validate(out.built.complex);
    // quotient words: a_i -> a_{i mod 2}, b_i -> b_{i mod 2}
    out.quotient_presentation.num_generators = 4;
    for (auto& r : out.spec.pres.relators) {
        Word w;
        for (int x : r) {
            int g = std::abs(x) - 1;
            int q = (g < 4) ? (g % 2) : 2 + (g % 2);
            w.push_back(x > 0 ? q + 1 : -(q + 1));
        }
        out.quotient_presentation.relators.push_back(w);
    }
    return out;
}

// ---------------------------------------------------------------------------
// the no-small-quotient family (n = 3)

inline Presentation fewquot_presentation(int N) {
    if (N < 1) throw Error("BAD_N", "need N >= 1");
    const int n = 3;
    auto A = [&](int i) {
        int x = ((i % n) + n) % n, y = (x + 1) % n;
        return concat({word_pow({x + 1}, N), word_pow({y + 1}, -2 * N), word_pow({x + 1}, N)});
    };
    auto B = [&](int i) {
        int x = 3 + ((i % n) + n) % n, y = 3 + ((x - 3 + 1) % n);
        return concat({word_pow({x + 1}, N), word_pow({y + 1}, -2 * N), word_pow({x + 1}, N)});
    };
    Presentation p;
    p.num_generators = 6;
    for (int i = 0; i < n; ++i)
        p.relators.push_back(concat({letter(i), A(i), B(0), A(i + 1), B(1), A(i + 2), B(2)}));
    for (int i = 0; i < n; ++i)
        p.relators.push_back(concat({letter(3 + i), B(i), inverse_word(A(0)), B(i + 1), inverse_word(A(1)),
                                     B(i + 2), inverse_word(A(2))}));
    return p;
}

inline PresentationComplexSpec fewquot_spec(int N, int petal_length = 4) {
    const int n = 3;
    PresentationComplexSpec spec;
    spec.pres = fewquot_presentation(N);
    spec.petal_length = petal_length;
    auto A = [&](int i) {
        int x = ((i % n) + n) % n, y = (x + 1) % n;
        return concat({word_pow({x + 1}, N), word_pow({y + 1}, -2 * N), word_pow({x + 1}, N)});
    };
    auto B = [&](int i) {
        int x = 3 + ((i % n) + n) % n, y = 3 + ((x - 3 + 1) % n);
        return concat({word_pow({x + 1}, N), word_pow({y + 1}, -2 * N), word_pow({x + 1}, N)});
    };
    for (int i = 0; i < n; ++i) {
        RelatorRecipe rec;
        rec.sides = {concat({letter(i), A(i)}), B(0), A(i + 1), B(1), A(i + 2), B(2)};
        std::vector<int64_t> lens;
        for (auto& s : rec.sides) lens.push_back(static_cast<int64_t>(s.size()) * petal_length);
        rec.polygon = single_vertex_polygon(lens);
        spec.recipes.push_back(rec);
    }
    for (int i = 0; i < n; ++i) {
        RelatorRecipe rec;
        rec.sides = {concat({letter(3 + i), B(i)}), inverse_word(A(0)), B(i + 1),
                     inverse_word(A(1)), B(i + 2), inverse_word(A(2))};
        std::vector<int64_t> lens;
        for (auto& s : rec.sides) lens.push_back(static_cast<int64_t>(s.size()) * petal_length);
        rec.polygon = single_vertex_polygon(lens);
        spec.recipes.push_back(rec);
    }
    return spec;
}

// certificate that adding the torsion relators kills the group
struct FewquotCertificate {
    bool h1_trivial = false;
    std::optional<size_t> enlarged_index;  // 1 when the bounded enumeration closes
};

inline FewquotCertificate fewquot_triviality_certificate(int N, size_t max_cosets = 10000) {
    FewquotCertificate out;
    Presentation p = fewquot_presentation(N);
    Presentation enlarged = p;
    for (int g = 0; g < 6; ++g) enlarged.relators.push_back(word_pow({g + 1}, N));
    out.h1_trivial = presentation_h1_h2(enlarged).at(1).trivial();
    out.enlarged_index = coset_enumeration_index(enlarged, max_cosets);
    return out;
}

} // namespace ktc
