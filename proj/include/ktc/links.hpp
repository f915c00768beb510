#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>
#include <algorithm>
#include <unordered_map>

#include "cube_complex.hpp"

namespace ktc {

// Complex built from simplices with unordered face incidence, allowing
// repeated faces; the general structure of a vertex link in a cube complex.
struct SimplexComplex {
    struct Simplex {
        int dim = 0;
        std::vector<uint32_t> facets;  // dim+1 ids into simplices (empty for vertices)
        std::vector<uint32_t> verts;   // dim+1 vertex slots (0-simplex ids)
    };
    std::vector<Simplex> simplices;

    size_t count_dim(int d) const {
        size_t n = 0;
        for (auto& s : simplices) n += (s.dim == d);
        return n;
    }
    int dimension() const {
        int d = 0;
        for (auto& s : simplices) d = std::max(d, s.dim);
        return d;
    }

    bool is_simplicial(std::string* why = nullptr) const {
        std::map<std::pair<int, std::vector<uint32_t>>, size_t> seen;
        for (size_t i = 0; i < simplices.size(); ++i) {
            auto v = simplices[i].verts;
            std::sort(v.begin(), v.end());
            if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
                if (why) *why = "simplex " + std::to_string(i) + " has a repeated vertex";
                return false;
            }
            auto key = std::make_pair(simplices[i].dim, std::move(v));
            auto [it, fresh] = seen.emplace(std::move(key), i);
            if (!fresh) {
                if (why)
                    *why = "simplices " + std::to_string(it->second) + " and " + std::to_string(i) +
                           " span the same vertex set";
                return false;
            }
        }
        return true;
    }
};

// Abstract simplicial complex: downward-closed family of vertex subsets.
struct SimplicialComplex {
    uint32_t num_vertices = 0;
    std::vector<std::vector<uint32_t>> faces;  // sorted vertex lists, dims 0..; downward closed

    void add_face(std::vector<uint32_t> f) {
        std::sort(f.begin(), f.end());
        faces.push_back(std::move(f));
    }
    void dedup() {
        std::sort(faces.begin(), faces.end(), [](auto& a, auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    }
    size_t count_dim(int d) const {
        size_t n = 0;
        for (auto& f : faces) n += (static_cast<int>(f.size()) == d + 1);
        return n;
    }
    int dimension() const {
        int d = -1;
        for (auto& f : faces) d = std::max(d, static_cast<int>(f.size()) - 1);
        return d;
    }
    bool has_face(std::vector<uint32_t> f) const {
        std::sort(f.begin(), f.end());
        for (auto& g : faces)
            if (g == f) return true;
        return false;
    }
    bool validate(std::string* why = nullptr) const {
        std::set<std::vector<uint32_t>> all(faces.begin(), faces.end());
        for (auto& f : faces) {
            if (f.empty()) {
                if (why) *why = "empty face";
                return false;
            }
            for (uint32_t v : f)
                if (v >= num_vertices) {
                    if (why) *why = "vertex out of range";
                    return false;
                }
            if (!std::is_sorted(f.begin(), f.end()) ||
                std::adjacent_find(f.begin(), f.end()) != f.end()) {
                if (why) *why = "face not a sorted vertex set";
                return false;
            }
            if (f.size() > 1) {
                for (size_t i = 0; i < f.size(); ++i) {
                    auto sub = f;
                    sub.erase(sub.begin() + i);
                    if (!all.count(sub)) {
                        if (why) *why = "not downward closed";
                        return false;
                    }
                }
            }
        }
        return true;
    }

    // the complex spanned by simplices from a SimplexComplex that passed
    // is_simplicial
    static SimplicialComplex from_simplex_complex(const SimplexComplex& sc) {
        SimplicialComplex out;
        uint32_t nv = 0;
        for (auto& s : sc.simplices)
            if (s.dim == 0) ++nv;
        out.num_vertices = nv;
        for (auto& s : sc.simplices) {
            std::vector<uint32_t> f = s.verts;
            std::sort(f.begin(), f.end());
            out.faces.push_back(std::move(f));
        }
        out.dedup();
        return out;
    }
};

struct FlagResult {
    bool flag = true;
    std::vector<uint32_t> witness;  // a minimal missing clique when !flag
};

// Gromov's condition on one complex: every clique of the 1-skeleton spans a
// simplex.  On failure the witness is minimal: all its proper subsets span.
inline FlagResult is_flag(const SimplicialComplex& s) {
    FlagResult out;
    uint32_t n = s.num_vertices;
    std::vector<std::vector<uint8_t>> adj(n, std::vector<uint8_t>(n, 0));
    std::set<std::vector<uint32_t>> all(s.faces.begin(), s.faces.end());
    for (auto& f : s.faces)
        if (f.size() == 2) adj[f[0]][f[1]] = adj[f[1]][f[0]] = 1;
    auto is_face = [&](const std::vector<uint32_t>& f) { return all.count(f) != 0; };

    std::vector<std::vector<uint32_t>> frontier;  // k-cliques that are faces
    for (auto& f : s.faces)
        if (f.size() == 2) frontier.push_back(f);
    while (!frontier.empty()) {
        std::vector<std::vector<uint32_t>> next;
        for (auto& q : frontier) {
            for (uint32_t w = q.back() + 1; w < n; ++w) {
                bool ok = true;
                for (uint32_t v : q)
                    if (!adj[v][w]) { ok = false; break; }
                if (!ok) continue;
                auto ext = q;
                ext.push_back(w);
                if (is_face(ext)) {
                    next.push_back(ext);
                    continue;
                }
                // missing clique found; minimize it
                std::vector<uint32_t> m = ext;
                bool shrunk = true;
                while (shrunk) {
                    shrunk = false;
                    for (size_t i = 0; i < m.size(); ++i) {
                        auto sub = m;
                        sub.erase(sub.begin() + i);
                        if (sub.size() >= 2 && !is_face(sub)) {
                            m = sub;
                            shrunk = true;
                            break;
                        }
                    }
                }
                out.flag = false;
                out.witness = m;
                return out;
            }
        }
        frontier = std::move(next);
    }
    return out;
}

// every simplex of `amb` with all vertices in `sub` must lie in `sub`
inline bool is_full_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& amb) {
    std::set<std::vector<uint32_t>> in_sub(sub.faces.begin(), sub.faces.end());
    std::set<uint32_t> verts;
    for (auto& f : sub.faces)
        if (f.size() == 1) verts.insert(f[0]);
    for (auto& f : amb.faces) {
        bool inside = true;
        for (uint32_t v : f)
            if (!verts.count(v)) { inside = false; break; }
        if (inside && !in_sub.count(f)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// vertex links

struct VertexLink {
    SimplexComplex link;
    bool simplicial = true;
    std::string why_not_simplicial;
    // provenance: link vertex i = end `vertex_end[i].second` of edge
    // `vertex_end[i].first`; higher simplex i sits at corner (cell, bits)
    std::vector<std::pair<Cell, int>> vertex_end;
    std::vector<std::pair<Cell, uint32_t>> simplex_corner;  // indexed like link.simplices
    std::vector<Cell> simplex_cell;                         // cell of each simplex (edge for dim 0)

    SimplicialComplex as_simplicial() const { return SimplicialComplex::from_simplex_complex(link); }
};

namespace detail {

struct CornerIndex {
    std::vector<std::vector<Cell>> tables;
    // corners grouped by vertex: (cell, bits) for cells of dim >= 1
    std::vector<uint32_t> bucket_off;
    std::vector<std::pair<Cell, uint32_t>> bucket;

    explicit CornerIndex(const CubeComplex& cx) : tables(cx.corner_tables()) {
        size_t n = cx.num_cells();
        std::vector<uint32_t> cnt(n + 1, 0);
        for (Cell c = 0; c < n; ++c) {
            if (cx.dim(c) == 0) continue;
            for (Cell v : tables[c]) ++cnt[v + 1];
        }
        bucket_off.assign(n + 1, 0);
        for (size_t i = 1; i <= n; ++i) bucket_off[i] = bucket_off[i - 1] + cnt[i];
        bucket.resize(bucket_off[n]);
        std::vector<uint32_t> cur(bucket_off.begin(), bucket_off.end() - 1);
        for (Cell c = 0; c < n; ++c) {
            if (cx.dim(c) == 0) continue;
            const auto& t = tables[c];
            for (uint32_t bits = 0; bits < t.size(); ++bits) bucket[cur[t[bits]]++] = {c, bits};
        }
    }
};

inline VertexLink link_at(const CubeComplex& cx, Cell v, const CornerIndex& ci) {
    VertexLink out;
    std::map<std::pair<Cell, uint32_t>, uint32_t> id_of;  // (cell, corner) -> simplex id
    // gather corners at v grouped by dimension
    std::vector<std::pair<Cell, uint32_t>> corners(ci.bucket.begin() + ci.bucket_off[v],
                                                   ci.bucket.begin() + ci.bucket_off[v + 1]);
    std::stable_sort(corners.begin(), corners.end(), [&](auto& a, auto& b) {
        if (cx.dim(a.first) != cx.dim(b.first)) return cx.dim(a.first) < cx.dim(b.first);
        return a < b;
    });
    for (auto& [c, bits] : corners) {
        int d = cx.dim(c);
        SimplexComplex::Simplex s;
        s.dim = d - 1;
        if (d == 1) {
            s.verts = {static_cast<uint32_t>(out.link.simplices.size())};
        } else {
            for (int i = 1; i <= d; ++i) {
                // facet opposite slot i: restrict direction i
                int si = (bits >> (i - 1)) & 1;
                auto f = cx.face(c, i, si);
                const SignedPerm& g = cx.sym(f.sym);
                uint32_t rest = 0;
                int oi = 0;
                for (int j = 1; j <= d; ++j) {
                    if (j == i) continue;
                    rest |= ((bits >> (j - 1)) & 1) << oi;
                    ++oi;
                }
                uint32_t mapped = 0;
                for (int j = 0; j < d - 1; ++j) {
                    uint32_t b = (rest >> g.src(j)) & 1;
                    if (g.flip(j)) b ^= 1;
                    mapped |= b << j;
                }
                s.facets.push_back(id_of.at({f.target, mapped}));
            }
            for (int i = 1; i <= d; ++i) {
                auto [edge, end] = cx.edge_end_at_corner(c, bits, i);
                s.verts.push_back(id_of.at({edge, static_cast<uint32_t>(end)}));
            }
        }
        uint32_t id = static_cast<uint32_t>(out.link.simplices.size());
        id_of[{c, bits}] = id;
        out.link.simplices.push_back(std::move(s));
        out.simplex_corner.push_back({c, bits});
        out.simplex_cell.push_back(c);
        if (d == 1) out.vertex_end.push_back({c, static_cast<int>(bits)});
    }
    out.simplicial = out.link.is_simplicial(&out.why_not_simplicial);
    return out;
}

}  // namespace detail

inline VertexLink vertex_link(const CubeComplex& cx, Cell v) {
    if (v >= cx.num_cells() || cx.dim(v) != 0) throw Error("UNKNOWN_VERTEX", "cell is not a 0-cube");
    detail::CornerIndex ci(cx);
    return detail::link_at(cx, v, ci);
}

// ---------------------------------------------------------------------------
// Gromov criterion

struct GromovReport {
    struct Failure {
        Cell vertex;
        bool non_simplicial = false;
        std::string detail;
        std::vector<uint32_t> missing_clique;  // link-vertex ids when non-flag
    };
    bool pass = true;
    size_t vertices_checked = 0;
    std::vector<Failure> failures;
};

// all vertex links must be flag simplicial complexes; this certifies the
// complex locally CAT(0), and CAT(0) when also simply connected
inline GromovReport gromov_check(const CubeComplex& cx, size_t max_failures = 16) {
    GromovReport rep;
    detail::CornerIndex ci(cx);
    for (Cell v = 0; v < cx.num_cells(); ++v) {
        if (cx.dim(v) != 0) continue;
        ++rep.vertices_checked;
        VertexLink lk = detail::link_at(cx, v, ci);
        if (!lk.simplicial) {
            rep.pass = false;
            rep.failures.push_back({v, true, lk.why_not_simplicial, {}});
        } else {
            FlagResult fr = is_flag(lk.as_simplicial());
            if (!fr.flag) {
                rep.pass = false;
                rep.failures.push_back({v, false, "missing clique", fr.witness});
            }
        }
        if (rep.failures.size() >= max_failures) break;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// combinatorial convexity

// d (a face-closed cell set) is combinatorially convex in cx when it is a
// connected subcomplex and each vertex link of d is full in the ambient link
inline bool is_combinatorially_convex(const CubeComplex& cx, const std::vector<Cell>& d_cells,
                                      std::string* why = nullptr) {
    if (!cx.is_subcomplex(d_cells)) throw Error("NOT_A_SUBCOMPLEX", "convexity input is not a subcomplex");
    SubcomplexResult sub = extract_subcomplex(cx, d_cells);
    if (!sub.complex.connected()) {
        if (why) *why = "subcomplex not connected";
        return false;
    }
    std::vector<uint8_t> in(cx.num_cells(), 0);
    for (Cell c : d_cells) in[c] = 1;
    detail::CornerIndex ci(cx);
    for (Cell v : d_cells) {
        if (cx.dim(v) != 0) continue;
        VertexLink lk = detail::link_at(cx, v, ci);
        if (!lk.simplicial) throw Error("LINK_NOT_SIMPLICIAL", "ambient link not simplicial at vertex " + std::to_string(v));
        // link vertices belonging to d
        std::vector<uint8_t> v_in(lk.link.simplices.size(), 0);
        for (size_t i = 0; i < lk.link.simplices.size(); ++i)
            if (in[lk.simplex_cell[i]]) v_in[i] = 1;
        for (size_t i = 0; i < lk.link.simplices.size(); ++i) {
            const auto& s = lk.link.simplices[i];
            if (v_in[i]) continue;
            bool verts_in = true;
            for (uint32_t w : s.verts)
                if (!v_in[w]) { verts_in = false; break; }
            if (verts_in) {
                if (why)
                    *why = "link of vertex " + std::to_string(v) + " not full (simplex of cell " +
                           std::to_string(lk.simplex_cell[i]) + ")";
                return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// cubicality (cubical complex vs general cube complex)

struct CubicalityReport {
    bool cubes_embed = true;
    bool intersections_are_faces = true;
    bool links_simplicial = true;
    Cell embed_witness = CubeComplex::npos;
    std::pair<Cell, Cell> intersection_witness{CubeComplex::npos, CubeComplex::npos};
    Cell link_witness = CubeComplex::npos;
    bool cubical() const { return cubes_embed && intersections_are_faces && links_simplicial; }
};

inline CubicalityReport cubicality_check(const CubeComplex& cx) {
    CubicalityReport rep;
    auto closures = cx.face_closures();

    // cubes embed iff the (S,eps) |-> cell map is injective, i.e. the cell
    // has 3^d distinct iterated face positions
    {
        std::vector<size_t> pos_count(cx.num_cells(), 0);
        std::vector<Cell> order(cx.num_cells());
        for (Cell c = 0; c < cx.num_cells(); ++c) order[c] = c;
        std::stable_sort(order.begin(), order.end(), [&](Cell a, Cell b) { return cx.dim(a) < cx.dim(b); });
        for (Cell c : order) {
            size_t expect = 1;
            for (int i = 0; i < cx.dim(c); ++i) expect *= 3;
            if (closures[c].size() != expect) {
                // distinct faces < positions means some positions coincide
                rep.cubes_embed = false;
                rep.embed_witness = c;
                break;
            }
        }
    }

    // pairwise intersections: a union of common iterated faces; must be the
    // full face set of a single common face
    {
        auto tables = cx.corner_tables();
        std::vector<std::vector<Cell>> vsets(cx.num_cells());
        for (Cell c = 0; c < cx.num_cells(); ++c) {
            vsets[c] = tables[c];
            std::sort(vsets[c].begin(), vsets[c].end());
            vsets[c].erase(std::unique(vsets[c].begin(), vsets[c].end()), vsets[c].end());
        }
        std::vector<std::vector<Cell>> star(cx.num_cells());
        for (Cell c = 0; c < cx.num_cells(); ++c)
            for (Cell v : vsets[c]) star[v].push_back(c);
        bool done = false;
        for (Cell v = 0; v < cx.num_cells() && !done; ++v) {
            auto& st = star[v];
            for (size_t i = 0; i < st.size() && !done; ++i)
                for (size_t j = i + 1; j < st.size() && !done; ++j) {
                    Cell a = st[i], b = st[j];
                    // handle each pair at its smallest shared vertex only
                    {
                        const auto& va = vsets[a];
                        const auto& vb = vsets[b];
                        size_t p = 0, q = 0;
                        Cell first_common = CubeComplex::npos;
                        while (p < va.size() && q < vb.size()) {
                            if (va[p] == vb[q]) { first_common = va[p]; break; }
                            if (va[p] < vb[q]) ++p; else ++q;
                        }
                        if (first_common != v) continue;
                    }
                    std::vector<Cell> inter;
                    std::set_intersection(closures[a].begin(), closures[a].end(), closures[b].begin(),
                                          closures[b].end(), std::back_inserter(inter));
                    if (inter.empty()) continue;
                    Cell m = inter[0];
                    for (Cell c : inter)
                        if (cx.dim(c) > cx.dim(m)) m = c;
                    if (inter != closures[m]) {
                        rep.intersections_are_faces = false;
                        rep.intersection_witness = {a, b};
                        done = true;
                    }
                }
        }
    }

    {
        detail::CornerIndex ci(cx);
        for (Cell v = 0; v < cx.num_cells(); ++v) {
            if (cx.dim(v) != 0) continue;
            VertexLink lk = detail::link_at(cx, v, ci);
            if (!lk.simplicial) {
                rep.links_simplicial = false;
                rep.link_witness = v;
                break;
            }
        }
    }
    return rep;
}

} // namespace ktc
