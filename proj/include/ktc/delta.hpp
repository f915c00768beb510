#pragma once

#include <cstdint>
#include <map>
#include <vector>
#include <algorithm>
#include <string>

#include "cube_complex.hpp"
#include "links.hpp"

namespace ktc {

// Semi-simplicial set: simplices with ordered face operators d_0..d_n.
struct DeltaComplex {
    std::vector<int> dims;
    std::vector<std::vector<uint32_t>> d;  // d[s][i] = i-th face, size dim+1 (empty for vertices)

    uint32_t add_simplex(int dim, std::vector<uint32_t> faces) {
        if (static_cast<int>(faces.size()) != (dim == 0 ? 0 : dim + 1))
            throw Error("BAD_FACE_COUNT", "delta simplex needs dim+1 faces");
        dims.push_back(dim);
        d.push_back(std::move(faces));
        return static_cast<uint32_t>(dims.size() - 1);
    }
    uint32_t add_vertex() { return add_simplex(0, {}); }

    size_t size() const { return dims.size(); }
    int dimension() const {
        int m = 0;
        for (int x : dims) m = std::max(m, x);
        return m;
    }
    size_t count_dim(int k) const {
        size_t n = 0;
        for (int x : dims) n += (x == k);
        return n;
    }

    void validate() const {
        for (size_t s = 0; s < size(); ++s) {
            int n = dims[s];
            for (int i = 0; i <= n && n > 0; ++i) {
                uint32_t f = d[s][i];
                if (f >= size() || dims[f] != n - 1) throw Error("BAD_FACE", "simplex " + std::to_string(s));
            }
            // d_i d_j = d_{j-1} d_i for i < j
            for (int j = 1; j <= n && n >= 2; ++j)
                for (int i = 0; i < j; ++i)
                    if (d[d[s][j]][i] != d[d[s][i]][j - 1])
                        throw Error("SEMI_SIMPLICIAL_IDENTITY",
                                    "simplex " + std::to_string(s) + " (i,j)=(" + std::to_string(i) + "," +
                                        std::to_string(j) + ")");
        }
    }

    // iterated face keeping the vertex positions in `keep` (ascending)
    uint32_t iterated_face(uint32_t s, const std::vector<int>& keep) const {
        uint32_t cur = s;
        int n = dims[s];
        for (int k = n; k >= 0; --k) {
            if (std::find(keep.begin(), keep.end(), k) != keep.end()) continue;
            if (dims[cur] == 0) break;
            cur = d[cur][k];
        }
        return cur;
    }

    uint32_t vertex_of(uint32_t s, int i) const { return iterated_face(s, {i}); }
    uint32_t edge_of(uint32_t s, int i, int j) const { return iterated_face(s, {i, j}); }

    // the C(n+1,2) edges of every simplex must be pairwise distinct
    bool category_c_check(std::string* why = nullptr) const {
        for (size_t s = 0; s < size(); ++s) {
            int n = dims[s];
            if (n < 2) continue;
            std::vector<uint32_t> edges;
            for (int i = 0; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) edges.push_back(edge_of(static_cast<uint32_t>(s), i, j));
            std::sort(edges.begin(), edges.end());
            if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
                if (why) *why = "simplex " + std::to_string(s) + " has a repeated edge";
                return false;
            }
        }
        return true;
    }

    std::vector<uint32_t> skeleton_cells(int k) const {
        std::vector<uint32_t> out;
        for (uint32_t s = 0; s < size(); ++s)
            if (dims[s] <= k) out.push_back(s);
        return out;
    }
};

// Map of semi-simplicial sets (commutes with the face operators).
struct DeltaMap {
    std::vector<uint32_t> image;  // per simplex of the source

    void validate(const DeltaComplex& x, const DeltaComplex& y) const {
        if (image.size() != x.size()) throw Error("BAD_MAP", "image size mismatch");
        for (uint32_t s = 0; s < x.size(); ++s) {
            if (y.dims[image[s]] != x.dims[s]) throw Error("BAD_MAP", "dimension not preserved");
            for (int i = 0; i <= x.dims[s] && x.dims[s] > 0; ++i)
                if (image[x.d[s][i]] != y.d[image[s]][i]) throw Error("BAD_MAP", "does not commute with faces");
        }
    }
    static DeltaMap identity(const DeltaComplex& x) {
        DeltaMap m;
        m.image.resize(x.size());
        for (uint32_t s = 0; s < x.size(); ++s) m.image[s] = s;
        return m;
    }
    static DeltaMap compose(const DeltaMap& g, const DeltaMap& f) {
        DeltaMap m;
        m.image.resize(f.image.size());
        for (size_t s = 0; s < f.image.size(); ++s) m.image[s] = g.image[f.image[s]];
        return m;
    }
};

// ---------------------------------------------------------------------------
// barycentric subdivision
//
// A k-simplex of Sd(X) is a pair (simplex s, chain S_0 < ... < S_k) of
// vertex-position subsets of s with S_k the full set; vertex j of the
// subdivided simplex is the barycenter of S_j.  Dropping S_k pushes the
// chain into the iterated face spanned by S_{k-1}.

inline DeltaComplex barycentric_subdivision(const DeltaComplex& x) {
    DeltaComplex out;
    // key: (simplex, chain of bitmasks ending at full)
    std::map<std::pair<uint32_t, std::vector<uint32_t>>, uint32_t> id_of;

    // enumerate chains per simplex, by output dimension
    struct Item {
        uint32_t s;
        std::vector<uint32_t> chain;
    };
    std::vector<std::vector<Item>> by_dim;
    for (uint32_t s = 0; s < x.size(); ++s) {
        int n = x.dims[s];
        uint32_t full = (n == 31) ? 0xffffffffu : ((uint32_t(1) << (n + 1)) - 1);
        // chains of proper nonempty subsets below `full`, extended by full
        std::vector<std::vector<uint32_t>> chains = {{full}};
        // grow downward: all strictly descending chains
        size_t head = 0;
        std::vector<std::vector<uint32_t>> acc = {{full}};
        while (head < acc.size()) {
            std::vector<uint32_t> cur = acc[head++];
            uint32_t top = cur.front();
            // proper nonempty subsets of top
            for (uint32_t sub = (top - 1) & top; sub != 0; sub = (sub - 1) & top) {
                std::vector<uint32_t> ext;
                ext.push_back(sub);
                ext.insert(ext.end(), cur.begin(), cur.end());
                chains.push_back(ext);
                acc.push_back(ext);
            }
        }
        for (auto& ch : chains) {
            int k = static_cast<int>(ch.size()) - 1;
            if (static_cast<int>(by_dim.size()) <= k) by_dim.resize(k + 1);
            by_dim[k].push_back({s, ch});
        }
    }
    for (auto& level : by_dim)
        std::sort(level.begin(), level.end(), [](const Item& a, const Item& b) {
            if (a.s != b.s) return a.s < b.s;
            return a.chain < b.chain;
        });

    auto positions = [](uint32_t mask) {
        std::vector<int> out;
        for (int i = 0; i < 32; ++i)
            if (mask & (uint32_t(1) << i)) out.push_back(i);
        return out;
    };

    for (size_t k = 0; k < by_dim.size(); ++k) {
        for (auto& item : by_dim[k]) {
            std::vector<uint32_t> faces;
            if (k > 0) {
                for (size_t i = 0; i <= k; ++i) {
                    if (i < k) {
                        auto ch = item.chain;
                        ch.erase(ch.begin() + i);
                        faces.push_back(id_of.at({item.s, ch}));
                    } else {
                        // drop the full set: land in the face spanned by S_{k-1}
                        uint32_t span = item.chain[k - 1];
                        std::vector<int> pos = positions(span);
                        uint32_t sub = x.iterated_face(item.s, pos);
                        // re-index the remaining chain through span
                        std::vector<uint32_t> ch;
                        for (size_t j = 0; j + 1 < item.chain.size(); ++j) {
                            uint32_t m = 0;
                            for (size_t t = 0; t < pos.size(); ++t)
                                if (item.chain[j] & (uint32_t(1) << pos[t])) m |= uint32_t(1) << t;
                            ch.push_back(m);
                        }
                        faces.push_back(id_of.at({sub, ch}));
                    }
                }
            }
            uint32_t id = out.add_simplex(static_cast<int>(k), std::move(faces));
            id_of[{item.s, item.chain}] = id;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// simplicial complexes as Delta complexes (vertices ordered ascending)

inline DeltaComplex delta_from_simplicial(const SimplicialComplex& s) {
    DeltaComplex out;
    std::map<std::vector<uint32_t>, uint32_t> id_of;
    auto faces = s.faces;
    std::sort(faces.begin(), faces.end(), [](auto& a, auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (auto& f : faces) {
        std::vector<uint32_t> sub;
        if (f.size() > 1) {
            for (size_t i = 0; i < f.size(); ++i) {
                auto g = f;
                g.erase(g.begin() + i);
                sub.push_back(id_of.at(g));
            }
        }
        uint32_t id = out.add_simplex(static_cast<int>(f.size()) - 1, std::move(sub));
        id_of[f] = id;
    }
    return out;
}

inline DeltaComplex barycentric_subdivision(const SimplicialComplex& s) {
    return barycentric_subdivision(delta_from_simplicial(s));
}

inline SimplicialComplex full_simplex(int n) {
    SimplicialComplex s;
    s.num_vertices = n + 1;
    for (uint32_t mask = 1; mask < (uint32_t(1) << (n + 1)); ++mask) {
        std::vector<uint32_t> f;
        for (int i = 0; i <= n; ++i)
            if (mask & (uint32_t(1) << i)) f.push_back(i);
        s.faces.push_back(f);
    }
    s.dedup();
    return s;
}

inline SimplicialComplex boundary_simplex(int n) {
    SimplicialComplex s = full_simplex(n);
    std::vector<std::vector<uint32_t>> keep;
    for (auto& f : s.faces)
        if (static_cast<int>(f.size()) <= n) keep.push_back(f);
    s.faces = std::move(keep);
    return s;
}

// 1-dimensional Delta complexes as cube complexes; Sd^2 of each edge is a
// 4-edge path (or closed loop), which is what the base of the functor needs
struct GraphAsCubes {
    CubeComplex complex;
    std::vector<Cell> vertex_cell;                  // X-vertex -> 0-cube
    std::vector<std::array<Cell, 4>> edge_cells;    // X-edge -> 4 path edges
    std::vector<std::array<Cell, 3>> inner_vertex;  // X-edge -> 3 interior vertices
    std::vector<uint32_t> owner;                    // cube cell -> X-simplex
};

inline GraphAsCubes second_subdivision_graph(const DeltaComplex& x) {
    if (x.dimension() > 1) throw Error("NOT_A_GRAPH", "expected a 1-dimensional complex");
    GraphAsCubes out;
    out.vertex_cell.assign(x.size(), CubeComplex::npos);
    SignedPerm id0 = SignedPerm::identity(0);
    for (uint32_t s = 0; s < x.size(); ++s)
        if (x.dims[s] == 0) {
            out.vertex_cell[s] = out.complex.add_vertex();
            out.owner.push_back(s);
        }
    out.edge_cells.resize(x.size());
    out.inner_vertex.resize(x.size());
    for (uint32_t s = 0; s < x.size(); ++s) {
        if (x.dims[s] != 1) continue;
        Cell a = out.vertex_cell[x.d[s][1]];  // d_1 = initial vertex
        Cell b = out.vertex_cell[x.d[s][0]];  // d_0 = terminal vertex
        std::array<Cell, 3> mid;
        for (int i = 0; i < 3; ++i) {
            mid[i] = out.complex.add_vertex();
            out.owner.push_back(s);
        }
        Cell chain[5] = {a, mid[0], mid[1], mid[2], b};
        for (int i = 0; i < 4; ++i) {
            out.edge_cells[s][i] = out.complex.add_cell(1, {{chain[i], id0}, {chain[i + 1], id0}});
            out.owner.push_back(s);
        }
        out.inner_vertex[s] = mid;
    }
    return out;
}

} // namespace ktc
