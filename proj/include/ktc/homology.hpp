#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>
#include <algorithm>

#include "bigint.hpp"
#include "smith.hpp"
#include "cube_complex.hpp"
#include "delta.hpp"
#include "links.hpp"

namespace ktc {

// Integer cellular chain complex: one sparse boundary matrix per degree.
struct ChainComplex {
    std::vector<int64_t> cells;  // cells[k] = number of k-cells
    // boundary[k] (k >= 1): entries (row in degree k-1, col in degree k, coeff)
    std::vector<std::vector<std::tuple<int32_t, int32_t, int64_t>>> boundary;

    int top_dim() const { return static_cast<int>(cells.size()) - 1; }
    int64_t num_cells(int k) const {
        return (k >= 0 && k < static_cast<int>(cells.size())) ? cells[k] : 0;
    }
    const std::vector<std::tuple<int32_t, int32_t, int64_t>>& entries(int k) const {
        static const std::vector<std::tuple<int32_t, int32_t, int64_t>> empty;
        return (k >= 1 && k < static_cast<int>(boundary.size())) ? boundary[k] : empty;
    }

    // exact check that consecutive boundaries compose to zero
    bool dd_is_zero() const {
        for (int k = 2; k <= top_dim(); ++k) {
            std::map<std::pair<int32_t, int32_t>, int64_t> prod;
            // group entries of boundary[k] by column
            std::map<int32_t, std::vector<std::pair<int32_t, int64_t>>> colsK, colsK1;
            for (auto& [r, c, v] : entries(k)) colsK[c].push_back({r, v});
            for (auto& [r, c, v] : entries(k - 1)) colsK1[c].push_back({r, v});
            for (auto& [c, es] : colsK) {
                std::map<int32_t, int64_t> acc;
                for (auto& [mid, v] : es)
                    for (auto& [r, w] : colsK1[mid]) acc[r] += v * w;
                for (auto& [r, v] : acc)
                    if (v != 0) return false;
            }
        }
        return true;
    }
};

// Orientation convention for cubes: d([0,1]^d) = sum_i (-1)^{i-1}
// (face_{i,+} - face_{i,-}), each face transported to its target cell with
// the determinant of the identification symmetry.
inline ChainComplex chain_complex(const CubeComplex& cx) {
    ChainComplex cc;
    int top = cx.dimension();
    cc.cells.assign(top + 1, 0);
    std::vector<int32_t> index(cx.num_cells());
    for (Cell c = 0; c < cx.num_cells(); ++c) index[c] = static_cast<int32_t>(cc.cells[cx.dim(c)]++);
    cc.boundary.resize(top + 1);
    for (Cell c = 0; c < cx.num_cells(); ++c) {
        int d = cx.dim(c);
        if (d == 0) continue;
        std::map<int32_t, int64_t> acc;
        for (int i = 1; i <= d; ++i) {
            for (int s = 0; s < 2; ++s) {
                auto f = cx.face(c, i, s);
                int64_t coeff = ((i - 1) % 2 == 0 ? 1 : -1) * (s == 1 ? 1 : -1) * cx.sym(f.sym).det();
                acc[index[f.target]] += coeff;
            }
        }
        for (auto& [r, v] : acc)
            if (v != 0) cc.boundary[d].push_back({r, index[c], v});
    }
    return cc;
}

inline ChainComplex chain_complex(const DeltaComplex& dx) {
    ChainComplex cc;
    int top = dx.dimension();
    cc.cells.assign(top + 1, 0);
    std::vector<int32_t> index(dx.size());
    for (uint32_t s = 0; s < dx.size(); ++s) index[s] = static_cast<int32_t>(cc.cells[dx.dims[s]]++);
    cc.boundary.resize(top + 1);
    for (uint32_t s = 0; s < dx.size(); ++s) {
        int n = dx.dims[s];
        if (n == 0) continue;
        std::map<int32_t, int64_t> acc;
        for (int i = 0; i <= n; ++i) acc[index[dx.d[s][i]]] += (i % 2 == 0 ? 1 : -1);
        for (auto& [r, v] : acc)
            if (v != 0) cc.boundary[n].push_back({r, index[s], v});
    }
    return cc;
}

inline ChainComplex chain_complex(const SimplicialComplex& sx) { return chain_complex(delta_from_simplicial(sx)); }

// relative chain complex of (cx, sub): columns and rows of cells outside sub
inline ChainComplex chain_complex_rel(const CubeComplex& cx, const std::vector<Cell>& sub) {
    if (!cx.is_subcomplex(sub)) throw Error("NOT_A_SUBCOMPLEX", "relative homology needs a subcomplex");
    std::vector<uint8_t> in(cx.num_cells(), 0);
    for (Cell c : sub) in[c] = 1;
    ChainComplex cc;
    int top = cx.dimension();
    cc.cells.assign(top + 1, 0);
    std::vector<int32_t> index(cx.num_cells(), -1);
    for (Cell c = 0; c < cx.num_cells(); ++c)
        if (!in[c]) index[c] = static_cast<int32_t>(cc.cells[cx.dim(c)]++);
    cc.boundary.resize(top + 1);
    for (Cell c = 0; c < cx.num_cells(); ++c) {
        if (in[c]) continue;
        int d = cx.dim(c);
        if (d == 0) continue;
        std::map<int32_t, int64_t> acc;
        for (int i = 1; i <= d; ++i)
            for (int s = 0; s < 2; ++s) {
                auto f = cx.face(c, i, s);
                if (in[f.target]) continue;
                int64_t coeff = ((i - 1) % 2 == 0 ? 1 : -1) * (s == 1 ? 1 : -1) * cx.sym(f.sym).det();
                acc[index[f.target]] += coeff;
            }
        for (auto& [r, v] : acc)
            if (v != 0) cc.boundary[d].push_back({r, index[c], v});
    }
    return cc;
}

// ---------------------------------------------------------------------------

struct HomologyGroups {
    struct Group {
        int64_t betti = 0;
        std::vector<BigInt> torsion;  // invariant factors > 1, each dividing the next
        bool trivial() const { return betti == 0 && torsion.empty(); }
        bool operator==(const Group& o) const { return betti == o.betti && torsion == o.torsion; }
    };
    std::vector<Group> groups;  // degree 0..top

    const Group& at(int k) const {
        static const Group zero;
        return (k >= 0 && k < static_cast<int>(groups.size())) ? groups[k] : zero;
    }
    bool all_trivial() const {
        for (auto& g : groups)
            if (!g.trivial()) return false;
        return true;
    }
    bool operator==(const HomologyGroups& o) const {
        int top = std::max(groups.size(), o.groups.size());
        for (int k = 0; k < top; ++k)
            if (!(at(k) == o.at(k))) return false;
        return true;
    }

    static std::string group_string(const Group& g) {
        std::string s;
        if (g.betti == 1) s = "Z";
        else if (g.betti > 1) s = "Z^" + std::to_string(g.betti);
        for (auto& t : g.torsion) {
            if (!s.empty()) s += " + ";
            s += "Z/" + t.to_string();
        }
        if (s.empty()) s = "0";
        return s;
    }
    std::string to_string() const {
        std::string out;
        for (size_t k = 0; k < groups.size(); ++k) {
            if (k) out += "\n";
            out += "H_" + std::to_string(k) + " = " + group_string(groups[k]);
        }
        return out;
    }
};

namespace homology_detail {

inline SnfResult snf_of_degree(const ChainComplex& cc, int k) {
    int64_t rows = cc.num_cells(k - 1), cols = cc.num_cells(k);
    if (rows == 0 || cols == 0) return SnfResult{};
    const auto& es = cc.entries(k);
    if (cols < 64) {
        DenseMat m(rows, std::vector<BigInt>(cols));
        for (auto& [r, c, v] : es) m[r][c] += BigInt(v);
        return smith_normal_form_dense(std::move(m), false);
    }
    SparseMat s;
    s.init(rows, cols);
    for (auto& [r, c, v] : es) s.add_entry(r, c, BigInt(v));
    s.finish();
    return smith_normal_form_sparse(s);
}

}  // namespace homology_detail

inline HomologyGroups homology(const ChainComplex& cc) {
    HomologyGroups out;
    int top = cc.top_dim();
    if (top < 0) return out;
    std::vector<SnfResult> snf(top + 2);
    for (int k = 1; k <= top; ++k) snf[k] = homology_detail::snf_of_degree(cc, k);
    out.groups.resize(top + 1);
    for (int k = 0; k <= top; ++k) {
        int64_t rank_k = (k >= 1) ? static_cast<int64_t>(snf[k].rank()) : 0;
        int64_t rank_k1 = static_cast<int64_t>(snf[k + 1].rank());
        out.groups[k].betti = cc.num_cells(k) - rank_k - rank_k1;
        for (auto& f : snf[k + 1].factors)
            if (!f.is_one()) out.groups[k].torsion.push_back(f);
    }
    return out;
}

inline HomologyGroups reduced_homology(const ChainComplex& cc) {
    HomologyGroups h = homology(cc);
    if (!h.groups.empty() && cc.num_cells(0) > 0) h.groups[0].betti -= 1;
    return h;
}

inline HomologyGroups homology(const CubeComplex& cx) { return homology(chain_complex(cx)); }
inline HomologyGroups reduced_homology(const CubeComplex& cx) { return reduced_homology(chain_complex(cx)); }

inline HomologyGroups relative_homology(const CubeComplex& cx, const std::vector<Cell>& sub) {
    return homology(chain_complex_rel(cx, sub));
}

inline bool is_acyclic(const CubeComplex& cx) { return reduced_homology(cx).all_trivial(); }
inline bool is_acyclic(const ChainComplex& cc) { return reduced_homology(cc).all_trivial(); }

} // namespace ktc
