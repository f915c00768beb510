#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <vector>
#include <algorithm>

#include "cube_complex.hpp"
#include "links.hpp"
#include "cellular_map.hpp"

namespace ktc {

// Hyperplanes of a combinatorially CAT(0) cubical complex: equivalence
// classes of directed edges under square-parallelism, with the opposite
// pairing and the two half-spaces per pair.
struct HyperplaneDecomposition {
    std::vector<Cell> edge_cells;            // dim-1 cells, ascending
    std::map<Cell, uint32_t> edge_index;
    uint32_t num_classes = 0;
    std::vector<uint32_t> class_of;          // directed edge 2*e+o -> class
    std::vector<uint32_t> opposite;          // class -> class of reversed edges
    uint32_t num_pairs = 0;
    std::vector<uint32_t> pair_of_class;     // class -> pair
    // side_of[pair][cell] = 0/1 for vertices, -1 otherwise
    std::vector<std::vector<int8_t>> side_of;

    uint32_t directed(Cell edge, int o) const { return 2 * edge_index.at(edge) + o; }
    int side(uint32_t pair, Cell v) const { return side_of[pair][v]; }
    std::array<std::vector<Cell>, 2> halfspace_vertices(uint32_t pair) const {
        std::array<std::vector<Cell>, 2> out;
        for (Cell c = 0; c < side_of[pair].size(); ++c)
            if (side_of[pair][c] >= 0) out[side_of[pair][c]].push_back(c);
        return out;
    }
};

// union-find over directed edges; two directed edges are related when they
// are parallel sides of a square
inline HyperplaneDecomposition hyperplanes(const CubeComplex& cx, bool check_preconditions = true) {
    if (check_preconditions) {
        CubicalityReport cr = cubicality_check(cx);
        if (!cr.cubical()) throw Error("PRECONDITION", "complex is not cubical");
        GromovReport gr = gromov_check(cx);
        if (!gr.pass) throw Error("PRECONDITION", "complex fails the link condition");
    }
    HyperplaneDecomposition out;
    for (Cell c = 0; c < cx.num_cells(); ++c)
        if (cx.dim(c) == 1) {
            out.edge_index[c] = static_cast<uint32_t>(out.edge_cells.size());
            out.edge_cells.push_back(c);
        }
    size_t nd = 2 * out.edge_cells.size();
    std::vector<uint32_t> parent(nd);
    for (uint32_t i = 0; i < nd; ++i) parent[i] = i;
    std::function<uint32_t(uint32_t)> find = [&](uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](uint32_t a, uint32_t b) { parent[find(a)] = find(b); };
    // directed edge of a square face slot, oriented by the face chart
    auto face_directed = [&](Cell sq, int dir, int sign) {
        auto f = cx.face(sq, dir, sign);
        int o = cx.sym(f.sym).flip(0) ? 1 : 0;
        return out.directed(f.target, o);
    };
    for (Cell c = 0; c < cx.num_cells(); ++c) {
        if (cx.dim(c) != 2) continue;
        for (int dir = 1; dir <= 2; ++dir) {
            uint32_t a = face_directed(c, dir, 0), b = face_directed(c, dir, 1);
            unite(a, b);
            unite(a ^ 1, b ^ 1);
        }
    }
    // classes
    std::map<uint32_t, uint32_t> class_id;
    out.class_of.resize(nd);
    for (uint32_t i = 0; i < nd; ++i) {
        uint32_t r = find(i);
        auto it = class_id.find(r);
        if (it == class_id.end()) it = class_id.emplace(r, static_cast<uint32_t>(class_id.size())).first;
        out.class_of[i] = it->second;
    }
    out.num_classes = static_cast<uint32_t>(class_id.size());
    out.opposite.assign(out.num_classes, 0);
    for (uint32_t i = 0; i < nd; ++i) out.opposite[out.class_of[i]] = out.class_of[i ^ 1];
    for (uint32_t h = 0; h < out.num_classes; ++h) {
        if (out.opposite[h] == h) throw Error("PRECONDITION", "a hyperplane equals its own opposite");
        if (out.opposite[out.opposite[h]] != h) throw Error("INTERNAL", "opposite pairing broken");
    }
    // pairs
    out.pair_of_class.assign(out.num_classes, 0);
    for (uint32_t h = 0; h < out.num_classes; ++h) {
        uint32_t a = std::min(h, out.opposite[h]);
        out.pair_of_class[h] = a;
    }
    std::map<uint32_t, uint32_t> pair_id;
    for (uint32_t h = 0; h < out.num_classes; ++h) {
        uint32_t rep = out.pair_of_class[h];
        auto it = pair_id.find(rep);
        if (it == pair_id.end()) it = pair_id.emplace(rep, static_cast<uint32_t>(pair_id.size())).first;
        out.pair_of_class[h] = it->second;
    }
    out.num_pairs = static_cast<uint32_t>(pair_id.size());

    // half-spaces: remove every cube whose closure contains an edge of the
    // pair, then take the vertex components of what is left
    auto closures = cx.face_closures();
    out.side_of.assign(out.num_pairs, std::vector<int8_t>(cx.num_cells(), -1));
    for (uint32_t p = 0; p < out.num_pairs; ++p) {
        std::vector<uint8_t> edge_in_pair(out.edge_cells.size(), 0);
        for (uint32_t i = 0; i < nd; ++i)
            if (out.pair_of_class[out.class_of[i]] == p) edge_in_pair[i / 2] = 1;
        std::vector<uint8_t> cell_removed(cx.num_cells(), 0);
        for (Cell c = 0; c < cx.num_cells(); ++c) {
            for (Cell f : closures[c]) {
                if (cx.dim(f) == 1 && edge_in_pair[out.edge_index.at(f)]) {
                    cell_removed[c] = 1;
                    break;
                }
            }
        }
        // vertex components through surviving edges
        std::vector<Cell> par(cx.num_cells());
        for (Cell c = 0; c < cx.num_cells(); ++c) par[c] = c;
        std::function<Cell(Cell)> findv = [&](Cell x) {
            while (par[x] != x) x = par[x] = par[par[x]];
            return x;
        };
        for (Cell c = 0; c < cx.num_cells(); ++c) {
            if (cx.dim(c) != 1 || cell_removed[c]) continue;
            Cell a = findv(cx.endpoint(c, 0)), b = findv(cx.endpoint(c, 1));
            if (a != b) par[a] = b;
        }
        std::map<Cell, int8_t> comp;
        for (Cell c = 0; c < cx.num_cells(); ++c) {
            if (cx.dim(c) != 0) continue;
            Cell r = findv(c);
            auto it = comp.find(r);
            if (it == comp.end()) {
                if (comp.size() >= 2)
                    throw Error("MORE_THAN_TWO_COMPONENTS",
                                "pair " + std::to_string(p) + " does not split into two half-spaces");
                it = comp.emplace(r, static_cast<int8_t>(comp.size())).first;
            }
            out.side_of[p][c] = it->second;
        }
        if (comp.size() != 2)
            throw Error("MORE_THAN_TWO_COMPONENTS",
                        "pair " + std::to_string(p) + " split into " + std::to_string(comp.size()) + " pieces");
    }
    return out;
}

inline int64_t skeleton_distance(const CubeComplex& cx, Cell v, Cell w) {
    if (cx.dim(v) != 0 || cx.dim(w) != 0) throw Error("UNKNOWN_VERTEX", "distance needs vertices");
    std::vector<int64_t> dist(cx.num_cells(), -1);
    std::deque<Cell> bfs;
    // adjacency
    std::vector<std::vector<Cell>> adj(cx.num_cells());
    for (Cell c = 0; c < cx.num_cells(); ++c)
        if (cx.dim(c) == 1) {
            Cell a = cx.endpoint(c, 0), b = cx.endpoint(c, 1);
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    dist[v] = 0;
    bfs.push_back(v);
    while (!bfs.empty()) {
        Cell c = bfs.front();
        bfs.pop_front();
        if (c == w) return dist[c];
        for (Cell t : adj[c])
            if (dist[t] < 0) {
                dist[t] = dist[c] + 1;
                bfs.push_back(t);
            }
    }
    throw Error("DISCONNECTED", "vertices in different components");
}

inline int64_t separating_pairs(const HyperplaneDecomposition& d, Cell v, Cell w) {
    int64_t n = 0;
    for (uint32_t p = 0; p < d.num_pairs; ++p) {
        int sv = d.side(p, v), sw = d.side(p, w);
        if (sv < 0 || sw < 0) throw Error("UNKNOWN_VERTEX", "separating_pairs needs vertices");
        n += (sv != sw);
    }
    return n;
}

// intersection of all half-spaces containing the given vertices, as the
// full vertex-span subcomplex; pairs separating two input vertices impose
// no constraint and are skipped
inline std::vector<Cell> convex_hull(const CubeComplex& cx, const HyperplaneDecomposition& d,
                                     const std::vector<Cell>& verts) {
    if (verts.empty()) throw Error("EMPTY_INPUT", "hull of nothing");
    for (Cell v : verts)
        if (cx.dim(v) != 0) throw Error("UNKNOWN_VERTEX", "hull input must be vertices");
    std::vector<uint8_t> in_hull(cx.num_cells(), 0);
    std::vector<Cell> distinct = verts;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() == 1) {
        return {distinct[0]};
    }
    for (Cell c = 0; c < cx.num_cells(); ++c) in_hull[c] = (cx.dim(c) == 0);
    for (uint32_t p = 0; p < d.num_pairs; ++p) {
        int s0 = d.side(p, distinct[0]);
        bool split = false;
        for (Cell v : distinct)
            if (d.side(p, v) != s0) { split = true; break; }
        if (split) continue;  // separating pairs impose no constraint
        for (Cell c = 0; c < cx.num_cells(); ++c)
            if (cx.dim(c) == 0 && d.side(p, c) != s0) in_hull[c] = 0;
    }
    // full span: cells all of whose corners lie in the hull vertex set
    auto tables = cx.corner_tables();
    std::vector<Cell> out;
    for (Cell c = 0; c < cx.num_cells(); ++c) {
        bool all = true;
        for (Cell v : tables[c])
            if (!in_hull[v]) { all = false; break; }
        if (all) out.push_back(c);
    }
    return out;
}

inline std::vector<Cell> convex_hull(const CubeComplex& cx, const std::vector<Cell>& verts) {
    HyperplaneDecomposition d = hyperplanes(cx);
    return convex_hull(cx, d, verts);
}

// ---------------------------------------------------------------------------
// cellular fixed points of a finite group of automorphisms

// closure of the generated group, as cellular maps
inline std::vector<CellularMap> group_closure(const CubeComplex& cx, const std::vector<CellularMap>& gens,
                                              size_t bound = 4096) {
    for (auto& g : gens) g.validate(cx, cx);
    auto key = [](const CellularMap& m) {
        std::string s;
        for (Cell c = 0; c < m.target.size(); ++c) {
            s += std::to_string(m.target[c]);
            s += m.sym[c].to_string();
        }
        return s;
    };
    std::vector<CellularMap> out = {CellularMap::identity(cx)};
    std::set<std::string> seen = {key(out[0])};
    std::deque<size_t> work = {0};
    while (!work.empty()) {
        size_t i = work.front();
        work.pop_front();
        for (auto& g : gens) {
            CellularMap m = CellularMap::compose(g, out[i]);
            std::string k = key(m);
            if (seen.insert(k).second) {
                out.push_back(std::move(m));
                work.push_back(out.size() - 1);
                if (out.size() > bound) throw Error("GROUP_TOO_BIG", "closure exceeded bound");
            }
        }
    }
    return out;
}

// a setwise-invariant cube of minimal dimension inside the hull of an orbit;
// its barycentre is fixed by the whole group
inline Cell fixed_point(const CubeComplex& cx, const std::vector<CellularMap>& gens) {
    std::vector<CellularMap> grp = group_closure(cx, gens);
    Cell v0 = CubeComplex::npos;
    for (Cell c = 0; c < cx.num_cells(); ++c)
        if (cx.dim(c) == 0) { v0 = c; break; }
    if (v0 == CubeComplex::npos) throw Error("EMPTY_INPUT", "no vertices");
    std::vector<Cell> orbit;
    for (auto& g : grp) orbit.push_back(g.target[v0]);
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    std::vector<Cell> hull;
    if (orbit.size() == 1) hull = {orbit[0]};
    else hull = convex_hull(cx, orbit);
    std::vector<uint8_t> in_hull(cx.num_cells(), 0);
    for (Cell c : hull) in_hull[c] = 1;
    Cell best = CubeComplex::npos;
    for (Cell c = 0; c < cx.num_cells(); ++c) {
        if (!in_hull[c]) continue;
        bool invariant = true;
        for (auto& g : grp)
            if (g.target[c] != c) { invariant = false; break; }
        if (invariant && (best == CubeComplex::npos || cx.dim(c) < cx.dim(best))) best = c;
    }
    if (best == CubeComplex::npos) throw Error("NO_INVARIANT_CUBE", "no invariant cube in the orbit hull");
    return best;
}

// every finite complex trivially satisfies the completeness criterion
inline bool ascending_chain_check(const CubeComplex&) { return true; }

} // namespace ktc
