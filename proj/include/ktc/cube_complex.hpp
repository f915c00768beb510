#pragma once

#include <cstdint>
#include <vector>
#include <deque>
#include <string>
#include <algorithm>
#include <functional>
#include <unordered_map>
#include <stdexcept>
#include <utility>

#include "signed_perm.hpp"

namespace ktc {

// Error with a stable machine-readable code, e.g. "SETWISE_NOT_POINTWISE".
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

class SymPool {
public:
    uint16_t intern(const SignedPerm& p) {
        auto key = std::string(reinterpret_cast<const char*>(p.s.data()), p.s.size());
        auto it = index_.find(key);
        if (it != index_.end()) return it->second;
        if (perms_.size() >= 65535) throw Error("SYM_POOL_FULL", "too many distinct symmetries");
        perms_.push_back(p);
        uint16_t id = static_cast<uint16_t>(perms_.size() - 1);
        index_.emplace(std::move(key), id);
        return id;
    }
    const SignedPerm& get(uint16_t i) const { return perms_[i]; }

private:
    std::vector<SignedPerm> perms_;
    std::unordered_map<std::string, uint16_t> index_;
};

// Finite cube complex stored by explicit face maps.  A d-cell has 2d
// codimension-1 faces indexed by (direction 1..d, sign -/+); each face map
// carries the target (d-1)-cell and the identification symmetry g with
// sigma_cell o phi_{dir,sign} = sigma_target o g.  Cubes need not embed:
// the torus and sphere made from one square are representable.
class CubeComplex {
public:
    using Cell = uint32_t;
    static constexpr Cell npos = UINT32_MAX;

    struct FaceRef {
        Cell target;
        uint16_t sym;
    };

    CubeComplex() = default;

    // slot order: (dir 1,-),(dir 1,+),(dir 2,-),(dir 2,+),...
    Cell add_cell(int dim, const std::vector<std::pair<Cell, SignedPerm>>& faces) {
        if (static_cast<int>(faces.size()) != 2 * dim)
            throw Error("BAD_FACE_COUNT", "expected " + std::to_string(2 * dim) + " faces");
        Cell id = static_cast<Cell>(dims_.size());
        dims_.push_back(static_cast<uint8_t>(dim));
        off_.push_back(static_cast<uint32_t>(ftgt_.size()));
        for (auto& [t, g] : faces) {
            if (g.dim() != dim - 1) throw Error("BAD_SYM_DIM", "face symmetry has wrong dimension");
            ftgt_.push_back(t);
            fsym_.push_back(pool_.intern(g));
        }
        return id;
    }
    Cell add_vertex() { return add_cell(0, {}); }

    size_t num_cells() const { return dims_.size(); }
    int dim(Cell c) const { return dims_[c]; }
    int dimension() const {
        int d = 0;
        for (auto x : dims_) d = std::max(d, static_cast<int>(x));
        return d;
    }
    size_t count_dim(int d) const {
        size_t n = 0;
        for (auto x : dims_) n += (x == d);
        return n;
    }
    std::vector<Cell> cells_of_dim(int d) const {
        std::vector<Cell> out;
        for (Cell c = 0; c < num_cells(); ++c)
            if (dims_[c] == d) out.push_back(c);
        return out;
    }

    FaceRef face(Cell c, int dir, int sign) const { return face_slot(c, 2 * (dir - 1) + sign); }
    FaceRef face_slot(Cell c, int slot) const {
        return FaceRef{ftgt_[off_[c] + slot], fsym_[off_[c] + slot]};
    }
    const SignedPerm& sym(uint16_t i) const { return pool_.get(i); }
    const SignedPerm& face_sym(Cell c, int dir, int sign) const {
        return pool_.get(face(c, dir, sign).sym);
    }
    uint16_t intern(const SignedPerm& p) { return pool_.intern(p); }

    int64_t euler_characteristic() const {
        int64_t chi = 0;
        for (auto d : dims_) chi += (d % 2 == 0) ? 1 : -1;
        return chi;
    }

    // iterated restriction: the (S,eps)-face reached by fixing `dir` to `sign`
    // inside the current chart, innermost first.  Returns cell plus chart map.
    struct CellChart {
        Cell cell;
        SignedPerm chart;  // sigma_src o (composite embedding) = sigma_cell o chart
    };
    CellChart restrict(Cell c, int dir, int sign) const {
        FaceRef f = face(c, dir, sign);
        return CellChart{f.target, pool_.get(f.sym)};
    }

    // both orders of a double restriction; used by validate()
    CellChart restrict2(Cell c, int dir1, int sign1, int dir2, int sign2) const {
        FaceRef f = face(c, dir1, sign1);
        const SignedPerm& g = pool_.get(f.sym);
        FacePush fp = push_through_face(g, dir2, sign2);
        FaceRef f2 = face(f.target, fp.dir, fp.sign);
        return CellChart{f2.target, SignedPerm::compose(pool_.get(f2.sym), fp.induced)};
    }

    // endpoints of an edge: sign 0 gives the initial vertex
    Cell endpoint(Cell edge, int sign) const { return face(edge, 1, sign).target; }

    void validate() const {
        size_t n = num_cells();
        for (Cell c = 0; c < n; ++c) {
            int d = dims_[c];
            for (int slot = 0; slot < 2 * d; ++slot) {
                FaceRef f = face_slot(c, slot);
                if (f.target >= n) throw Error("BAD_FACE_TARGET", "cell " + std::to_string(c));
                if (dims_[f.target] != d - 1)
                    throw Error("BAD_FACE_DIM", "cell " + std::to_string(c) + " face slot " + std::to_string(slot));
                if (pool_.get(f.sym).dim() != d - 1)
                    throw Error("BAD_SYM_DIM", "cell " + std::to_string(c));
            }
            // cubical face identities: both restriction orders agree
            for (int i = 1; i <= d; ++i)
                for (int j = i + 1; j <= d; ++j)
                    for (int si = 0; si < 2; ++si)
                        for (int sj = 0; sj < 2; ++sj) {
                            // fixing j first leaves i in place; fixing i first shifts j down
                            CellChart a = restrict2(c, i, si, j - 1, sj);
                            CellChart b = restrict2(c, j, sj, i, si);
                            if (a.cell != b.cell || !(a.chart == b.chart))
                                throw Error("FACE_IDENTITY",
                                            "cell " + std::to_string(c) + " dirs " + std::to_string(i) + "," +
                                                std::to_string(j));
                        }
        }
    }

    // corner -> vertex tables, corner encoded as bits (coordinate i = bit i-1)
    std::vector<std::vector<Cell>> corner_tables() const {
        std::vector<std::vector<Cell>> tab(num_cells());
        std::vector<Cell> order(num_cells());
        for (Cell c = 0; c < num_cells(); ++c) order[c] = c;
        std::stable_sort(order.begin(), order.end(), [&](Cell a, Cell b) { return dims_[a] < dims_[b]; });
        for (Cell c : order) {
            int d = dims_[c];
            auto& t = tab[c];
            t.resize(size_t(1) << d);
            if (d == 0) {
                t[0] = c;
                continue;
            }
            for (uint32_t bits = 0; bits < (uint32_t(1) << d); ++bits) {
                int top = (bits >> (d - 1)) & 1;
                FaceRef f = face(c, d, top);
                const SignedPerm& g = pool_.get(f.sym);
                // remaining corner in the face chart, then through g
                uint32_t rest = bits & ((uint32_t(1) << (d - 1)) - 1);
                uint32_t mapped = 0;
                for (int i = 0; i < d - 1; ++i) {
                    uint32_t b = (rest >> g.src(i)) & 1;
                    if (g.flip(i)) b ^= 1;
                    mapped |= b << i;
                }
                t[bits] = tab[f.target][mapped];
            }
        }
        return tab;
    }

    // the directed-edge end seen from corner `bits` along direction keep_dir;
    // returns (edge, end bit)
    std::pair<Cell, int> edge_end_at_corner(Cell c, uint32_t bits, int keep_dir) const {
        int d = dims_[c];
        int keep = keep_dir;
        Cell cur = c;
        while (d > 1) {
            int j = (keep == d) ? d - 1 : d;
            int sj = (bits >> (j - 1)) & 1;
            FaceRef f = face(cur, j, sj);
            const SignedPerm& g = pool_.get(f.sym);
            uint32_t rest = 0;
            int oi = 0;
            for (int i = 1; i <= d; ++i) {
                if (i == j) continue;
                rest |= ((bits >> (i - 1)) & 1) << oi;
                ++oi;
            }
            int keep_after_delete = keep < j ? keep : keep - 1;
            uint32_t mapped = 0;
            int new_keep = -1;
            for (int i = 0; i < d - 1; ++i) {
                uint32_t b = (rest >> g.src(i)) & 1;
                if (g.flip(i)) b ^= 1;
                mapped |= b << i;
                if (g.src(i) == keep_after_delete - 1) new_keep = i + 1;
            }
            cur = f.target;
            bits = mapped;
            keep = new_keep;
            --d;
        }
        return {cur, static_cast<int>(bits & 1)};
    }

    // all iterated faces (including the cell), deduplicated and sorted
    std::vector<std::vector<Cell>> face_closures() const {
        std::vector<std::vector<Cell>> fs(num_cells());
        std::vector<Cell> order(num_cells());
        for (Cell c = 0; c < num_cells(); ++c) order[c] = c;
        std::stable_sort(order.begin(), order.end(), [&](Cell a, Cell b) { return dims_[a] < dims_[b]; });
        for (Cell c : order) {
            auto& v = fs[c];
            v.push_back(c);
            for (int slot = 0; slot < 2 * dims_[c]; ++slot) {
                const auto& sub = fs[face_slot(c, slot).target];
                v.insert(v.end(), sub.begin(), sub.end());
            }
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
        }
        return fs;
    }

    // vertex components via the 1-skeleton
    std::vector<int> vertex_components(int* count = nullptr) const {
        std::vector<int> comp(num_cells(), -1);
        std::vector<Cell> verts;
        for (Cell c = 0; c < num_cells(); ++c)
            if (dims_[c] == 0) verts.push_back(c);
        std::vector<Cell> parent(num_cells());
        for (Cell c = 0; c < num_cells(); ++c) parent[c] = c;
        std::function<Cell(Cell)> find = [&](Cell x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (Cell c = 0; c < num_cells(); ++c)
            if (dims_[c] == 1) {
                Cell a = find(endpoint(c, 0)), b = find(endpoint(c, 1));
                if (a != b) parent[a] = b;
            }
        int k = 0;
        std::unordered_map<Cell, int> label;
        for (Cell v : verts) {
            Cell r = find(v);
            auto it = label.find(r);
            if (it == label.end()) it = label.emplace(r, k++).first;
            comp[v] = it->second;
        }
        if (count) *count = k;
        return comp;
    }
    bool connected() const {
        int k = 0;
        vertex_components(&k);
        return k <= 1;
    }

    // true if `cells` is closed under direct faces
    bool is_subcomplex(const std::vector<Cell>& cells) const {
        std::vector<uint8_t> in(num_cells(), 0);
        for (Cell c : cells) in[c] = 1;
        for (Cell c : cells)
            for (int slot = 0; slot < 2 * dims_[c]; ++slot)
                if (!in[face_slot(c, slot).target]) return false;
        return true;
    }

    std::vector<Cell> face_closure_of(const std::vector<Cell>& cells) const {
        std::vector<uint8_t> in(num_cells(), 0);
        std::deque<Cell> work(cells.begin(), cells.end());
        for (Cell c : cells) in[c] = 1;
        while (!work.empty()) {
            Cell c = work.front();
            work.pop_front();
            for (int slot = 0; slot < 2 * dims_[c]; ++slot) {
                Cell t = face_slot(c, slot).target;
                if (!in[t]) {
                    in[t] = 1;
                    work.push_back(t);
                }
            }
        }
        std::vector<Cell> out;
        for (Cell c = 0; c < num_cells(); ++c)
            if (in[c]) out.push_back(c);
        return out;
    }

private:
    std::vector<uint8_t> dims_;
    std::vector<uint32_t> off_;
    std::vector<Cell> ftgt_;
    std::vector<uint16_t> fsym_;
    SymPool pool_;
};

using Cell = CubeComplex::Cell;

// ---------------------------------------------------------------------------
// standard builders

inline CubeComplex path_complex(int n) {
    CubeComplex c;
    for (int i = 0; i <= n; ++i) c.add_vertex();
    SignedPerm id0 = SignedPerm::identity(0);
    for (int i = 0; i < n; ++i)
        c.add_cell(1, {{static_cast<Cell>(i), id0}, {static_cast<Cell>(i + 1), id0}});
    return c;
}

inline CubeComplex cycle_complex(int n) {
    CubeComplex c;
    for (int i = 0; i < n; ++i) c.add_vertex();
    SignedPerm id0 = SignedPerm::identity(0);
    for (int i = 0; i < n; ++i)
        c.add_cell(1, {{static_cast<Cell>(i), id0}, {static_cast<Cell>((i + 1) % n), id0}});
    return c;
}

// the solid n-cube with its full face lattice
inline CubeComplex standard_cube(int n) {
    // symbol per coordinate: 0,1 = fixed value, 2 = free
    int total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    std::vector<std::vector<int>> codes;
    codes.reserve(total);
    for (int x = 0; x < total; ++x) {
        std::vector<int> code(n);
        int t = x;
        for (int i = 0; i < n; ++i) {
            code[i] = t % 3;
            t /= 3;
        }
        codes.push_back(std::move(code));
    }
    std::stable_sort(codes.begin(), codes.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        int da = static_cast<int>(std::count(a.begin(), a.end(), 2));
        int db = static_cast<int>(std::count(b.begin(), b.end(), 2));
        return da < db;
    });
    std::unordered_map<std::string, Cell> idx;
    auto key = [](const std::vector<int>& code) {
        std::string s;
        for (int v : code) s += static_cast<char>('0' + v);
        return s;
    };
    CubeComplex c;
    for (auto& code : codes) {
        int d = static_cast<int>(std::count(code.begin(), code.end(), 2));
        std::vector<std::pair<Cell, SignedPerm>> faces;
        for (int i = 0, r = 0; i < n; ++i) {
            if (code[i] != 2) continue;
            ++r;  // r-th free coordinate
            for (int s = 0; s < 2; ++s) {
                auto sub = code;
                sub[i] = s;
                faces.push_back({idx.at(key(sub)), SignedPerm::identity(d - 1)});
            }
        }
        Cell id = c.add_cell(d, faces);
        idx.emplace(key(code), id);
    }
    return c;
}

// ---------------------------------------------------------------------------
// disjoint union and product

struct UnionResult {
    CubeComplex complex;
    Cell offset_b;  // cells of b are shifted by this amount; cells of a keep ids
};

inline UnionResult disjoint_union(const CubeComplex& a, const CubeComplex& b) {
    UnionResult out;
    Cell na = static_cast<Cell>(a.num_cells());
    for (Cell c = 0; c < na; ++c) {
        std::vector<std::pair<Cell, SignedPerm>> faces;
        for (int slot = 0; slot < 2 * a.dim(c); ++slot) {
            auto f = a.face_slot(c, slot);
            faces.push_back({f.target, a.sym(f.sym)});
        }
        out.complex.add_cell(a.dim(c), faces);
    }
    for (Cell c = 0; c < b.num_cells(); ++c) {
        std::vector<std::pair<Cell, SignedPerm>> faces;
        for (int slot = 0; slot < 2 * b.dim(c); ++slot) {
            auto f = b.face_slot(c, slot);
            faces.push_back({f.target + na, b.sym(f.sym)});
        }
        out.complex.add_cell(b.dim(c), faces);
    }
    out.offset_b = na;
    return out;
}

// cell (x,y) of a*b gets id x*|b| + y; chart is (chart of x, chart of y)
inline CubeComplex product(const CubeComplex& a, const CubeComplex& b) {
    CubeComplex out;
    Cell nb = static_cast<Cell>(b.num_cells());
    // add_cell wants faces present; pair ids are not dimension-sorted, so add
    // in order of total dimension via an explicit ordering
    std::vector<std::pair<Cell, Cell>> order;
    order.reserve(a.num_cells() * b.num_cells());
    for (Cell x = 0; x < a.num_cells(); ++x)
        for (Cell y = 0; y < nb; ++y) order.push_back({x, y});
    std::stable_sort(order.begin(), order.end(), [&](auto& p, auto& q) {
        return a.dim(p.first) + b.dim(p.second) < a.dim(q.first) + b.dim(q.second);
    });
    // out ids must equal x*nb + y for deterministic addressing: build a
    // placement table first, then emit cells in placement order.
    std::vector<Cell> newid(a.num_cells() * nb);
    for (Cell i = 0; i < order.size(); ++i) newid[order[i].first * nb + order[i].second] = i;
    // emit
    std::vector<std::tuple<int, std::vector<std::pair<Cell, SignedPerm>>>> staged(order.size());
    for (auto& [x, y] : order) {
        int dx = a.dim(x), dy = b.dim(y);
        std::vector<std::pair<Cell, SignedPerm>> faces;
        for (int i = 1; i <= dx; ++i)
            for (int s = 0; s < 2; ++s) {
                auto f = a.face(x, i, s);
                faces.push_back({newid[f.target * nb + y], SignedPerm::block(a.sym(f.sym), SignedPerm::identity(dy))});
            }
        for (int i = 1; i <= dy; ++i)
            for (int s = 0; s < 2; ++s) {
                auto f = b.face(y, i, s);
                faces.push_back({newid[x * nb + f.target], SignedPerm::block(SignedPerm::identity(dx), b.sym(f.sym))});
            }
        staged[newid[x * nb + y]] = {dx + dy, std::move(faces)};
    }
    for (auto& [d, faces] : staged) out.add_cell(d, faces);
    return out;
}

inline Cell product_cell(const CubeComplex& a, const CubeComplex& b, Cell x, Cell y) {
    // must match the placement rule above
    Cell nb = static_cast<Cell>(b.num_cells());
    std::vector<std::pair<Cell, Cell>> order;
    order.reserve(a.num_cells() * nb);
    for (Cell i = 0; i < a.num_cells(); ++i)
        for (Cell j = 0; j < nb; ++j) order.push_back({i, j});
    std::stable_sort(order.begin(), order.end(), [&](auto& p, auto& q) {
        return a.dim(p.first) + b.dim(p.second) < a.dim(q.first) + b.dim(q.second);
    });
    for (Cell i = 0; i < order.size(); ++i)
        if (order[i].first == x && order[i].second == y) return i;
    return CubeComplex::npos;
}

// fast id table for products (new id indexed by x*|b|+y)
inline std::vector<Cell> product_id_table(const CubeComplex& a, const CubeComplex& b) {
    Cell nb = static_cast<Cell>(b.num_cells());
    std::vector<std::pair<Cell, Cell>> order;
    order.reserve(a.num_cells() * nb);
    for (Cell x = 0; x < a.num_cells(); ++x)
        for (Cell y = 0; y < nb; ++y) order.push_back({x, y});
    std::stable_sort(order.begin(), order.end(), [&](auto& p, auto& q) {
        return a.dim(p.first) + b.dim(p.second) < a.dim(q.first) + b.dim(q.second);
    });
    std::vector<Cell> newid(a.num_cells() * nb);
    for (Cell i = 0; i < order.size(); ++i) newid[order[i].first * nb + order[i].second] = i;
    return newid;
}

// ---------------------------------------------------------------------------
// quotient: identify cells along symmetries, propagating to faces

struct Identification {
    Cell a, b;
    SignedPerm g;  // sigma_a = sigma_b o g
};

struct CellImage {
    Cell target;
    SignedPerm sym;
};

struct QuotientResult {
    CubeComplex complex;
    std::vector<CellImage> map;  // old cell -> (new cell, chart)
    std::vector<Cell> rep;       // new cell -> old representative
};

inline QuotientResult quotient_complex(const CubeComplex& cx, const std::vector<Identification>& ids) {
    size_t n = cx.num_cells();
    std::vector<Cell> parent(n);
    std::vector<SignedPerm> psym(n);
    for (Cell c = 0; c < n; ++c) {
        parent[c] = c;
        psym[c] = SignedPerm::identity(cx.dim(c));
    }
    // find with path compression; sigma_c = sigma_root o returned sym
    auto find = [&](Cell c) -> std::pair<Cell, SignedPerm> {
        // collect the chain, then compress front to back
        std::vector<Cell> chain;
        Cell r = c;
        while (parent[r] != r) {
            chain.push_back(r);
            r = parent[r];
        }
        for (size_t i = chain.size(); i-- > 0;) {
            Cell x = chain[i];
            if (parent[x] != r) {
                psym[x] = SignedPerm::compose(psym[parent[x]], psym[x]);
                parent[x] = r;
            }
        }
        return {r, c == r ? SignedPerm::identity(cx.dim(c)) : psym[c]};
    };

    std::deque<Identification> work(ids.begin(), ids.end());
    while (!work.empty()) {
        Identification w = std::move(work.front());
        work.pop_front();
        if (cx.dim(w.a) != cx.dim(w.b)) throw Error("DIM_MISMATCH", "cannot identify cells of different dimension");
        auto [ra, ga] = find(w.a);
        auto [rb, gb] = find(w.b);
        // sigma_ra = sigma_rb o (gb o g o ga^{-1})
        SignedPerm rel = SignedPerm::compose(SignedPerm::compose(gb, w.g), ga.inverse());
        if (ra == rb) {
            if (!rel.is_identity())
                throw Error("SELF_IDENTIFICATION",
                            "cell " + std::to_string(ra) + " identified with itself by a non-trivial symmetry");
            continue;
        }
        parent[ra] = rb;
        psym[ra] = rel;
        // propagate to faces: faces of w.a match faces of w.b through g
        int d = cx.dim(w.a);
        for (int i = 1; i <= d; ++i)
            for (int s = 0; s < 2; ++s) {
                auto fa = cx.face(w.a, i, s);
                FacePush fp = push_through_face(w.g, i, s);
                auto fb = cx.face(w.b, fp.dir, fp.sign);
                // sigma_{fa.t} = sigma_{fb.t} o (sym_b o induced o sym_a^{-1})
                SignedPerm rel2 = SignedPerm::compose(SignedPerm::compose(cx.sym(fb.sym), fp.induced),
                                                      cx.sym(fa.sym).inverse());
                work.push_back(Identification{fa.target, fb.target, rel2});
            }
    }

    // rebuild, classes ordered by smallest member
    QuotientResult out;
    std::vector<Cell> roots;
    for (Cell c = 0; c < n; ++c)
        if (find(c).first == c) roots.push_back(c);
    // map root -> smallest member for stable ordering
    std::vector<Cell> small(n, CubeComplex::npos);
    for (Cell c = 0; c < n; ++c) {
        Cell r = find(c).first;
        if (small[r] == CubeComplex::npos || c < small[r]) small[r] = c;
    }
    std::sort(roots.begin(), roots.end(), [&](Cell a, Cell b) { return small[a] < small[b]; });
    // place classes dimension-major so add_cell sees faces first
    std::stable_sort(roots.begin(), roots.end(), [&](Cell a, Cell b) { return cx.dim(a) < cx.dim(b); });
    std::vector<Cell> newid(n, CubeComplex::npos);
    for (Cell i = 0; i < roots.size(); ++i) newid[roots[i]] = i;

    out.rep.resize(roots.size());
    for (Cell i = 0; i < roots.size(); ++i) out.rep[i] = small[roots[i]];
    for (Cell r : roots) {
        int d = cx.dim(r);
        std::vector<std::pair<Cell, SignedPerm>> faces;
        for (int slot = 0; slot < 2 * d; ++slot) {
            auto f = cx.face_slot(r, slot);
            auto [rt, gt] = find(f.target);
            faces.push_back({newid[rt], SignedPerm::compose(gt, cx.sym(f.sym))});
        }
        out.complex.add_cell(d, faces);
    }
    out.map.resize(n);
    for (Cell c = 0; c < n; ++c) {
        auto [r, g] = find(c);
        out.map[c] = CellImage{newid[r], g};
    }
    return out;
}

// ---------------------------------------------------------------------------
// subcomplex extraction

struct SubcomplexResult {
    CubeComplex complex;
    std::vector<Cell> to_parent;    // sub cell -> parent cell
    std::vector<Cell> from_parent;  // parent cell -> sub cell or npos
};

inline SubcomplexResult extract_subcomplex(const CubeComplex& cx, const std::vector<Cell>& cells) {
    if (!cx.is_subcomplex(cells)) throw Error("NOT_A_SUBCOMPLEX", "cell set is not face-closed");
    SubcomplexResult out;
    out.from_parent.assign(cx.num_cells(), CubeComplex::npos);
    std::vector<Cell> sorted = cells;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::stable_sort(sorted.begin(), sorted.end(), [&](Cell a, Cell b) { return cx.dim(a) < cx.dim(b); });
    for (Cell c : sorted) {
        std::vector<std::pair<Cell, SignedPerm>> faces;
        for (int slot = 0; slot < 2 * cx.dim(c); ++slot) {
            auto f = cx.face_slot(c, slot);
            faces.push_back({out.from_parent[f.target], cx.sym(f.sym)});
        }
        Cell nc = out.complex.add_cell(cx.dim(c), faces);
        out.from_parent[c] = nc;
        out.to_parent.push_back(c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// cubical subdivision

// Subdivision cells are pairs (cell, interior code); the code assigns each
// coordinate one of I0=[0,1/2], I1=[1/2,1], PH={1/2}.  Boundary codes with
// {0} or {1} are pushed into faces of the original cell.
class CubicalSubdivision {
public:
    explicit CubicalSubdivision(const CubeComplex& base) : base_(base) {
        offsets_.resize(base.num_cells() + 1, 0);
        for (Cell c = 0; c < base.num_cells(); ++c) {
            int p = 1;
            for (int i = 0; i < base.dim(c); ++i) p *= 3;
            offsets_[c + 1] = offsets_[c] + p;
        }
        build();
    }

    const CubeComplex& complex() const { return result_; }
    CubeComplex take() { return std::move(result_); }

    // id of subdivision cell (cell, code); code digits in {0=I0,1=I1,2=PH}
    Cell sub_id(Cell c, const std::vector<int>& code) const {
        int idx = 0, p = 1;
        for (size_t i = 0; i < code.size(); ++i) {
            idx += code[i] * p;
            p *= 3;
        }
        return order_[offsets_[c] + idx];
    }
    // original vertex -> subdivision vertex
    Cell vertex_id(Cell v) const { return sub_id(v, {}); }

    Cell parent_cell(Cell sub) const { return parent_[sub]; }
    const std::vector<int>& parent_code(Cell sub) const { return code_[sub]; }

private:
    const CubeComplex& base_;
    CubeComplex result_;
    std::vector<uint32_t> offsets_;
    std::vector<Cell> order_;         // (cell,code) linear index -> new id
    std::vector<Cell> parent_;        // new id -> original cell
    std::vector<std::vector<int>> code_;  // new id -> code

    static int sub_dim(const std::vector<int>& code) {
        int d = 0;
        for (int v : code) d += (v != 2);
        return d;
    }

    void build() {
        size_t total = offsets_.back();
        // enumerate all (cell, code), then place dimension-major
        struct Item {
            Cell cell;
            std::vector<int> code;
            int dim;
        };
        std::vector<Item> items;
        items.reserve(total);
        for (Cell c = 0; c < base_.num_cells(); ++c) {
            int d = base_.dim(c);
            int p = 1;
            for (int i = 0; i < d; ++i) p *= 3;
            for (int idx = 0; idx < p; ++idx) {
                std::vector<int> code(d);
                int t = idx;
                for (int i = 0; i < d; ++i) {
                    code[i] = t % 3;
                    t /= 3;
                }
                items.push_back({c, std::move(code), 0});
                items.back().dim = sub_dim(items.back().code);
            }
        }
        std::vector<size_t> perm(items.size());
        for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::stable_sort(perm.begin(), perm.end(), [&](size_t a, size_t b) { return items[a].dim < items[b].dim; });
        order_.assign(items.size(), CubeComplex::npos);
        for (size_t i = 0; i < perm.size(); ++i) order_[perm[i]] = static_cast<Cell>(i);

        parent_.resize(items.size());
        code_.resize(items.size());
        for (size_t li = 0; li < perm.size(); ++li) {
            const Item& it = items[perm[li]];
            parent_[li] = it.cell;
            code_[li] = it.code;
            std::vector<std::pair<Cell, SignedPerm>> faces;
            int k = it.dim;
            // local direction r runs over interval coordinates in order
            for (size_t q = 0; q < it.code.size(); ++q) {
                if (it.code[q] == 2) continue;
                for (int s = 0; s < 2; ++s) {
                    faces.push_back(face_of(it.cell, it.code, static_cast<int>(q), s, k));
                }
            }
            // faces were generated (q asc, s asc) which matches slot order
            result_.add_cell(k, faces);
        }
    }

    std::pair<Cell, SignedPerm> face_of(Cell cell, const std::vector<int>& code, int q, int s, int k) const {
        // face of the interval coordinate q (global index) with sign s
        std::vector<int> nc = code;
        bool boundary;
        int bval = 0;
        if (code[q] == 0) {  // [0, 1/2]
            if (s == 0) { boundary = true; bval = 0; }
            else { boundary = false; nc[q] = 2; }
        } else {  // [1/2, 1]
            if (s == 0) { boundary = false; nc[q] = 2; }
            else { boundary = true; bval = 1; }
        }
        if (!boundary) {
            return {linear_id(cell, nc), SignedPerm::identity(k - 1)};
        }
        // push through the original face map (dir = q+1, sign = bval)
        auto f = base_.face(cell, q + 1, bval);
        const SignedPerm& g = base_.sym(f.sym);
        std::vector<int> del = code;
        del.erase(del.begin() + q);
        // transform the code through g: target coordinate i reads del[src(i)]
        int dt = base_.dim(f.target);
        std::vector<int> tcode(dt);
        for (int i = 0; i < dt; ++i) {
            int v = del[g.src(i)];
            if (g.flip(i) && v != 2) v = 1 - v;
            tcode[i] = v;
        }
        // chart map between interval coordinates
        std::vector<int> src_rank(dt, -1);
        {
            int r = 0;
            for (size_t i = 0; i < del.size(); ++i) {
                if (del[i] != 2) src_rank[i] = r++;
            }
        }
        SignedPerm chart;
        chart.s.resize(k - 1);
        int out_rank = 0;
        for (int i = 0; i < dt; ++i) {
            if (tcode[i] == 2) continue;
            int sr = src_rank[g.src(i)];
            int v = sr + 1;
            if (g.flip(i)) v = -v;
            chart.s[out_rank++] = static_cast<int8_t>(v);
        }
        return {linear_id(f.target, tcode), chart};
    }

    Cell linear_id(Cell c, const std::vector<int>& code) const {
        int idx = 0, p = 1;
        for (size_t i = 0; i < code.size(); ++i) {
            idx += code[i] * p;
            p *= 3;
        }
        return order_[offsets_[c] + idx];
    }
};

inline CubeComplex cubical_subdivision(const CubeComplex& c) { return CubicalSubdivision(c).take(); }

} // namespace ktc
