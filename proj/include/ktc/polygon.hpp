#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <vector>
#include <algorithm>
#include <optional>
#include <string>

#include "cube_complex.hpp"

namespace ktc {

// Square-tiled disc with marked boundary corners.  The carrier is stored by
// vertex incidence (squares as 4-tuples of distinct vertices); discs embed,
// so this is lossless, and to_cube_complex() produces the face-map form.
struct TessellatedPolygon {
    uint32_t num_vertices = 0;
    std::vector<std::array<uint32_t, 4>> squares;  // cyclic vertex order
    std::vector<uint32_t> boundary;                // boundary vertex cycle, starts at corner 1
    std::vector<uint32_t> corners;                 // corner vertex ids in cyclic order

    size_t n() const { return corners.size(); }
    size_t perimeter() const { return boundary.size(); }

    std::vector<size_t> corner_positions() const {
        std::vector<size_t> pos;
        for (uint32_t c : corners) {
            auto it = std::find(boundary.begin(), boundary.end(), c);
            if (it == boundary.end()) throw Error("BAD_CORNER", "corner not on boundary");
            pos.push_back(static_cast<size_t>(it - boundary.begin()));
        }
        return pos;
    }
    std::vector<int64_t> side_lengths() const {
        auto pos = corner_positions();
        std::vector<int64_t> out;
        size_t p = perimeter();
        for (size_t i = 0; i < pos.size(); ++i) {
            size_t a = pos[i], b = pos[(i + 1) % pos.size()];
            out.push_back(static_cast<int64_t>((b + p - a) % p));
        }
        return out;
    }

    // undirected edge list derived from the squares
    std::vector<std::pair<uint32_t, uint32_t>> edges() const {
        std::set<std::pair<uint32_t, uint32_t>> es;
        for (auto& s : squares)
            for (int i = 0; i < 4; ++i) {
                uint32_t a = s[i], b = s[(i + 1) % 4];
                es.insert({std::min(a, b), std::max(a, b)});
            }
        return {es.begin(), es.end()};
    }
};

namespace polygon_detail {

struct Derived {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    std::map<std::pair<uint32_t, uint32_t>, int> edge_sq_count;
    std::vector<int> degree;
    std::vector<uint8_t> on_boundary;
    std::vector<uint32_t> boundary_cycle;  // derived, oriented like p.boundary
};

inline Derived derive(const TessellatedPolygon& p) {
    Derived d;
    d.degree.assign(p.num_vertices, 0);
    d.on_boundary.assign(p.num_vertices, 0);
    for (auto& s : p.squares) {
        std::set<uint32_t> distinct(s.begin(), s.end());
        if (distinct.size() != 4) throw Error("BAD_SQUARE", "square with repeated vertex");
        for (int i = 0; i < 4; ++i) {
            uint32_t a = s[i], b = s[(i + 1) % 4];
            d.edge_sq_count[{std::min(a, b), std::max(a, b)}] += 1;
        }
    }
    for (auto& [e, cnt] : d.edge_sq_count) {
        if (cnt > 2) throw Error("BAD_EDGE", "edge in more than two squares");
        d.edges.push_back(e);
        ++d.degree[e.first];
        ++d.degree[e.second];
    }
    // boundary edges form a single cycle
    std::map<uint32_t, std::vector<uint32_t>> bnext;
    size_t bedges = 0;
    for (auto& [e, cnt] : d.edge_sq_count)
        if (cnt == 1) {
            bnext[e.first].push_back(e.second);
            bnext[e.second].push_back(e.first);
            ++bedges;
            d.on_boundary[e.first] = d.on_boundary[e.second] = 1;
        }
    if (bedges == 0) throw Error("NOT_A_DISC", "no boundary");
    for (auto& [v, ns] : bnext)
        if (ns.size() != 2) throw Error("NOT_A_DISC", "boundary not a manifold circle");
    uint32_t start = bnext.begin()->first;
    std::vector<uint32_t> cyc = {start};
    uint32_t prev = start, cur = bnext[start][0];
    while (cur != start) {
        cyc.push_back(cur);
        auto& ns = bnext[cur];
        uint32_t nxt = (ns[0] == prev) ? ns[1] : ns[0];
        prev = cur;
        cur = nxt;
    }
    if (cyc.size() != bedges) throw Error("NOT_A_DISC", "boundary has several components");
    d.boundary_cycle = cyc;
    return d;
}

}  // namespace polygon_detail

// recompute boundary (oriented so the corners appear in their given cyclic
// order, starting at the first corner)
inline void rebuild_boundary(TessellatedPolygon& p) {
    polygon_detail::Derived d = polygon_detail::derive(p);
    auto& cyc = d.boundary_cycle;
    auto it = std::find(cyc.begin(), cyc.end(), p.corners.at(0));
    if (it == cyc.end()) throw Error("BAD_CORNER", "corner not on boundary");
    std::rotate(cyc.begin(), it, cyc.end());
    auto corner_order = [&](const std::vector<uint32_t>& cycle) {
        std::vector<uint32_t> seen;
        std::set<uint32_t> corner_set(p.corners.begin(), p.corners.end());
        for (uint32_t v : cycle)
            if (corner_set.count(v)) seen.push_back(v);
        return seen;
    };
    std::vector<uint32_t> fwd = corner_order(cyc);
    if (fwd == p.corners) {
        p.boundary = cyc;
        return;
    }
    std::vector<uint32_t> rev = cyc;
    std::reverse(rev.begin() + 1, rev.end());
    if (corner_order(rev) == p.corners) {
        p.boundary = rev;
        return;
    }
    throw Error("BAD_CORNER", "corners are not in cyclic boundary order");
}

inline void validate(const TessellatedPolygon& p) {
    if (p.corners.size() < 3) throw Error("BAD_CORNER", "need at least 3 corners");
    {
        std::set<uint32_t> cs(p.corners.begin(), p.corners.end());
        if (cs.size() != p.corners.size()) throw Error("BAD_CORNER", "corners not distinct");
    }
    polygon_detail::Derived d = polygon_detail::derive(p);
    // connected via squares/edges
    std::vector<uint32_t> parent(p.num_vertices);
    for (uint32_t i = 0; i < p.num_vertices; ++i) parent[i] = i;
    std::function<uint32_t(uint32_t)> find = [&](uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto& e : d.edges) parent[find(e.first)] = find(e.second);
    std::set<uint32_t> comps;
    for (uint32_t v = 0; v < p.num_vertices; ++v)
        if (d.degree[v] > 0) comps.insert(find(v));
    if (comps.size() != 1) throw Error("NOT_A_DISC", "carrier not connected");
    int64_t chi = static_cast<int64_t>(p.num_vertices) - static_cast<int64_t>(d.edges.size()) +
                  static_cast<int64_t>(p.squares.size());
    if (chi != 1) throw Error("NOT_A_DISC", "euler characteristic " + std::to_string(chi));
    // stored boundary matches the derived cycle (up to rotation/direction)
    if (p.boundary.size() != d.boundary_cycle.size()) throw Error("NOT_A_DISC", "stored boundary wrong length");
    {
        std::set<std::pair<uint32_t, uint32_t>> bedges;
        for (auto& [e, cnt] : d.edge_sq_count)
            if (cnt == 1) bedges.insert(e);
        for (size_t j = 0; j < p.boundary.size(); ++j) {
            uint32_t a = p.boundary[j], b = p.boundary[(j + 1) % p.boundary.size()];
            if (!bedges.count({std::min(a, b), std::max(a, b)}))
                throw Error("NOT_A_DISC", "stored boundary uses a non-boundary edge");
        }
        std::set<uint32_t> bv(p.boundary.begin(), p.boundary.end());
        if (bv.size() != p.boundary.size()) throw Error("NOT_A_DISC", "stored boundary repeats a vertex");
    }
    for (uint32_t v : p.corners)
        if (!d.on_boundary[v]) throw Error("BAD_CORNER", "corner not on boundary");
    auto sl = p.side_lengths();
    for (int64_t l : sl)
        if (l < 1) throw Error("BAD_CORNER", "empty side");
}

// curvature c(v): 4-n(v) interior, 3-n(v) boundary non-corner, 2-n(v) corner
inline int64_t curvature(const TessellatedPolygon& p, uint32_t v) {
    if (v >= p.num_vertices) throw Error("UNKNOWN_VERTEX", "no such vertex");
    polygon_detail::Derived d = polygon_detail::derive(p);
    bool corner = std::find(p.corners.begin(), p.corners.end(), v) != p.corners.end();
    int64_t base = d.on_boundary[v] ? (corner ? 2 : 3) : 4;
    return base - d.degree[v];
}

inline std::vector<int64_t> all_curvatures(const TessellatedPolygon& p) {
    polygon_detail::Derived d = polygon_detail::derive(p);
    std::set<uint32_t> corner_set(p.corners.begin(), p.corners.end());
    std::vector<int64_t> out(p.num_vertices, 0);
    for (uint32_t v = 0; v < p.num_vertices; ++v) {
        int64_t base = d.on_boundary[v] ? (corner_set.count(v) ? 2 : 3) : 4;
        out[v] = base - d.degree[v];
    }
    return out;
}

// combinatorial Gauss-Bonnet: the total curvature of an n-gon disc is 4-n
inline int64_t gauss_bonnet(const TessellatedPolygon& p) {
    auto cs = all_curvatures(p);
    int64_t total = 0;
    for (int64_t c : cs) total += c;
    if (total != 4 - static_cast<int64_t>(p.n()))
        throw Error("GAUSS_BONNET", "total curvature " + std::to_string(total) + " != 4-n");
    return total;
}

struct Cat0Result {
    bool cat0 = true;
    std::vector<uint32_t> positive_vertices;
};

inline Cat0Result is_cat0_polygon(const TessellatedPolygon& p) {
    Cat0Result out;
    auto cs = all_curvatures(p);
    for (uint32_t v = 0; v < p.num_vertices; ++v)
        if (cs[v] > 0) {
            out.cat0 = false;
            out.positive_vertices.push_back(v);
        }
    return out;
}

// ---------------------------------------------------------------------------
// elementary constructions

inline TessellatedPolygon unit_square_polygon() {
    TessellatedPolygon p;
    p.num_vertices = 4;
    p.squares = {{0, 1, 2, 3}};
    p.corners = {0, 1, 2, 3};
    rebuild_boundary(p);
    validate(p);
    return p;
}

// mark a new corner k steps into side i (1-based side index)
inline TessellatedPolygon insert_corner(const TessellatedPolygon& p, size_t i, int64_t k) {
    auto sl = p.side_lengths();
    if (i < 1 || i > p.n()) throw Error("BAD_SIDE", "side index out of range");
    if (k <= 0 || k >= sl[i - 1]) throw Error("BAD_SPLIT", "need 0 < k < side length");
    auto pos = p.corner_positions();
    size_t at = (pos[i - 1] + static_cast<size_t>(k)) % p.perimeter();
    TessellatedPolygon out = p;
    out.corners.insert(out.corners.begin() + i, p.boundary[at]);
    rebuild_boundary(out);
    validate(out);
    return out;
}

// attach a 1 x l_i rectangle along side i; neighbours grow by one
inline TessellatedPolygon collar(const TessellatedPolygon& p, size_t i) {
    if (i < 1 || i > p.n()) throw Error("BAD_SIDE", "side index out of range");
    auto pos = p.corner_positions();
    auto sl = p.side_lengths();
    int64_t len = sl[i - 1];
    TessellatedPolygon out = p;
    std::vector<uint32_t> path;
    for (int64_t j = 0; j <= len; ++j) path.push_back(p.boundary[(pos[i - 1] + j) % p.perimeter()]);
    std::vector<uint32_t> row;
    for (int64_t j = 0; j <= len; ++j) row.push_back(out.num_vertices++);
    for (int64_t j = 0; j < len; ++j)
        out.squares.push_back({path[j], path[j + 1], row[j + 1], row[j]});
    out.corners[i - 1] = row.front();
    out.corners[i % p.n()] = row.back();
    rebuild_boundary(out);
    validate(out);
    return out;
}

inline TessellatedPolygon collar_all(const TessellatedPolygon& p) {
    TessellatedPolygon out = p;
    for (size_t i = 1; i <= p.n(); ++i) out = collar(out, i);
    return out;
}

inline TessellatedPolygon collar_all_iter(const TessellatedPolygon& p, int m) {
    TessellatedPolygon out = p;
    for (int j = 0; j < m; ++j) out = collar_all(out);
    return out;
}

// cubical subdivision: side lengths double
inline TessellatedPolygon subdivide_polygon(const TessellatedPolygon& p) {
    TessellatedPolygon out;
    out.num_vertices = p.num_vertices;
    std::map<std::pair<uint32_t, uint32_t>, uint32_t> mid;
    auto midpoint = [&](uint32_t a, uint32_t b) {
        auto key = std::make_pair(std::min(a, b), std::max(a, b));
        auto it = mid.find(key);
        if (it != mid.end()) return it->second;
        uint32_t v = out.num_vertices++;
        mid.emplace(key, v);
        return v;
    };
    for (auto& s : p.squares) {
        uint32_t m01 = midpoint(s[0], s[1]), m12 = midpoint(s[1], s[2]);
        uint32_t m23 = midpoint(s[2], s[3]), m30 = midpoint(s[3], s[0]);
        uint32_t ctr = out.num_vertices++;
        out.squares.push_back({s[0], m01, ctr, m30});
        out.squares.push_back({s[1], m12, ctr, m01});
        out.squares.push_back({s[2], m23, ctr, m12});
        out.squares.push_back({s[3], m30, ctr, m23});
    }
    out.corners = p.corners;
    rebuild_boundary(out);
    validate(out);
    return out;
}

// ---------------------------------------------------------------------------
// corner cutting (build from side lengths on a rectangle boundary)

namespace polygon_detail {

struct Box {
    int64_t x0, y0, x1, y1;  // closed, possibly degenerate
    bool intersects(const Box& o) const {
        return x0 <= o.x1 && o.x0 <= x1 && y0 <= o.y1 && o.y0 <= y1;
    }
};

inline std::pair<int64_t, int64_t> rect_point(int64_t w, int64_t h, int64_t t) {
    int64_t p = 2 * (w + h);
    t = ((t % p) + p) % p;
    if (t <= w) return {t, 0};
    if (t <= w + h) return {w, t - w};
    if (t <= 2 * w + h) return {2 * w + h - t, h};
    return {0, p - t};
}

}  // namespace polygon_detail

// Place corners v_1..v_n on the boundary of a w x h rectangle, v_1 at arc
// `offset` (counter-clockwise; `reversed` walks the other way), cut the four
// corner subrectangles and return the closure of the complement.
inline TessellatedPolygon corner_cut_rectangle(int64_t w, int64_t h, const std::vector<int64_t>& lengths,
                                               int64_t offset, bool reversed = false) {
    using polygon_detail::Box;
    using polygon_detail::rect_point;
    if (w < 1 || h < 1) throw Error("BAD_RECT", "rectangle sides must be positive");
    int64_t p = 0;
    for (int64_t l : lengths) {
        if (l < 1) throw Error("BAD_SIDE", "side lengths must be positive");
        p += l;
    }
    if (p != 2 * (w + h)) throw Error("BAD_RECT", "perimeter mismatch");
    size_t n = lengths.size();
    if (n < 3) throw Error("BAD_SIDE", "need at least 3 sides");

    // marked arcs
    std::vector<int64_t> arc(n);
    int64_t t = offset;
    for (size_t i = 0; i < n; ++i) {
        arc[i] = ((t % p) + p) % p;
        t += reversed ? -lengths[i] : lengths[i];
    }
    std::set<int64_t> marked(arc.begin(), arc.end());
    if (marked.size() != n) throw Error("BAD_CORNER", "coincident corners");

    // cuts at unmarked rectangle corners
    int64_t corner_arcs[4] = {0, w, w + h, 2 * w + h};
    std::vector<Box> cuts;
    for (int j = 0; j < 4; ++j) {
        int64_t ca = corner_arcs[j];
        auto [cx, cy] = rect_point(w, h, ca);
        if (marked.count(ca)) {
            cuts.push_back({cx, cy, cx, cy});
            continue;
        }
        // the side (v_i, v_{i+1}) whose open arc contains ca
        int found = -1;
        for (size_t i = 0; i < n; ++i) {
            int64_t a = arc[i];
            int64_t rel = reversed ? ((a - ca) % p + p) % p : ((ca - a) % p + p) % p;
            int64_t len = lengths[i];
            if (rel > 0 && rel < len) { found = static_cast<int>(i); break; }
        }
        if (found < 0) throw Error("BAD_CORNER", "corner arc not inside any side");
        auto [ax, ay] = rect_point(w, h, arc[found]);
        auto [bx, by] = rect_point(w, h, arc[(found + 1) % n]);
        Box box{std::min({ax, cx, bx}), std::min({ay, cy, by}), std::max({ax, cx, bx}), std::max({ay, cy, by})};
        cuts.push_back(box);
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (cuts[i].intersects(cuts[j]))
                throw Error("OVERLAP", "cut rectangles " + std::to_string(i) + " and " + std::to_string(j) + " meet");

    // surviving unit squares
    auto square_cut = [&](int64_t x, int64_t y) {
        for (auto& b : cuts)
            if (x >= b.x0 && x + 1 <= b.x1 && y >= b.y0 && y + 1 <= b.y1) return true;
        return false;
    };
    TessellatedPolygon out;
    std::map<std::pair<int64_t, int64_t>, uint32_t> vid;
    auto vertex = [&](int64_t x, int64_t y) {
        auto key = std::make_pair(x, y);
        auto it = vid.find(key);
        if (it != vid.end()) return it->second;
        uint32_t v = out.num_vertices++;
        vid.emplace(key, v);
        return v;
    };
    for (int64_t y = 0; y < h; ++y)
        for (int64_t x = 0; x < w; ++x) {
            if (square_cut(x, y)) continue;
            out.squares.push_back({vertex(x, y), vertex(x + 1, y), vertex(x + 1, y + 1), vertex(x, y + 1)});
        }
    for (size_t i = 0; i < n; ++i) {
        auto [x, y] = rect_point(w, h, arc[i]);
        auto it = vid.find({x, y});
        if (it == vid.end()) throw Error("NOT_A_DISC", "marked corner was cut away");
        out.corners.push_back(it->second);
    }
    rebuild_boundary(out);
    validate(out);
    return out;
}

// ---------------------------------------------------------------------------
// single-vertex constructions (identify the sides of n rectangles k_i x k_{i+1})

struct SolveKResult {
    enum Status { OK, UNDERDETERMINED_OK, NON_INTEGRAL, NEGATIVE, BAD_ZERO_PATTERN, INFEASIBLE_CONDITIONS };
    Status status = OK;
    std::vector<int64_t> k;
    int witness = -1;                 // index for NEGATIVE
    std::vector<int> zero_positions;  // for BAD_ZERO_PATTERN
    bool feasible() const { return status == OK || status == UNDERDETERMINED_OK; }
};

namespace polygon_detail {

// at most one zero, or exactly two cyclically adjacent zeros
inline bool zero_pattern_ok(const std::vector<int64_t>& k, std::vector<int>* zeros = nullptr) {
    std::vector<int> z;
    for (size_t i = 0; i < k.size(); ++i)
        if (k[i] == 0) z.push_back(static_cast<int>(i));
    if (zeros) *zeros = z;
    if (z.size() <= 1) return true;
    if (z.size() == 2) {
        size_t d = static_cast<size_t>(z[1] - z[0]);
        return d == 1 || d == k.size() - 1;
    }
    return false;
}

}  // namespace polygon_detail

inline SolveKResult solve_k(const std::vector<int64_t>& l) {
    SolveKResult out;
    size_t n = l.size();
    if (n < 3) throw Error("BAD_SIDE", "need at least 3 sides");
    for (int64_t x : l)
        if (x < 1) throw Error("BAD_SIDE", "side lengths must be positive");
    if (n % 4 != 0) {
        size_t m = (n % 2 == 1) ? n : n / 2;
        out.k.assign(n, 0);
        for (size_t i = 0; i < n; ++i) {
            int64_t s = 0;
            for (size_t j = 0; j < m; ++j) {
                int64_t term = l[(i + 2 * j) % n];
                s += (j % 2 == 0) ? term : -term;
            }
            if (s % 2 != 0) {
                out.status = SolveKResult::NON_INTEGRAL;
                return out;
            }
            out.k[i] = s / 2;
            if (out.k[i] < 0) {
                out.status = SolveKResult::NEGATIVE;
                out.witness = static_cast<int>(i);
                return out;
            }
        }
        if (!polygon_detail::zero_pattern_ok(out.k, &out.zero_positions)) {
            out.status = SolveKResult::BAD_ZERO_PATTERN;
            return out;
        }
        out.status = SolveKResult::OK;
        return out;
    }
    // n divisible by 4: solvable iff the two alternating sums agree
    int64_t s13 = 0, s24 = 0;
    for (size_t i = 0; i < n; i += 4) {
        s13 += l[i] - l[i + 2];
        s24 += l[i + 1] - l[i + 3];
    }
    if (s13 != 0 || s24 != 0) {
        out.status = SolveKResult::INFEASIBLE_CONDITIONS;
        return out;
    }
    // each parity class is a chain k_{i+2} = l_i - k_i with one free choice
    auto chain = [&](size_t start, int64_t t) {
        std::vector<int64_t> ks(n / 2);
        int64_t cur = t;
        for (size_t j = 0; j < n / 2; ++j) {
            ks[j] = cur;  // k_{start + 2j}
            cur = l[(start + 2 * j) % n] - cur;
        }
        return ks;
    };
    auto bound = [&](size_t start) {
        // feasible range of the free parameter for nonnegativity
        int64_t lo = 0, hi = INT64_MAX;
        int64_t coeff = 1, acc = 0;  // k_{start+2j} = coeff*t + acc
        for (size_t j = 0; j < n / 2; ++j) {
            if (coeff > 0) lo = std::max(lo, -acc);
            else hi = std::min(hi, acc);
            acc = l[(start + 2 * j) % n] - acc;
            coeff = -coeff;
        }
        return std::make_pair(lo, hi);
    };
    auto [lo1, hi1] = bound(0);
    auto [lo2, hi2] = bound(1);
    if (lo1 > hi1 || lo2 > hi2) {
        out.status = SolveKResult::NEGATIVE;
        return out;
    }
    for (int64_t t1 = lo1; t1 <= hi1; ++t1)
        for (int64_t t2 = lo2; t2 <= hi2; ++t2) {
            std::vector<int64_t> k(n);
            auto odd = chain(0, t1), even = chain(1, t2);
            for (size_t j = 0; j < n / 2; ++j) {
                k[(2 * j) % n] = odd[j];
                k[(2 * j + 1) % n] = even[j];
            }
            bool neg = false;
            for (int64_t v : k) neg |= (v < 0);
            if (neg) continue;
            if (polygon_detail::zero_pattern_ok(k, &out.zero_positions)) {
                out.k = k;
                out.status = SolveKResult::UNDERDETERMINED_OK;
                return out;
            }
        }
    out.status = SolveKResult::BAD_ZERO_PATTERN;
    return out;
}

// glue n rectangles R_i of size k_i x k_{i+1} around a central vertex
inline TessellatedPolygon single_vertex_polygon_from_k(const std::vector<int64_t>& k) {
    size_t n = k.size();
    std::vector<int> zeros;
    if (!polygon_detail::zero_pattern_ok(k, &zeros)) throw Error("BAD_ZERO_PATTERN", "invalid zero pattern");
    TessellatedPolygon out;
    // vertex keys: center, spoke points, rectangle interiors
    std::map<std::tuple<int, int64_t, int64_t>, uint32_t> vid;  // (rect or spoke tag, a, b)
    uint32_t center = out.num_vertices++;
    auto spoke_pt = [&](size_t i, int64_t a) {
        if (a == 0) return center;
        auto key = std::make_tuple(-(static_cast<int>(i % n) + 1), a, int64_t(0));
        auto it = vid.find(key);
        if (it != vid.end()) return it->second;
        uint32_t v = out.num_vertices++;
        vid.emplace(key, v);
        return v;
    };
    auto rect_pt = [&](size_t i, int64_t a, int64_t b) {
        if (b == 0) return spoke_pt(i, a);
        if (a == 0) return spoke_pt(i + 1, b);
        auto key = std::make_tuple(static_cast<int>(i), a, b);
        auto it = vid.find(key);
        if (it != vid.end()) return it->second;
        uint32_t v = out.num_vertices++;
        vid.emplace(key, v);
        return v;
    };
    for (size_t i = 0; i < n; ++i) {
        int64_t ka = k[i], kb = k[(i + 1) % n];
        for (int64_t a = 0; a < ka; ++a)
            for (int64_t b = 0; b < kb; ++b)
                out.squares.push_back({rect_pt(i, a, b), rect_pt(i, a + 1, b), rect_pt(i, a + 1, b + 1),
                                       rect_pt(i, a, b + 1)});
    }
    for (size_t i = 0; i < n; ++i) {
        int64_t ka = k[i], kb = k[(i + 1) % n];
        uint32_t v;
        if (ka > 0 && kb > 0) v = rect_pt(i, ka, kb);
        else if (ka > 0) v = spoke_pt(i, ka);
        else if (kb > 0) v = spoke_pt(i + 1, kb);
        else v = center;
        out.corners.push_back(v);
    }
    rebuild_boundary(out);
    validate(out);
    return out;
}

inline TessellatedPolygon single_vertex_polygon(const std::vector<int64_t>& lengths) {
    SolveKResult r = solve_k(lengths);
    if (!r.feasible()) {
        const char* what[] = {"", "", "NON_INTEGRAL", "NEGATIVE", "BAD_ZERO_PATTERN", "INFEASIBLE_CONDITIONS"};
        throw Error(what[r.status], "side lengths not realizable with one curved vertex");
    }
    TessellatedPolygon p = single_vertex_polygon_from_k(r.k);
    if (p.side_lengths() != lengths) throw Error("ROUND_TRIP", "side lengths disagree after construction");
    return p;
}

// CAT(0) regular right-angled pentagon of side 2m (five m x m squares)
inline TessellatedPolygon regular_right_pentagon(int64_t m) {
    if (m < 1) throw Error("BAD_SIDE", "pentagon scale must be positive");
    return single_vertex_polygon(std::vector<int64_t>(5, 2 * m));
}

// ---------------------------------------------------------------------------
// conversion to the face-map representation

struct PolygonComplex {
    CubeComplex complex;
    std::vector<Cell> vertex_cell;             // polygon vertex -> 0-cube
    std::vector<Cell> boundary_edges;          // edge cells along the boundary cycle
    std::vector<Cell> boundary_vertices;       // vertex cells along the boundary cycle
    std::vector<size_t> corner_positions;      // positions of the corners in the cycle
};

inline PolygonComplex to_cube_complex(const TessellatedPolygon& p) {
    PolygonComplex out;
    for (uint32_t v = 0; v < p.num_vertices; ++v) out.vertex_cell.push_back(out.complex.add_vertex());
    auto es = p.edges();
    std::map<std::pair<uint32_t, uint32_t>, Cell> eid;
    SignedPerm id0 = SignedPerm::identity(0);
    for (auto& e : es)
        eid[e] = out.complex.add_cell(1, {{out.vertex_cell[e.first], id0}, {out.vertex_cell[e.second], id0}});
    SignedPerm id1 = SignedPerm::identity(1);
    SignedPerm fl1{{-1}};
    auto edge_face = [&](uint32_t a, uint32_t b) -> std::pair<Cell, SignedPerm> {
        // oriented a -> b in the chart; stored min -> max
        if (a < b) return {eid.at({a, b}), id1};
        return {eid.at({b, a}), fl1};
    };
    for (auto& s : p.squares) {
        // chart corners (0,0)=s0,(1,0)=s1,(1,1)=s2,(0,1)=s3
        auto left = edge_face(s[0], s[3]);
        auto right = edge_face(s[1], s[2]);
        auto bottom = edge_face(s[0], s[1]);
        auto top = edge_face(s[3], s[2]);
        out.complex.add_cell(2, {left, right, bottom, top});
    }
    size_t pm = p.perimeter();
    for (size_t j = 0; j < pm; ++j) {
        uint32_t a = p.boundary[j], b = p.boundary[(j + 1) % pm];
        out.boundary_vertices.push_back(out.vertex_cell[a]);
        out.boundary_edges.push_back(eid.at({std::min(a, b), std::max(a, b)}));
    }
    out.corner_positions = p.corner_positions();
    return out;
}

} // namespace ktc
