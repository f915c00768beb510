#pragma once

#include <json.hpp>

#include <fstream>
#include <string>

#include "cube_complex.hpp"
#include "cellular_map.hpp"
#include "delta.hpp"
#include "links.hpp"
#include "polygon.hpp"
#include "homology.hpp"
#include "kit.hpp"

namespace ktc {

using Json = nlohmann::ordered_json;

constexpr const char* KTC_SCHEMA = "ktc-1";

// ---------------------------------------------------------------------------
// cube complexes
// {"schema":"ktc-1","kind":"cube","cells":[{"id","dim","faces":[{"dir","sign","target","sym":[...]}]}]}

inline Json complex_to_json(const CubeComplex& cx) {
    Json cells = Json::array();
    for (Cell c = 0; c < cx.num_cells(); ++c) {
        Json faces = Json::array();
        for (int dir = 1; dir <= cx.dim(c); ++dir)
            for (int s = 0; s < 2; ++s) {
                auto f = cx.face(c, dir, s);
                Json sym = Json::array();
                const SignedPerm& g = cx.sym(f.sym);
                for (int i = 0; i < g.dim(); ++i) sym.push_back(static_cast<int>(g.s[i]));
                faces.push_back({{"dir", dir}, {"sign", s ? "+" : "-"}, {"target", f.target}, {"sym", sym}});
            }
        cells.push_back({{"id", c}, {"dim", cx.dim(c)}, {"faces", faces}});
    }
    return Json{{"schema", KTC_SCHEMA}, {"kind", "cube"}, {"cells", cells}};
}

inline CubeComplex complex_from_json(const Json& j) {
    if (j.value("kind", "") != "cube") throw Error("SCHEMA", "expected kind \"cube\"");
    CubeComplex cx;
    size_t n = j.at("cells").size();
    // cells may reference any id; stage then add in dimension order
    std::vector<int> dims(n, -1);
    std::vector<std::vector<std::pair<Cell, SignedPerm>>> faces(n);
    for (auto& cell : j.at("cells")) {
        size_t id = cell.at("id").get<size_t>();
        if (id >= n || dims[id] >= 0) throw Error("SCHEMA", "bad cell id " + std::to_string(id));
        dims[id] = cell.at("dim").get<int>();
        auto& fs = cell.at("faces");
        if (fs.size() != static_cast<size_t>(2 * dims[id]))
            throw Error("SCHEMA", "cell " + std::to_string(id) + " has wrong face count");
        faces[id].resize(2 * dims[id]);
        std::vector<uint8_t> seen(2 * dims[id], 0);
        for (auto& f : fs) {
            int dir = f.at("dir").get<int>();
            std::string sign = f.at("sign").get<std::string>();
            if (dir < 1 || dir > dims[id] || (sign != "+" && sign != "-"))
                throw Error("SCHEMA", "bad face slot on cell " + std::to_string(id));
            int slot = 2 * (dir - 1) + (sign == "+" ? 1 : 0);
            if (seen[slot]) throw Error("SCHEMA", "duplicate face slot");
            seen[slot] = 1;
            SignedPerm g;
            for (auto& x : f.at("sym")) g.s.push_back(static_cast<int8_t>(x.get<int>()));
            faces[id][slot] = {f.at("target").get<Cell>(), g};
        }
    }
    // renumbering is not allowed: ids must already be dimension-compatible
    // with the add order used here (faces must exist when a cell is added),
    // so stage and add in id order after checking targets point downward
    for (size_t id = 0; id < n; ++id) {
        if (dims[id] < 0) throw Error("SCHEMA", "missing cell id " + std::to_string(id));
        for (auto& [t, g] : faces[id]) {
            if (t >= n) throw Error("SCHEMA", "face target out of range");
            if (dims[t] != dims[id] - 1) throw Error("SCHEMA", "face target has wrong dimension");
        }
    }
    for (size_t id = 0; id < n; ++id) cx.add_cell(dims[id], faces[id]);
    cx.validate();
    return cx;
}

// {"cell_map":[[src,dst,[sym...]],...]}
inline Json map_to_json(const CellularMap& m) {
    Json rows = Json::array();
    for (Cell c = 0; c < m.target.size(); ++c) {
        Json sym = Json::array();
        for (int i = 0; i < m.sym[c].dim(); ++i) sym.push_back(static_cast<int>(m.sym[c].s[i]));
        rows.push_back(Json::array({c, m.target[c], sym}));
    }
    return Json{{"schema", KTC_SCHEMA}, {"kind", "cell_map"}, {"cell_map", rows}};
}

inline CellularMap map_from_json(const Json& j, size_t num_cells) {
    CellularMap m;
    m.target.assign(num_cells, CubeComplex::npos);
    m.sym.resize(num_cells);
    for (auto& row : j.at("cell_map")) {
        Cell src = row.at(0).get<Cell>();
        if (src >= num_cells) throw Error("SCHEMA", "map source out of range");
        m.target[src] = row.at(1).get<Cell>();
        SignedPerm g;
        for (auto& x : row.at(2)) g.s.push_back(static_cast<int8_t>(x.get<int>()));
        m.sym[src] = g;
    }
    for (Cell c = 0; c < num_cells; ++c)
        if (m.target[c] == CubeComplex::npos) throw Error("SCHEMA", "map misses cell " + std::to_string(c));
    return m;
}

// ---------------------------------------------------------------------------
// Delta complexes: cells carry ordered face lists d_0..d_n

inline Json delta_to_json(const DeltaComplex& dx) {
    Json cells = Json::array();
    for (uint32_t s = 0; s < dx.size(); ++s) {
        Json faces = Json::array();
        for (size_t i = 0; i < dx.d[s].size(); ++i)
            faces.push_back({{"dir", static_cast<int>(i)}, {"sign", "+"}, {"target", dx.d[s][i]}, {"sym", Json::array()}});
        cells.push_back({{"id", s}, {"dim", dx.dims[s]}, {"faces", faces}});
    }
    return Json{{"schema", KTC_SCHEMA}, {"kind", "delta"}, {"cells", cells}};
}

inline DeltaComplex delta_from_json(const Json& j) {
    if (j.value("kind", "") != "delta") throw Error("SCHEMA", "expected kind \"delta\"");
    DeltaComplex dx;
    size_t n = j.at("cells").size();
    std::vector<int> dims(n, -1);
    std::vector<std::vector<uint32_t>> faces(n);
    for (auto& cell : j.at("cells")) {
        size_t id = cell.at("id").get<size_t>();
        if (id >= n || dims[id] >= 0) throw Error("SCHEMA", "bad cell id");
        dims[id] = cell.at("dim").get<int>();
        faces[id].resize(dims[id] == 0 ? 0 : dims[id] + 1);
        for (auto& f : cell.at("faces")) {
            size_t i = f.at("dir").get<size_t>();
            if (i >= faces[id].size()) throw Error("SCHEMA", "bad delta face index");
            faces[id][i] = f.at("target").get<uint32_t>();
        }
    }
    for (size_t id = 0; id < n; ++id) dx.add_simplex(dims[id], faces[id]);
    dx.validate();
    return dx;
}

// ---------------------------------------------------------------------------
// simplicial complexes: cells listed with explicit vertex sets

inline Json simplicial_to_json(const SimplicialComplex& sx) {
    Json cells = Json::array();
    auto faces = sx.faces;
    std::sort(faces.begin(), faces.end(), [](auto& a, auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (size_t i = 0; i < faces.size(); ++i) {
        Json verts = Json::array();
        for (uint32_t v : faces[i]) verts.push_back(v);
        cells.push_back({{"id", i}, {"dim", faces[i].size() - 1}, {"vertices", verts}});
    }
    return Json{{"schema", KTC_SCHEMA},
                {"kind", "simplicial"},
                {"num_vertices", sx.num_vertices},
                {"cells", cells}};
}

inline SimplicialComplex simplicial_from_json(const Json& j) {
    if (j.value("kind", "") != "simplicial") throw Error("SCHEMA", "expected kind \"simplicial\"");
    SimplicialComplex sx;
    sx.num_vertices = j.at("num_vertices").get<uint32_t>();
    for (auto& cell : j.at("cells")) {
        std::vector<uint32_t> f;
        for (auto& v : cell.at("vertices")) f.push_back(v.get<uint32_t>());
        sx.add_face(f);
    }
    sx.dedup();
    std::string why;
    if (!sx.validate(&why)) throw Error("SCHEMA", why);
    return sx;
}

// ---------------------------------------------------------------------------
// polygons: cube carrier plus boundary/corner annotations

inline Json polygon_to_json(const TessellatedPolygon& p) {
    PolygonComplex pc = to_cube_complex(p);
    Json j = complex_to_json(pc.complex);
    Json boundary = Json::array();
    for (uint32_t v : p.boundary) boundary.push_back(pc.vertex_cell[v]);
    Json corners = Json::array();
    for (size_t pos : p.corner_positions()) corners.push_back(pos);
    Json sides = Json::array();
    for (int64_t l : p.side_lengths()) sides.push_back(l);
    j["polygon"] = Json{{"boundary", boundary}, {"corners", corners}, {"sides", sides}};
    return j;
}

inline TessellatedPolygon polygon_from_json(const Json& j) {
    CubeComplex cx = complex_from_json(j);
    if (!j.contains("polygon")) throw Error("SCHEMA", "missing polygon annotations");
    TessellatedPolygon p;
    // vertices of the carrier are exactly the 0-cells, in id order
    std::vector<uint32_t> vertex_of_cell(cx.num_cells(), UINT32_MAX);
    for (Cell c = 0; c < cx.num_cells(); ++c)
        if (cx.dim(c) == 0) {
            vertex_of_cell[c] = p.num_vertices++;
        }
    auto tables = cx.corner_tables();
    for (Cell c = 0; c < cx.num_cells(); ++c) {
        if (cx.dim(c) != 2) continue;
        const auto& t = tables[c];  // corners indexed 00,10,01,11
        p.squares.push_back({vertex_of_cell[t[0]], vertex_of_cell[t[1]], vertex_of_cell[t[3]],
                             vertex_of_cell[t[2]]});
    }
    for (auto& v : j.at("polygon").at("boundary")) p.boundary.push_back(vertex_of_cell[v.get<Cell>()]);
    for (auto& pos : j.at("polygon").at("corners")) p.corners.push_back(p.boundary[pos.get<size_t>()]);
    validate(p);
    return p;
}

// ---------------------------------------------------------------------------
// homology output

inline Json homology_to_json(const HomologyGroups& h) {
    Json out = Json::array();
    for (size_t k = 0; k < h.groups.size(); ++k) {
        Json tors = Json::array();
        for (auto& t : h.groups[k].torsion) tors.push_back(t.to_string());
        out.push_back({{"degree", k}, {"betti", h.groups[k].betti}, {"torsion", tors}});
    }
    return out;
}

// ---------------------------------------------------------------------------
// the acyclic kit

inline Json kit_to_json(const AcyclicKit& kit) {
    Json a_cells = Json::array();
    for (Cell c : kit.a_cells) a_cells.push_back(c);
    Json j_loop = Json::array();
    for (auto& [e, d] : kit.j_loop) j_loop.push_back(Json::array({e, d}));
    return Json{{"schema", KTC_SCHEMA},
                {"kind", "kit"},
                {"aprime", complex_to_json(kit.aprime)},
                {"tau", map_to_json(kit.tau.map)},
                {"a_cells", a_cells},
                {"a0", kit.a0},
                {"j", j_loop}};
}

inline AcyclicKit kit_from_json(const Json& j) {
    if (j.value("kind", "") != "kit") throw Error("SCHEMA", "expected kind \"kit\"");
    AcyclicKit kit;
    kit.aprime = complex_from_json(j.at("aprime"));
    kit.tau.map = map_from_json(j.at("tau"), kit.aprime.num_cells());
    for (auto& c : j.at("a_cells")) kit.a_cells.push_back(c.get<Cell>());
    kit.a0 = j.at("a0").get<Cell>();
    for (auto& e : j.at("j")) kit.j_loop.push_back({e.at(0).get<Cell>(), e.at(1).get<int>()});
    kit.a_sub = extract_subcomplex(kit.aprime, kit.a_cells);
    kit.dim_a = kit.a_sub.complex.dimension();
    kit.dim_aprime = kit.aprime.dimension();
    kit.validate_structure();
    return kit;
}

// ---------------------------------------------------------------------------
// canonical file emission: fixed key order, two-space indent, one newline

inline std::string dump_canonical(const Json& j) { return j.dump(1) + "\n"; }

inline void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("IO", "cannot write " + path);
    out << dump_canonical(j);
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("IO", "cannot read " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error("SCHEMA", std::string("invalid json: ") + e.what());
    }
    return j;
}

// FNV-1a 64, for pinning fixture digests (not cryptographic)
inline std::string fnv1a_hex(const std::string& bytes) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace ktc
