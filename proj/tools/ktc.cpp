// ktc: build and verify CAT(0) square complexes, acyclic 2-complexes, the
// acyclic pair (A', A) and the cubical Kan-Thurston construction T_X.
//
// Exit codes: 0 = all checks pass, 1 = a mathematical check failed,
// 2 = invalid input or schema.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "ktc/json_io.hpp"
#include "ktc/functor.hpp"
#include "ktc/hyperplanes.hpp"
#include "ktc/acyclic_complexes.hpp"
#include "ktc/rng.hpp"

using namespace ktc;

namespace {

struct Report {
    std::string command;
    Json inputs = Json::array();
    Json checks = Json::array();
    Json data = Json::object();
    bool pass = true;
    bool as_json = false;

    void input(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        inputs.push_back({{"path", path}, {"digest", fnv1a_hex(ss.str())}});
    }
    void check(const std::string& name, bool ok, const std::string& detail = "") {
        pass = pass && ok;
        Json row = {{"name", name}, {"pass", ok}};
        if (!detail.empty()) row["detail"] = detail;
        checks.push_back(row);
        if (!as_json) std::printf("%s %s%s%s\n", ok ? "pass" : "FAIL", name.c_str(),
                                  detail.empty() ? "" : ": ", detail.c_str());
    }
    void note(const std::string& key, const Json& value) {
        data[key] = value;
        if (!as_json) std::printf("%s: %s\n", key.c_str(), value.dump().c_str());
    }
    int finish() {
        if (as_json) {
            Json out = {{"schema", KTC_SCHEMA}, {"command", command}, {"inputs", inputs},
                        {"checks", checks},    {"data", data},       {"pass", pass}};
            std::printf("%s", dump_canonical(out).c_str());
        }
        return pass ? 0 : 1;
    }
};

std::vector<int64_t> parse_lengths(const std::string& csv) {
    std::vector<int64_t> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoll(tok));
    return out;
}

AcyclicKit load_kit(const std::string& spec) {
    if (spec == "mock") return mock_kit();
    if (spec == "genuine") return build_aa_pair().kit;
    return kit_from_json(read_json_file(spec));
}

std::string homology_text(const HomologyGroups& h) {
    return h.to_string();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cube complex constructions and checks"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")->check(CLI::IsMember({"text", "json"}));

    // ---- polygon ----------------------------------------------------------
    auto* polygon = app.add_subcommand("polygon", "tessellated CAT(0) polygons");
    polygon->require_subcommand(1);
    std::string lengths_csv, p_input, p_emit, rect;
    int64_t offset = 0, side = 1, at = 1, times = 1, count = 100;
    uint64_t seed = 2024;
    bool reversed = false, search = false;

    auto* solvek = polygon->add_subcommand("solve-k", "solve l_i = k_i + k_{i+2}");
    solvek->add_option("--lengths", lengths_csv)->required();

    auto* cut = polygon->add_subcommand("corner-cut", "cut corners off a rectangle");
    cut->add_option("--rect", rect, "WxH")->required();
    cut->add_option("--lengths", lengths_csv)->required();
    cut->add_option("--offset", offset);
    cut->add_flag("--reversed", reversed);
    cut->add_flag("--search", search, "try all offsets and both orientations");
    cut->add_option("--emit", p_emit);

    auto* single = polygon->add_subcommand("single-vertex", "one curved vertex from side lengths");
    single->add_option("--lengths", lengths_csv)->required();
    single->add_option("--emit", p_emit);

    auto* pcollar = polygon->add_subcommand("collar", "attach a 1 x l_i rectangle");
    pcollar->add_option("--input", p_input)->required();
    pcollar->add_option("--side", side)->required();
    pcollar->add_option("--emit", p_emit);

    auto* pcollarall = polygon->add_subcommand("collar-all", "collar every side");
    pcollarall->add_option("--input", p_input)->required();
    pcollarall->add_option("--times", times);
    pcollarall->add_option("--emit", p_emit);

    auto* psub = polygon->add_subcommand("subdivide", "cubical subdivision");
    psub->add_option("--input", p_input)->required();
    psub->add_option("--emit", p_emit);

    auto* pins = polygon->add_subcommand("insert-corner", "mark a new corner inside a side");
    pins->add_option("--input", p_input)->required();
    pins->add_option("--side", side)->required();
    pins->add_option("--at", at)->required();
    pins->add_option("--emit", p_emit);

    auto* pcheck = polygon->add_subcommand("check", "validate, curvature and Gauss-Bonnet");
    pcheck->add_option("--input", p_input)->required();

    auto* prandom = polygon->add_subcommand("random", "seeded random constructor chains");
    prandom->add_option("--seed", seed);
    prandom->add_option("--count", count);

    // ---- make --------------------------------------------------------------
    auto* make = app.add_subcommand("make", "the explicit complexes");
    make->require_subcommand(1);
    int yn_n = 8, petal = 4, fewN = 1;
    std::string m_emit, m_emit_tau;
    auto* myn = make->add_subcommand("yn", "pentagon complex Y(n)");
    myn->add_option("--n", yn_n)->required();
    myn->add_option("--petal", petal);
    myn->add_option("--emit", m_emit);
    auto* macycone = make->add_subcommand("acycone", "the six-relator acyclic square complex");
    macycone->add_option("--emit", m_emit);
    auto* macyctwo = make->add_subcommand("acyctwo", "the octagon complex with involution");
    macyctwo->add_option("--emit", m_emit);
    macyctwo->add_option("--emit-tau", m_emit_tau);
    auto* mfewquot = make->add_subcommand("fewquot", "the no-small-quotient family");
    mfewquot->add_option("--N", fewN)->required();
    mfewquot->add_option("--emit", m_emit);
    auto* moct = make->add_subcommand("octagon", "the pinned CAT(0) octagon");
    moct->add_option("--emit", m_emit);
    auto* mkit = make->add_subcommand("kit", "the acyclic pair (A', A) with involution");
    mkit->add_option("--emit", m_emit);

    // ---- kt ----------------------------------------------------------------
    auto* kt = app.add_subcommand("kt", "the Kan-Thurston construction");
    kt->require_subcommand(1);
    std::string kit_spec = "mock", kt_input, kt_emit, kt_emit_u, kt_emit_tau;
    auto* ktbuild = kt->add_subcommand("build", "build T_X (and U_X) from a Delta complex");
    ktbuild->add_option("--kit", kit_spec, "mock, genuine, or a kit json file");
    ktbuild->add_option("--input", kt_input)->required();
    ktbuild->add_option("--emit", kt_emit);
    ktbuild->add_option("--emit-u", kt_emit_u);
    ktbuild->add_option("--emit-tau", kt_emit_tau);
    auto* ktverify = kt->add_subcommand("verify", "filtration, link condition and dimension law");
    ktverify->add_option("--kit", kit_spec);
    ktverify->add_option("--input", kt_input)->required();

    // ---- geo ---------------------------------------------------------------
    auto* geo = app.add_subcommand("geo", "hyperplanes, half-spaces, hulls, fixed points");
    geo->require_subcommand(1);
    std::string g_input, g_map, g_emit, verts_csv;
    int64_t g_pair = 0, g_from = 0, g_to = 0;
    auto* ghyp = geo->add_subcommand("hyperplanes", "hyperplane pairs");
    ghyp->add_option("--input", g_input)->required();
    auto* ghalf = geo->add_subcommand("halfspaces", "the two sides of a pair");
    ghalf->add_option("--input", g_input)->required();
    ghalf->add_option("--pair", g_pair)->required();
    auto* gdist = geo->add_subcommand("distance", "skeleton distance and separating pairs");
    gdist->add_option("--input", g_input)->required();
    gdist->add_option("--from", g_from)->required();
    gdist->add_option("--to", g_to)->required();
    auto* ghull = geo->add_subcommand("hull", "combinatorial convex hull");
    ghull->add_option("--input", g_input)->required();
    ghull->add_option("--vertices", verts_csv)->required();
    ghull->add_option("--emit", g_emit);
    auto* gfix = geo->add_subcommand("fixed-point", "invariant cube of an automorphism group");
    gfix->add_option("--input", g_input)->required();
    gfix->add_option("--map", g_map)->required();

    // ---- homology -----------------------------------------------------------
    auto* hom = app.add_subcommand("homology", "integral cellular homology");
    std::string h_input;
    bool h_reduced = false;
    hom->add_option("--input", h_input)->required();
    hom->add_flag("--reduced", h_reduced);

    // ---- check ---------------------------------------------------------------
    auto* chk = app.add_subcommand("check", "structural checks");
    chk->require_subcommand(1);
    std::vector<std::string> c_inputs;
    auto* cgromov = chk->add_subcommand("gromov", "all vertex links flag simplicial");
    cgromov->add_option("--input", c_inputs)->required();
    auto* ccub = chk->add_subcommand("cubicality", "cubes embed, intersections are faces");
    ccub->add_option("--input", c_inputs)->required();
    auto* cdelta = chk->add_subcommand("delta", "semi-simplicial identities and category C");
    cdelta->add_option("--input", c_inputs)->required();
    auto* cflag = chk->add_subcommand("flag", "flag condition of a simplicial complex");
    cflag->add_option("--input", c_inputs)->required();

    // ---- corpus ---------------------------------------------------------------
    auto* corpus = app.add_subcommand("corpus", "emit the fixture corpus and its manifest");
    std::string corpus_out = "fixtures";
    bool heavy = false;
    corpus->add_option("--out", corpus_out);
    corpus->add_flag("--heavy", heavy, "also emit the genuine kit (large)");

    CLI11_PARSE(app, argc, argv);

    Report rep;
    rep.as_json = (format == "json");

    try {
        // ------------------------------------------------------- polygon
        if (solvek->parsed()) {
            rep.command = "polygon solve-k";
            SolveKResult r = solve_k(parse_lengths(lengths_csv));
            const char* names[] = {"ok", "underdetermined-ok", "non-integral", "negative",
                                   "bad-zero-pattern", "infeasible-conditions"};
            rep.note("status", names[r.status]);
            if (r.feasible()) rep.note("k", Json(r.k));
            rep.check("solvable", r.feasible());
            return rep.finish();
        }
        auto emit_polygon = [&](const TessellatedPolygon& p) {
            if (!p_emit.empty()) write_json_file(p_emit, polygon_to_json(p));
            rep.note("sides", Json(p.side_lengths()));
            rep.note("squares", p.squares.size());
        };
        if (cut->parsed()) {
            rep.command = "polygon corner-cut";
            auto x = rect.find('x');
            if (x == std::string::npos) throw Error("SCHEMA", "--rect expects WxH");
            int64_t w = std::stoll(rect.substr(0, x)), h = std::stoll(rect.substr(x + 1));
            auto lengths = parse_lengths(lengths_csv);
            if (!search) {
                TessellatedPolygon p = corner_cut_rectangle(w, h, lengths, offset, reversed);
                emit_polygon(p);
                rep.check("cat0", is_cat0_polygon(p).cat0);
            } else {
                bool found = false;
                for (int64_t off = 0; off < 2 * (w + h) && !found; ++off)
                    for (int rv = 0; rv < 2 && !found; ++rv) {
                        try {
                            TessellatedPolygon p = corner_cut_rectangle(w, h, lengths, off, rv);
                            emit_polygon(p);
                            rep.note("offset", off);
                            rep.note("reversed", static_cast<bool>(rv));
                            found = true;
                        } catch (const Error&) {
                        }
                    }
                rep.check("realized", found);
            }
            return rep.finish();
        }
        if (single->parsed()) {
            rep.command = "polygon single-vertex";
            TessellatedPolygon p = single_vertex_polygon(parse_lengths(lengths_csv));
            emit_polygon(p);
            rep.check("cat0", is_cat0_polygon(p).cat0);
            return rep.finish();
        }
        if (pcollar->parsed() || pcollarall->parsed() || psub->parsed() || pins->parsed() || pcheck->parsed()) {
            rep.input(p_input);
            TessellatedPolygon p = polygon_from_json(read_json_file(p_input));
            if (pcollar->parsed()) {
                rep.command = "polygon collar";
                p = collar(p, static_cast<size_t>(side));
            } else if (pcollarall->parsed()) {
                rep.command = "polygon collar-all";
                p = collar_all_iter(p, static_cast<int>(times));
            } else if (psub->parsed()) {
                rep.command = "polygon subdivide";
                p = subdivide_polygon(p);
            } else if (pins->parsed()) {
                rep.command = "polygon insert-corner";
                p = insert_corner(p, static_cast<size_t>(side), at);
            } else {
                rep.command = "polygon check";
            }
            emit_polygon(p);
            rep.check("valid-disc", true);
            rep.check("gauss-bonnet", gauss_bonnet(p) == 4 - static_cast<int64_t>(p.n()));
            Cat0Result c = is_cat0_polygon(p);
            rep.note("positive_curvature_vertices", Json(c.positive_vertices));
            rep.check("cat0", c.cat0);
            return rep.finish();
        }
        if (prandom->parsed()) {
            rep.command = "polygon random";
            Rng rng(seed);
            int64_t built = 0;
            for (int64_t i = 0; i < count; ++i) {
                std::vector<int64_t> k(5 + rng.below(4));
                for (auto& x : k) x = rng.range(1, 4);
                TessellatedPolygon p = single_vertex_polygon_from_k(k);
                for (int s = 0; s < 3; ++s) p = collar(p, 1 + rng.below(p.n()));
                if (gauss_bonnet(p) != 4 - static_cast<int64_t>(p.n())) {
                    rep.check("gauss-bonnet", false);
                    return rep.finish();
                }
                ++built;
            }
            rep.note("built", built);
            rep.check("gauss-bonnet", true);
            return rep.finish();
        }

        // ------------------------------------------------------- make
        auto emit_complex = [&](const CubeComplex& c) {
            if (!m_emit.empty()) write_json_file(m_emit, complex_to_json(c));
            rep.note("cells", c.num_cells());
        };
        if (myn->parsed()) {
            rep.command = "make yn";
            PresentationComplexResult r = y_n(yn_n, petal);
            if (petal == 2) rep.note("note", "petal length 2: only the universal cover is CAT(0)");
            emit_complex(r.complex);
            rep.check("built", true);
            return rep.finish();
        }
        if (macycone->parsed()) {
            rep.command = "make acycone";
            PresentationComplexResult r = acycone_complex();
            emit_complex(r.complex);
            rep.check("built", true);
            return rep.finish();
        }
        if (macyctwo->parsed()) {
            rep.command = "make acyctwo";
            OctagonComplexResult r = octagon_complex();
            emit_complex(r.built.complex);
            if (!m_emit_tau.empty()) write_json_file(m_emit_tau, map_to_json(r.tau.map));
            rep.check("built", true);
            return rep.finish();
        }
        if (mfewquot->parsed()) {
            rep.command = "make fewquot";
            PresentationComplexResult r = presentation_complex(fewquot_spec(fewN));
            emit_complex(r.complex);
            rep.check("built", true);
            return rep.finish();
        }
        if (moct->parsed()) {
            rep.command = "make octagon";
            TessellatedPolygon p = fig_octagon();
            if (!m_emit.empty()) write_json_file(m_emit, polygon_to_json(p));
            rep.note("sides", Json(p.side_lengths()));
            rep.check("built", true);
            return rep.finish();
        }
        if (mkit->parsed()) {
            rep.command = "make kit";
            KitBuildResult kb = build_aa_pair();
            if (!m_emit.empty()) write_json_file(m_emit, kit_to_json(kb.kit));
            rep.note("aprime_cells", kb.kit.aprime.num_cells());
            rep.note("a_cells", kb.kit.a_cells.size());
            rep.check("built", true);
            return rep.finish();
        }

        // ------------------------------------------------------- kt
        if (ktbuild->parsed() || ktverify->parsed()) {
            rep.command = ktbuild->parsed() ? "kt build" : "kt verify";
            rep.input(kt_input);
            DeltaComplex X = delta_from_json(read_json_file(kt_input));
            AcyclicKit kit = load_kit(kit_spec);
            KtOptions opts;
            opts.want_u = ktbuild->parsed() ? !kt_emit_u.empty() : false;
            KtResult r = kt_build(kit, X, opts);
            rep.note("t_cells", r.T.num_cells());
            rep.note("dim_t", r.dim_t);
            if (ktbuild->parsed()) {
                if (!kt_emit.empty()) write_json_file(kt_emit, complex_to_json(r.T));
                if (!kt_emit_u.empty()) write_json_file(kt_emit_u, complex_to_json(r.U));
                if (!kt_emit_tau.empty()) write_json_file(kt_emit_tau, map_to_json(r.tau.map));
                rep.check("built", true);
                return rep.finish();
            }
            FiltrationReport f = filtration_check(r, X);
            rep.check("filtration", f.pass);
            GromovReport g = gromov_check(r.T);
            rep.check("gromov", g.pass);
            int dimX = X.dimension();
            int want = dimX == 2 ? 3 : dimX;
            rep.check("dimension-law", r.dim_t == want,
                      "dim T = " + std::to_string(r.dim_t) + ", expected " + std::to_string(want));
            HomologyGroups hx = homology(chain_complex(X));
            rep.note("homology", homology_to_json(hx));
            return rep.finish();
        }

        // ------------------------------------------------------- geo
        if (ghyp->parsed() || ghalf->parsed() || gdist->parsed() || ghull->parsed() || gfix->parsed()) {
            rep.input(g_input);
            CubeComplex c = complex_from_json(read_json_file(g_input));
            if (ghyp->parsed()) {
                rep.command = "geo hyperplanes";
                HyperplaneDecomposition d = hyperplanes(c);
                rep.note("pairs", d.num_pairs);
                rep.check("two-sided", true);
            } else if (ghalf->parsed()) {
                rep.command = "geo halfspaces";
                HyperplaneDecomposition d = hyperplanes(c);
                if (g_pair < 0 || g_pair >= static_cast<int64_t>(d.num_pairs))
                    throw Error("SCHEMA", "pair index out of range");
                auto hs = d.halfspace_vertices(static_cast<uint32_t>(g_pair));
                rep.note("side0", Json(hs[0]));
                rep.note("side1", Json(hs[1]));
                rep.check("two-sided", true);
            } else if (gdist->parsed()) {
                rep.command = "geo distance";
                HyperplaneDecomposition d = hyperplanes(c);
                int64_t dist = skeleton_distance(c, static_cast<Cell>(g_from), static_cast<Cell>(g_to));
                int64_t sep = separating_pairs(d, static_cast<Cell>(g_from), static_cast<Cell>(g_to));
                rep.note("distance", dist);
                rep.note("separating_pairs", sep);
                rep.check("distance-equals-separating-pairs", dist == sep);
            } else if (ghull->parsed()) {
                rep.command = "geo hull";
                std::vector<Cell> vs;
                for (int64_t v : parse_lengths(verts_csv)) vs.push_back(static_cast<Cell>(v));
                std::vector<Cell> hull = convex_hull(c, vs);
                rep.note("hull_cells", Json(hull));
                if (!g_emit.empty()) write_json_file(g_emit, complex_to_json(extract_subcomplex(c, hull).complex));
                rep.check("convex", is_combinatorially_convex(c, hull));
            } else {
                rep.command = "geo fixed-point";
                CellularMap m = map_from_json(read_json_file(g_map), c.num_cells());
                Cell fp = fixed_point(c, {m});
                rep.note("cell", fp);
                rep.note("dim", c.dim(fp));
                rep.check("found", true);
            }
            return rep.finish();
        }

        // ------------------------------------------------------- homology
        if (hom->parsed()) {
            rep.command = "homology";
            rep.input(h_input);
            Json j = read_json_file(h_input);
            std::string kind = j.value("kind", "");
            HomologyGroups h;
            if (kind == "cube") h = h_reduced ? reduced_homology(complex_from_json(j)) : homology(complex_from_json(j));
            else if (kind == "delta") {
                ChainComplex cc = chain_complex(delta_from_json(j));
                h = h_reduced ? reduced_homology(cc) : homology(cc);
            } else if (kind == "simplicial") {
                ChainComplex cc = chain_complex(simplicial_from_json(j));
                h = h_reduced ? reduced_homology(cc) : homology(cc);
            } else {
                throw Error("SCHEMA", "unknown kind \"" + kind + "\"");
            }
            if (!rep.as_json) std::printf("%s\n", homology_text(h).c_str());
            rep.note("homology", homology_to_json(h));
            rep.check("computed", true);
            return rep.finish();
        }

        // ------------------------------------------------------- check
        if (cgromov->parsed() || ccub->parsed()) {
            rep.command = cgromov->parsed() ? "check gromov" : "check cubicality";
            size_t workers = 1;
            if (const char* w = std::getenv("KTC_WORKERS")) workers = std::max(1, std::atoi(w));
            std::vector<std::pair<std::string, std::string>> results(c_inputs.size());
            auto run_one = [&](size_t i) {
                try {
                    CubeComplex c = complex_from_json(read_json_file(c_inputs[i]));
                    if (cgromov->parsed()) {
                        GromovReport g = gromov_check(c);
                        std::string detail;
                        if (!g.pass) {
                            auto& f = g.failures.front();
                            detail = "vertex " + std::to_string(f.vertex) +
                                     (f.non_simplicial ? " link not simplicial: " + f.detail
                                                       : " missing clique of size " +
                                                             std::to_string(f.missing_clique.size()));
                        }
                        results[i] = {g.pass ? "pass" : "fail", detail};
                    } else {
                        CubicalityReport cr = cubicality_check(c);
                        std::string detail = std::string("cubes_embed=") + (cr.cubes_embed ? "1" : "0") +
                                             " intersections_are_faces=" + (cr.intersections_are_faces ? "1" : "0") +
                                             " links_simplicial=" + (cr.links_simplicial ? "1" : "0");
                        results[i] = {cr.cubical() ? "pass" : "fail", detail};
                    }
                } catch (const Error& e) {
                    results[i] = {"error", e.what()};
                }
            };
            if (workers <= 1 || c_inputs.size() <= 1) {
                for (size_t i = 0; i < c_inputs.size(); ++i) run_one(i);
            } else {
                std::vector<std::thread> pool;
                std::atomic<size_t> next{0};
                for (size_t t = 0; t < std::min(workers, c_inputs.size()); ++t)
                    pool.emplace_back([&] {
                        for (size_t i = next++; i < c_inputs.size(); i = next++) run_one(i);
                    });
                for (auto& th : pool) th.join();
            }
            for (size_t i = 0; i < c_inputs.size(); ++i) {
                rep.input(c_inputs[i]);
                if (results[i].first == "error") throw Error("SCHEMA", results[i].second);
                rep.check(c_inputs[i], results[i].first == "pass", results[i].second);
            }
            return rep.finish();
        }
        if (cdelta->parsed()) {
            rep.command = "check delta";
            for (auto& path : c_inputs) {
                rep.input(path);
                DeltaComplex d = delta_from_json(read_json_file(path));
                std::string why;
                bool c = d.category_c_check(&why);
                rep.check(path + " category-C", c, why);
            }
            return rep.finish();
        }
        if (cflag->parsed()) {
            rep.command = "check flag";
            for (auto& path : c_inputs) {
                rep.input(path);
                SimplicialComplex s = simplicial_from_json(read_json_file(path));
                FlagResult f = is_flag(s);
                std::string detail;
                if (!f.flag) {
                    detail = "missing clique {";
                    for (size_t i = 0; i < f.witness.size(); ++i)
                        detail += (i ? "," : "") + std::to_string(f.witness[i]);
                    detail += "}";
                }
                rep.check(path, f.flag, detail);
            }
            return rep.finish();
        }

        // ------------------------------------------------------- corpus
        if (corpus->parsed()) {
            rep.command = "corpus";
            std::string dir = corpus_out;
            auto put = [&](const std::string& name, const Json& j) {
                write_json_file(dir + "/" + name, j);
            };
            // hand-built cube complexes
            {
                CubeComplex t;
                Cell v = t.add_vertex();
                SignedPerm id0 = SignedPerm::identity(0), id1 = SignedPerm::identity(1);
                Cell a = t.add_cell(1, {{v, id0}, {v, id0}});
                Cell b = t.add_cell(1, {{v, id0}, {v, id0}});
                t.add_cell(2, {{b, id1}, {b, id1}, {a, id1}, {a, id1}});
                put("torus.json", complex_to_json(t));
            }
            {
                CubeComplex s;
                Cell p = s.add_vertex(), q = s.add_vertex(), r = s.add_vertex();
                (void)q;
                (void)r;
                SignedPerm id0 = SignedPerm::identity(0), id1 = SignedPerm::identity(1);
                SignedPerm fl1{{-1}};
                Cell a = s.add_cell(1, {{0, id0}, {1, id0}});
                Cell b = s.add_cell(1, {{0, id0}, {2, id0}});
                s.add_cell(2, {{b, id1}, {a, fl1}, {a, id1}, {b, fl1}});
                (void)p;
                put("sphere_square.json", complex_to_json(s));
            }
            {
                DeltaComplex dunce;
                uint32_t v = dunce.add_vertex();
                uint32_t e = dunce.add_simplex(1, {v, v});
                dunce.add_simplex(2, {e, e, e});
                put("dunce_hat.json", delta_to_json(dunce));
            }
            {
                DeltaComplex tt;
                uint32_t v = tt.add_vertex();
                uint32_t a = tt.add_simplex(1, {v, v});
                uint32_t b = tt.add_simplex(1, {v, v});
                uint32_t cc = tt.add_simplex(1, {v, v});
                tt.add_simplex(2, {b, cc, a});
                tt.add_simplex(2, {b, cc, a});
                put("torus_delta.json", delta_to_json(tt));
            }
            for (int n = 0; n <= 3; ++n)
                put("delta" + std::to_string(n) + ".json", delta_to_json(delta_from_simplicial(full_simplex(n))));
            put("boundary_delta2.json", delta_to_json(delta_from_simplicial(boundary_simplex(2))));
            put("boundary_delta3.json", delta_to_json(delta_from_simplicial(boundary_simplex(3))));
            put("fig_octagon.json", polygon_to_json(fig_octagon()));
            put("y7.json", complex_to_json(y_n(7).complex));
            put("y8.json", complex_to_json(y_n(8).complex));
            put("acycone.json", complex_to_json(acycone_complex().complex));
            {
                OctagonComplexResult r = octagon_complex();
                put("acyctwo.json", complex_to_json(r.built.complex));
                put("acyctwo_tau.json", map_to_json(r.tau.map));
            }
            if (heavy) {
                KitBuildResult kb = build_aa_pair();
                put("kit.json", kit_to_json(kb.kit));
            }
            // manifest with digests
            Json manifest = Json::object();
            std::vector<std::string> names = {"torus.json", "sphere_square.json", "dunce_hat.json",
                                              "torus_delta.json", "delta0.json", "delta1.json", "delta2.json",
                                              "delta3.json", "boundary_delta2.json", "boundary_delta3.json",
                                              "fig_octagon.json", "y7.json", "y8.json", "acycone.json",
                                              "acyctwo.json", "acyctwo_tau.json"};
            if (heavy) names.push_back("kit.json");
            for (auto& name : names) {
                std::ifstream in(dir + "/" + name, std::ios::binary);
                std::stringstream ss;
                ss << in.rdbuf();
                manifest[name] = fnv1a_hex(ss.str());
            }
            write_json_file(dir + "/manifest.json", Json{{"schema", KTC_SCHEMA}, {"digests", manifest}});
            rep.note("out", dir);
            rep.check("written", true);
            return rep.finish();
        }
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        std::string code = e.code();
        if (code == "SCHEMA" || code == "IO" || code == "BAD_RECT" || code == "BAD_SIDE") return 2;
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
