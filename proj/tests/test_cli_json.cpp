#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ktc/json_io.hpp"
#include "ktc/acyclic_complexes.hpp"
#include "fixtures.hpp"

using namespace ktc;
using namespace ktc_tests;

TEST_CASE("cube complex json round trip is bit identical") {
    for (auto c : {one_square_torus(), one_square_sphere(), single_square(), standard_cube(3)}) {
        Json j = complex_to_json(c);
        std::string s1 = dump_canonical(j);
        CubeComplex back = complex_from_json(j);
        CHECK(back.num_cells() == c.num_cells());
        std::string s2 = dump_canonical(complex_to_json(back));
        CHECK(s1 == s2);
    }
}

TEST_CASE("delta and simplicial json round trip") {
    DeltaComplex d = delta_from_simplicial(boundary_simplex(3));
    Json j = delta_to_json(d);
    DeltaComplex back = delta_from_json(j);
    CHECK(dump_canonical(delta_to_json(back)) == dump_canonical(j));
    CHECK(back.category_c_check());

    SimplicialComplex s = boundary_simplex(3);
    Json js = simplicial_to_json(s);
    SimplicialComplex sb = simplicial_from_json(js);
    CHECK(dump_canonical(simplicial_to_json(sb)) == dump_canonical(js));
}

TEST_CASE("cell map json round trip") {
    CubeComplex sq = single_square();
    CellularMap rot;
    rot.target = {3, 2, 1, 0, 5, 4, 7, 6, 8};
    rot.sym.resize(9);
    for (Cell c = 0; c < 9; ++c) rot.sym[c] = SignedPerm::identity(sq.dim(c));
    for (Cell e = 4; e <= 7; ++e) rot.sym[e] = SignedPerm{{-1}};
    rot.sym[8] = SignedPerm{{-1, -2}};
    rot.validate(sq, sq);
    Json j = map_to_json(rot);
    CellularMap back = map_from_json(j, sq.num_cells());
    back.validate(sq, sq);
    CHECK(back.target == rot.target);
    CHECK(dump_canonical(map_to_json(back)) == dump_canonical(j));
}

TEST_CASE("polygon json round trip keeps sides and curvature") {
    for (auto p : {single_vertex_polygon({2, 2, 1, 2, 1}), fig_octagon()}) {
        Json j = polygon_to_json(p);
        TessellatedPolygon back = polygon_from_json(j);
        CHECK(back.side_lengths() == p.side_lengths());
        CHECK(back.squares.size() == p.squares.size());
        CHECK(gauss_bonnet(back) == gauss_bonnet(p));
        CHECK(dump_canonical(polygon_to_json(back)) == dump_canonical(j));
    }
}

TEST_CASE("kit json round trip") {
    AcyclicKit kit = mock_kit();
    Json j = kit_to_json(kit);
    AcyclicKit back = kit_from_json(j);
    CHECK(back.aprime.num_cells() == kit.aprime.num_cells());
    CHECK(back.a0 == kit.a0);
    CHECK(dump_canonical(kit_to_json(back)) == dump_canonical(j));
}

TEST_CASE("homology text format") {
    HomologyGroups h;
    h.groups.resize(2);
    h.groups[0].betti = 1;
    h.groups[1].betti = 2;
    h.groups[1].torsion = {BigInt(2), BigInt(6)};
    CHECK(h.to_string() == "H_0 = Z\nH_1 = Z^2 + Z/2 + Z/6");
    HomologyGroups z;
    z.groups.resize(1);
    CHECK(z.to_string() == "H_0 = 0");
}

TEST_CASE("digest is deterministic") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("ktc") == fnv1a_hex("ktc"));
    CHECK(fnv1a_hex("a") != fnv1a_hex("b"));
}

TEST_CASE("schema violations are rejected") {
    Json bad = {{"schema", KTC_SCHEMA}, {"kind", "cube"}, {"cells", Json::array()}};
    bad["cells"].push_back({{"id", 0}, {"dim", 1}, {"faces", Json::array()}});
    CHECK_THROWS_AS(complex_from_json(bad), Error);
    Json wrong_kind = {{"schema", KTC_SCHEMA}, {"kind", "delta"}, {"cells", Json::array()}};
    CHECK_THROWS_AS(complex_from_json(wrong_kind), Error);
}

TEST_CASE("shipped fixtures match their manifest digests") {
    Json manifest = read_json_file(FIXTURE_DIR "/manifest.json");
    for (auto& [name, digest] : manifest.at("digests").items()) {
        std::ifstream in(std::string(FIXTURE_DIR "/") + name, std::ios::binary);
        REQUIRE(in.good());
        std::stringstream ss;
        ss << in.rdbuf();
        CHECK(fnv1a_hex(ss.str()) == digest.get<std::string>());
    }
}
