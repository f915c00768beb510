#pragma once

// Small hand-built complexes shared across test suites.

#include "ktc/cube_complex.hpp"

namespace ktc_tests {

using namespace ktc;

// torus from one square: both vertical sides to edge b, both horizontal to
// edge a, one vertex
inline CubeComplex one_square_torus() {
    CubeComplex c;
    Cell v = c.add_vertex();
    SignedPerm id0 = SignedPerm::identity(0);
    SignedPerm id1 = SignedPerm::identity(1);
    Cell a = c.add_cell(1, {{v, id0}, {v, id0}});
    Cell b = c.add_cell(1, {{v, id0}, {v, id0}});
    c.add_cell(2, {{b, id1}, {b, id1}, {a, id1}, {a, id1}});
    return c;
}

// sphere from one square: boundary word a a^-1 b b^-1 (bottom folded onto
// the right side, left onto top); vertex links fail to be simplicial
inline CubeComplex one_square_sphere() {
    CubeComplex c;
    Cell p = c.add_vertex();
    Cell q = c.add_vertex();
    Cell r = c.add_vertex();
    SignedPerm id0 = SignedPerm::identity(0);
    SignedPerm id1 = SignedPerm::identity(1);
    SignedPerm fl1{{-1}};
    Cell a = c.add_cell(1, {{p, id0}, {q, id0}});  // a: p -> q
    Cell b = c.add_cell(1, {{p, id0}, {r, id0}});  // b: p -> r
    // slots (1,-),(1,+),(2,-),(2,+) = left, right, bottom, top
    c.add_cell(2, {{b, id1}, {a, fl1}, {a, id1}, {b, fl1}});
    return c;
}

inline CubeComplex single_square() {
    CubeComplex c;
    Cell v00 = c.add_vertex();
    Cell v10 = c.add_vertex();
    Cell v01 = c.add_vertex();
    Cell v11 = c.add_vertex();
    SignedPerm id0 = SignedPerm::identity(0);
    SignedPerm id1 = SignedPerm::identity(1);
    Cell left = c.add_cell(1, {{v00, id0}, {v01, id0}});
    Cell right = c.add_cell(1, {{v10, id0}, {v11, id0}});
    Cell bottom = c.add_cell(1, {{v00, id0}, {v10, id0}});
    Cell top = c.add_cell(1, {{v01, id0}, {v11, id0}});
    c.add_cell(2, {{left, id1}, {right, id1}, {bottom, id1}, {top, id1}});
    return c;
}

} // namespace ktc_tests
