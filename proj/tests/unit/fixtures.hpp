#pragma once

#include "coxwalls/covers.hpp"
#include "coxwalls/two_complex.hpp"

namespace coxwalls::fixtures {

// compressed degree-6 cover of the rank-2, exponent-3 presentation:
// 6 vertices, 6 edges, one hexagonal 2-cell
inline TwoComplex hexagon_complex() {
    CoxeterPresentation p = uniform(2, 3);
    PermutationQuotient q;
    q.degree = 3;
    q.generator_images = {transposition(3, 0, 1), transposition(3, 0, 2)};
    return compress(regular_cover(p, q).complex, p);
}

// one square 2-cell with boundary word e f e f (all traversals positive):
// both walls are one-sided and non-embedded
inline TwoComplex square_efef() {
    TwoComplex k(2);
    int e = k.add_one_cell(0, 1);
    int f = k.add_one_cell(1, 0);
    k.add_two_cell({{e, true}, {f, true}, {e, true}, {f, true}});
    return k;
}

// two vertices joined by three edges, no 2-cells
inline TwoComplex theta_graph() {
    TwoComplex k(2);
    k.add_one_cell(0, 1);
    k.add_one_cell(0, 1);
    k.add_one_cell(0, 1);
    return k;
}

// Two hexagons sharing the edge e1, glued so the wall {e1, e4, h} is dual to
// two distinct edges (e1 and h) at the common vertex v2: a self-osculation
// there, while every wall stays embedded and two-sided.
//
// hexagon 1: v1 e1 v2 e2 v3 e3 v4 e4 v5 e5 v6 e6 v1
// hexagon 2: v1 e1 v2 g2 u3 g3 v2 h u5 g5 u6 g6 v1
inline TwoComplex osculation_fixture() {
    TwoComplex k(9);
    // vertices: v1..v6 = 0..5, u3 = 6, u5 = 7, u6 = 8
    int e1 = k.add_one_cell(0, 1);
    int e2 = k.add_one_cell(1, 2);
    int e3 = k.add_one_cell(2, 3);
    int e4 = k.add_one_cell(3, 4);
    int e5 = k.add_one_cell(4, 5);
    int e6 = k.add_one_cell(5, 0);
    int g2 = k.add_one_cell(1, 6);
    int g3 = k.add_one_cell(6, 1);
    int h = k.add_one_cell(1, 7);
    int g5 = k.add_one_cell(7, 8);
    int g6 = k.add_one_cell(8, 0);
    k.add_two_cell({{e1, true}, {e2, true}, {e3, true}, {e4, true}, {e5, true}, {e6, true}});
    k.add_two_cell({{e1, true}, {g2, true}, {g3, true}, {h, true}, {g5, true}, {g6, true}});
    return k;
}

// 2x2 torus grid: 4 vertices, 8 edges, 4 squares. Walls are the two
// horizontal and two vertical lines; all good, and orientation search can
// succeed (direct every line coherently).
inline TwoComplex torus_2x2() {
    TwoComplex k(4);
    auto v = [](int a, int b) { return 2 * (a & 1) + (b & 1); };
    int hcell[2][2], wcell[2][2];
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) hcell[a][b] = k.add_one_cell(v(a, b), v(a + 1, b));
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) wcell[a][b] = k.add_one_cell(v(a, b), v(a, b + 1));
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            k.add_two_cell({{hcell[a][b], true},
                            {wcell[(a + 1) % 2][b], true},
                            {hcell[a][(b + 1) % 2], false},
                            {wcell[a][b], false}});
    return k;
}

}  // namespace coxwalls::fixtures
