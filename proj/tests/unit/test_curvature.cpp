#include <doctest.h>

#include <random>

#include "coxwalls/covers.hpp"
#include "coxwalls/curvature.hpp"
#include "fixtures.hpp"

using namespace coxwalls;

namespace {

TwoComplex compressed_cover(const CoxeterPresentation& p, const PermutationQuotient& q) {
    return compress(regular_cover(p, q).complex, p);
}

SectionSpec full_link_section(const TwoComplex& k, int x) {
    SectionSpec s{x, {}};
    LinkGraph lg = link(k, x);
    for (int e = 0; e < static_cast<int>(lg.edges.size()); ++e) s.link_edges.push_back(e);
    return s;
}

}  // namespace

TEST_CASE("regular Euclidean angles") {
    TwoComplex hexagon = fixtures::hexagon_complex();
    AngledComplex ac = regular_euclidean_angles(hexagon);
    for (const Rational& a : ac.corner_angle_pi[0]) CHECK(a == Rational(2, 3));

    TwoComplex torus = fixtures::torus_2x2();
    AngledComplex square = regular_euclidean_angles(torus);
    CHECK(square.angle_pi(0, 0) == Rational(1, 2));

    // 2m-gon corner is (1 - 1/m) pi
    CoxeterPresentation p5 = uniform(2, 5);
    PermutationQuotient q5;
    q5.degree = 5;
    q5.generator_images = {{0, 4, 3, 2, 1}, {1, 0, 4, 3, 2}};
    AngledComplex decagon = regular_euclidean_angles(compressed_cover(p5, q5));
    CHECK(decagon.angle_pi(0, 3) == Rational(4, 5));

    // digons are rejected
    TwoComplex with_digon = presentation_complex(uniform(1, 3));
    CHECK_THROWS_AS(regular_euclidean_angles(with_digon), std::invalid_argument);
}

TEST_CASE("cell curvature") {
    // regular Euclidean cells are flat
    for (const TwoComplex& k : {fixtures::hexagon_complex(), fixtures::torus_2x2()}) {
        AngledComplex ac = regular_euclidean_angles(k);
        for (int f = 0; f < k.two_cell_count(); ++f)
            CHECK(cell_curvature_pi(ac, f) == Rational(0));
    }

    // hexagon with all right angles: 2pi - 6 * pi/2 = -pi
    TwoComplex hexagon = fixtures::hexagon_complex();
    AngledComplex ac = regular_euclidean_angles(hexagon);
    ac.corner_angle_pi[0].assign(6, Rational(1, 2));
    CHECK(cell_curvature_pi(ac, 0) == Rational(-1));

    // triangle with angles summing to pi is flat
    TwoComplex triangle(3);
    triangle.add_one_cell(0, 1);
    triangle.add_one_cell(1, 2);
    triangle.add_one_cell(2, 0);
    triangle.add_two_cell({{0, true}, {1, true}, {2, true}});
    AngledComplex tc = regular_euclidean_angles(triangle);
    tc.corner_angle_pi[0] = {Rational(1, 2), Rational(1, 3), Rational(1, 6)};
    CHECK(cell_curvature_pi(tc, 0) == Rational(0));
}

TEST_CASE("vertex curvature convention fixed by the hexagon complex") {
    TwoComplex hexagon = fixtures::hexagon_complex();
    AngledComplex ac = regular_euclidean_angles(hexagon);
    // link: 2 vertices, 1 edge, angle 2pi/3: (2-2)pi + (pi - 2pi/3) = pi/3
    for (int x = 0; x < 6; ++x) CHECK(vertex_curvature_pi(ac, x) == Rational(1, 3));
}

TEST_CASE("isolated vertex has curvature 2 pi") {
    TwoComplex k(1);
    AngledComplex ac;
    ac.base = k;
    CHECK(vertex_curvature_pi(ac, 0) == Rational(2));
}

TEST_CASE("combinatorial Gauss-Bonnet on every fixture") {
    // summing vertex and cell curvatures gives 2 pi chi of the complex
    std::vector<TwoComplex> complexes{fixtures::hexagon_complex(), fixtures::torus_2x2(),
                                      fixtures::osculation_fixture()};
    complexes.push_back(compressed_cover(uniform(3, 3), star_transposition_quotient(3)));
    complexes.push_back(compressed_cover(uniform(3, 4), uniform_dihedral_quotient(3, 4)));
    for (const TwoComplex& k : complexes) {
        AngledComplex ac = regular_euclidean_angles(k);
        Rational total = 0;
        for (int x = 0; x < k.zero_cell_count(); ++x) total += vertex_curvature_pi(ac, x);
        for (int f = 0; f < k.two_cell_count(); ++f) total += cell_curvature_pi(ac, f);
        total.canonicalize();
        CHECK(total == Rational(2 * k.euler_characteristic()));
    }
}

TEST_CASE("vertex curvature of flat covers vanishes") {
    TwoComplex c = compressed_cover(uniform(4, 3), star_transposition_quotient(4));
    AngledComplex ac = regular_euclidean_angles(c);
    for (int x = 0; x < 10; ++x) CHECK(vertex_curvature_pi(ac, x) == Rational(0));
}

TEST_CASE("full-link section curvature equals 2 pi chi") {
    // m = 3 star quotients up to rank 6, dihedral pair quotients for larger
    // m; links of rank-2 covers are single edges, which are not regular
    // sections, so the identity needs r >= 3
    for (int r : {3, 4, 5, 6}) {
        CoxeterPresentation p = uniform(r, 3);
        TwoComplex c = compressed_cover(p, star_transposition_quotient(r));
        AngledComplex ac = regular_euclidean_angles(c);
        CHECK(section_curvature_pi(ac, full_link_section(c, 0)) ==
              2 * euler_characteristic(p));
    }
    // dihedral-quotient covers across the rest of the grid, skipping the two
    // whose groups are larger than a unit test should enumerate
    for (int r : {3, 4, 5, 6})
        for (int m : {4, 5, 6}) {
            if (r == 6 && m >= 5) continue;
            CoxeterPresentation p = uniform(r, m);
            TwoComplex c = compressed_cover(p, uniform_dihedral_quotient(r, m));
            AngledComplex ac = regular_euclidean_angles(c);
            CHECK(section_curvature_pi(ac, full_link_section(c, 0)) ==
                  2 * euler_characteristic(p));
        }
    // rank-2 links are single edges: not regular sections
    CoxeterPresentation p2 = uniform(2, 4);
    TwoComplex c2 = compressed_cover(p2, uniform_dihedral_quotient(2, 4));
    CHECK_THROWS_AS(section_curvature_pi(regular_euclidean_angles(c2),
                                         full_link_section(c2, 0)),
                    std::invalid_argument);
}

TEST_CASE("triangle subgraph of a hexagon-angled link is flat") {
    CoxeterPresentation p = uniform(4, 3);
    TwoComplex c = compressed_cover(p, star_transposition_quotient(4));
    AngledComplex ac = regular_euclidean_angles(c);
    LinkGraph lg = link(c, 0);
    REQUIRE(lg.edges.size() == 6);
    // pick the three corners spanning link vertices {0,1,2}: a triangle
    SectionSpec triangle{0, {}};
    for (int e = 0; e < 6; ++e) {
        const LinkEdge& edge = lg.edges[e];
        if (edge.a <= 2 && edge.b <= 2) triangle.link_edges.push_back(e);
    }
    REQUIRE(triangle.link_edges.size() == 3);
    // (2-3)pi + 3*(pi - 2pi/3) = 0 = 2 pi chi(uniform(3,3))
    CHECK(section_curvature_pi(ac, triangle) == Rational(0));
}

TEST_CASE("irregular sections are rejected") {
    CoxeterPresentation p = uniform(4, 3);
    TwoComplex c = compressed_cover(p, star_transposition_quotient(4));
    AngledComplex ac = regular_euclidean_angles(c);
    // one edge: both endpoints have valence 1
    CHECK_THROWS_AS(section_curvature_pi(ac, SectionSpec{0, {0}}), std::invalid_argument);
    CHECK_THROWS_AS(section_curvature_pi(ac, SectionSpec{0, {}}), std::invalid_argument);
    CHECK_THROWS_AS(section_curvature_pi(ac, SectionSpec{0, {0, 0}}), std::invalid_argument);
}

TEST_CASE("nonpositive sectional curvature via subgroup chi") {
    SectionalVerdict good = has_nonpositive_sectional(uniform(4, 3));
    CHECK(good.nonpositive);
    CHECK(good.dimension_at_most_2);
    CHECK_FALSE(good.witness_subset.has_value());

    SectionalVerdict bad = has_nonpositive_sectional(uniform(5, 3));
    CHECK_FALSE(bad.nonpositive);
    REQUIRE(bad.witness_subset.has_value());
    CHECK(*bad.witness_subset == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(*bad.witness_chi == Rational(1, 6));

    // tree diagram: no connected non-tree subgroup exists
    CoxeterPresentation path(4, {{1, 2, 4}, {2, 3, 4}, {3, 4, 4}});
    CHECK(has_nonpositive_sectional(path).nonpositive);
}

TEST_CASE("brute force sectional maximum agrees in sign") {
    for (int r : {4, 5}) {
        CoxeterPresentation p = uniform(r, 3);
        TwoComplex c = compressed_cover(p, star_transposition_quotient(r));
        AngledComplex ac = regular_euclidean_angles(c);
        auto best = brute_force_sectional_at(ac, 0);
        REQUIRE(best.has_value());
        SectionalVerdict verdict = has_nonpositive_sectional(p);
        CHECK((*best <= 0) == verdict.nonpositive);
        if (r == 4) CHECK(*best == Rational(0));
        if (r == 5) CHECK(*best == Rational(1, 3));  // 2 pi * chi = 2 pi / 6
    }

    // forest link: no regular section at all
    TwoComplex theta = fixtures::theta_graph();
    AngledComplex ac;
    ac.base = theta;
    CHECK_FALSE(brute_force_sectional_at(ac, 0).has_value());
}

TEST_CASE("adding edges to a section increases curvature") {
    CoxeterPresentation p = uniform(5, 3);
    TwoComplex c = compressed_cover(p, star_transposition_quotient(5));
    AngledComplex ac = regular_euclidean_angles(c);
    LinkGraph lg = link(c, 0);
    REQUIRE(lg.edges.size() == 10);

    std::mt19937_64 rng(5150);
    int grown = 0;
    for (int trial = 0; trial < 200; ++trial) {
        // a random regular subgraph and a random extra edge
        std::vector<int> chosen, rest;
        for (int e = 0; e < 10; ++e) (rng() % 2 ? chosen : rest).push_back(e);
        if (rest.empty()) continue;
        SectionSpec small{0, chosen};
        Rational before;
        try {
            before = section_curvature_pi(ac, small);
        } catch (const std::invalid_argument&) {
            continue;  // irregular draw
        }
        SectionSpec bigger{0, chosen};
        bigger.link_edges.push_back(rest[rng() % rest.size()]);
        Rational after;
        try {
            after = section_curvature_pi(ac, bigger);
        } catch (const std::invalid_argument&) {
            continue;
        }
        CHECK(after > before);  // positive deficiency per added edge
        ++grown;
    }
    CHECK(grown > 20);
}

TEST_CASE("published sufficient conditions") {
    CHECK(negative_sectional_sufficient(uniform(4, 4)));       // 4 > 3
    CHECK_FALSE(negative_sectional_sufficient(uniform(4, 3)));  // boundary: 3 is not > 3
    CHECK(negative_sectional_sufficient(uniform(3, 4)));       // threshold 3
    CHECK_THROWS_AS(negative_sectional_sufficient(uniform(2, 3)), std::invalid_argument);

    CHECK(locally_quasiconvex_sufficient(uniform(4, 6)));        // 6 >= 6
    CHECK_FALSE(locally_quasiconvex_sufficient(uniform(4, 5)));  // 5 < 6
    CHECK(locally_quasiconvex_sufficient(uniform(3, 5)));        // 5 >= 4.5
    CoxeterPresentation mixed(3, {{1, 2, 3}, {2, 3, 4}});
    CHECK_THROWS_WITH_AS(locally_quasiconvex_sufficient(mixed),
                         "criterion stated for uniform exponent only",
                         std::invalid_argument);
}

TEST_CASE("uniform dihedral quotient is torsion-free for every uniform case") {
    for (int r = 2; r <= 5; ++r)
        for (int m = 2; m <= 8; ++m) {
            PermutationQuotient q = uniform_dihedral_quotient(r, m);
            CHECK(q.degree == 2 * m * r * (r - 1) / 2);
            CHECK(check_torsion_free_kernel(uniform(r, m), q).ok());
        }
    CHECK_THROWS_AS(uniform_dihedral_quotient(1, 3), std::invalid_argument);
}
