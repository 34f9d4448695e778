#include <doctest.h>

#include <cmath>

#include "coxwalls/probability.hpp"

using namespace coxwalls;

TEST_CASE("p1 is exactly 2^-r") {
    CHECK(p1(4) == Rational(1, 16));
    CHECK(p1(1) == Rational(1, 2));
    for (int r = 1; r <= 30; ++r)
        CHECK(p1(r) == frac(1, int_pow(2, static_cast<unsigned long>(r))));
}

TEST_CASE("p2_bound exact values") {
    CHECK(p2_bound(4, 3) == Rational(147, 128));  // 6 * 1/4 * (7/8)^2; exceeds 1
    CHECK(p2_bound(2, 3) == Rational(1, 4));      // empty product
    // approaches C(r,2)/4 from below as m grows
    for (int r : {3, 4, 6}) {
        Rational limit = frac(binomial(static_cast<unsigned long>(r), 2), 4);
        CHECK(p2_bound(r, 50) < limit);
        CHECK(limit - p2_bound(r, 50) < frac(1, int_pow(2, 90)));
        CHECK(p2_bound(r, 4) > p2_bound(r, 3));  // monotone toward the limit
    }
}

TEST_CASE("total failure bound") {
    CHECK(total_failure_bound(2, 3) == Rational(1));  // 1/2 + 1/2
    for (int r : {2, 3, 5, 9})
        for (int m : {3, 4, 7})
            CHECK(total_failure_bound(r, m) == 2 * (p1(r) + p2_bound(r, m)));
    // eventually strictly decreasing in r (checked exactly well past the hump)
    for (int r = 20; r < 60; ++r)
        CHECK(total_failure_bound(r + 1, 3) < total_failure_bound(r, 3));
}

TEST_CASE("exact small-model failure probabilities") {
    // frozen from the exhaustive bit enumerations (the enumeration is the
    // authority for these: 2^3, 2^6 and 2^10 assignments respectively)
    ExactFailure e23 = exact_failure_small(LinkModel(2, 3));
    CHECK(e23.asc_fails == Rational(3, 8));
    CHECK(e23.desc_fails == Rational(3, 8));
    CHECK(e23.either_fails == Rational(1, 2));  // fails unless exactly one vertex is up
    CHECK(e23.no_ascending_vertex == Rational(1, 4));

    ExactFailure e33 = exact_failure_small(LinkModel(3, 3));
    CHECK(e33.asc_fails == Rational(3, 8));
    CHECK(e33.no_ascending_vertex == Rational(1, 8));

    ExactFailure e43 = exact_failure_small(LinkModel(4, 3));
    CHECK(e43.asc_fails == Rational(205, 512));
    CHECK(e43.either_fails == Rational(21, 32));
    CHECK(e43.no_ascending_vertex == Rational(1, 16));

    CHECK_THROWS_AS(exact_failure_small(LinkModel(7, 3)), std::invalid_argument);  // 28 bits
}

TEST_CASE("exact failure properties across enumerable models") {
    for (auto [r, m] : std::vector<std::pair<int, int>>{
             {2, 3}, {3, 3}, {4, 3}, {2, 4}, {3, 4}, {4, 4}, {2, 12}}) {
        ExactFailure e = exact_failure_small(LinkModel(r, m));
        // P(no ascending vertex) = 2^-r: only the vertex bits matter
        CHECK(e.no_ascending_vertex == p1(r));
        CHECK(e.no_descending_vertex == p1(r));
        // ascending and descending are exchanged by flipping every bit
        CHECK(e.asc_fails == e.desc_fails);
        // the union bound is valid pointwise
        Rational bound = p1(r) + p2_bound(r, m);
        Rational both = total_failure_bound(r, m);
        bool asc_bounded = e.asc_fails <= (bound < 1 ? bound : Rational(1));
        bool either_bounded = e.either_fails <= (both < 1 ? both : Rational(1));
        CHECK(asc_bounded);
        CHECK(either_bounded);
    }
}

TEST_CASE("per-sample structural invariants") {
    BitSource bits(2024);
    for (auto [r, m] : std::vector<std::pair<int, int>>{{2, 3}, {4, 3}, {3, 5}}) {
        LinkModel model(r, m);
        for (int t = 0; t < 400; ++t) {
            LinkSample s = sample_link_model(model, bits);
            int up = 0;
            for (char b : s.bits.vertex_up) up += b ? 1 : 0;
            // ascending and descending vertex sets partition the vertices
            CHECK(s.no_ascending_vertex == (up == 0));
            CHECK(s.no_descending_vertex == (up == r));
            bool all_and_none = (up == r) && (up == 0);
            CHECK_FALSE(all_and_none);
            // the sufficient conditions imply nonempty and connected
            if (s.cond1_ascending && s.cond2_ascending) {
                CHECK(s.ascending.nonempty);
                CHECK(s.ascending.connected);
            }
            if (s.cond1_descending && s.cond2_descending) {
                CHECK(s.descending.nonempty);
                CHECK(s.descending.connected);
            }
            // all bits up: ascending complete, descending empty
            if (up == r) {
                bool all_edges = true;
                for (char b : s.bits.edge_up) all_edges = all_edges && b;
                if (all_edges) {
                    CHECK(s.ascending.connected);
                    CHECK(s.descending.fails());
                }
            }
        }
    }
}

TEST_CASE("all-up and all-down bit patterns") {
    LinkModel model(4, 3);
    WallBits up;
    up.vertex_up.assign(4, 1);
    up.edge_up.assign(6, 1);
    LinkSample s = evaluate_bits(model, up);
    CHECK(s.ascending.nonempty);
    CHECK(s.ascending.connected);  // the complete graph
    CHECK(s.descending.fails());   // no descending vertex at all
    CHECK(s.no_descending_vertex);

    WallBits down;
    down.vertex_up.assign(4, 0);
    down.edge_up.assign(6, 0);
    LinkSample t = evaluate_bits(model, down);
    CHECK(t.descending.connected);
    CHECK(t.ascending.fails());
    CHECK(t.no_ascending_vertex);

    WallBits wrong;
    wrong.vertex_up.assign(3, 0);
    wrong.edge_up.assign(6, 0);
    CHECK_THROWS_AS(evaluate_bits(model, wrong), std::invalid_argument);
}

TEST_CASE("Monte Carlo agrees with the exact enumerations within 4 sigma") {
    for (auto [r, m] : std::vector<std::pair<int, int>>{
             {2, 3}, {3, 3}, {4, 3}, {3, 4}, {2, 12}}) {
        LinkModel model(r, m);
        ExactFailure exact = exact_failure_small(model);
        MonteCarloResult mc = monte_carlo_failure(model, 1'000'000, 991);
        auto close = [&](long count, const Rational& truth) {
            double p = Rational(truth).get_d();
            double tol = 4 * mc.standard_error(count) + 1e-9;
            CHECK(std::abs(mc.estimate(count) - p) < tol);
        };
        close(mc.asc_fail_count, exact.asc_fails);
        close(mc.desc_fail_count, exact.desc_fails);
        close(mc.either_fail_count, exact.either_fails);
        close(mc.no_asc_vertex_count, exact.no_ascending_vertex);
    }
}

TEST_CASE("Monte Carlo determinism") {
    LinkModel model(3, 4);
    MonteCarloResult a = monte_carlo_failure(model, 20000, 7);
    MonteCarloResult b = monte_carlo_failure(model, 20000, 7);
    CHECK(a.asc_fail_count == b.asc_fail_count);
    CHECK(a.either_fail_count == b.either_fail_count);
    MonteCarloResult c = monte_carlo_failure(model, 20000, 8);
    CHECK(a.asc_fail_count != c.asc_fail_count);  // different seed, different stream
}

TEST_CASE("threshold rank: two-sided crossover and pinned regressions") {
    // regression values produced once by the sound interval scan, then pinned
    CHECK(threshold_rank(3, 2) == 1674);
    CHECK(threshold_rank(3, 120) == 14088);
    CHECK(threshold_rank(4, 120) == 69089);

    for (auto [m, q] : std::vector<std::pair<int, long>>{{3, 2}, {3, 120}, {4, 120}}) {
        int r = threshold_rank(m, q);
        CHECK(threshold_inequality_holds(m, q, r));
        CHECK_FALSE(threshold_inequality_holds(m, q, r - 1));
    }
}

TEST_CASE("threshold rank monotonicity") {
    // nondecreasing in m: a larger exponent weakens the per-edge probability,
    // so the exponential decay sets in later (computed, then frozen)
    CHECK(threshold_rank(3, 120) <= threshold_rank(4, 120));
    CHECK(threshold_rank(4, 120) <= threshold_rank(5, 120));
    CHECK(threshold_rank(5, 120) == 317909);
    // nondecreasing in the quotient size at fixed m
    CHECK(threshold_rank(3, 2) <= threshold_rank(3, 120));
    CHECK(threshold_rank(3, 120) <= threshold_rank(3, 720));
    CHECK(threshold_rank(3, 720) == 20019);
}

TEST_CASE("ramsey upper bounds") {
    CHECK(ramsey_upper_bound({3, 3}) == 6);
    CHECK(ramsey_upper_bound({5}) == 5);
    CHECK(ramsey_upper_bound({2, 7}) == 7);
    CHECK(ramsey_upper_bound({2, 2, 9, 2}) == 9);
    CHECK(ramsey_upper_bound({3, 4}) == 10);
    CHECK(ramsey_upper_bound({4, 3}) == 10);  // symmetric
    CHECK(ramsey_upper_bound({3, 3, 3}) == 17);
    // two colors collapse to the central binomial bound: R(n,n) <= C(2n-2, n-1)
    CHECK(ramsey_upper_bound({10, 10}) == binomial(18, 9));
    CHECK_THROWS_AS(ramsey_upper_bound({}), std::invalid_argument);
    CHECK_THROWS_AS(ramsey_upper_bound({1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(ramsey_upper_bound({1000, 1000, 1000}), std::invalid_argument);
}

TEST_CASE("model validation") {
    CHECK_THROWS_AS(LinkModel(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(p2_bound(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(threshold_rank(2, 120), std::invalid_argument);
    CHECK_THROWS_AS(threshold_rank(3, 1), std::invalid_argument);
}
